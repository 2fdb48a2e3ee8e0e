import math

import numpy as np
import pytest

from midair_ivis.acoustic_field import (PhaseSolution, PlaneSpec,
                                        TransducerArray, am_envelope,
                                        coherent_sum, field_csv, field_grid,
                                        grid_array, pressure_at,
                                        pressure_at_many, render_timeline,
                                        solve_focus)
from midair_ivis.haptic_patterns import EnvelopeMode, FocalSample


def single_element(pos=(0.0, 0.0, 0.0)):
    return TransducerArray(elements=np.asarray([pos]))


class TestSolveFocus:
    def test_single_element_one_wavelength(self):
        # r exactly lambda -> k*r = 2*pi -> phase 0
        arr = single_element()
        focal = (0.0, 0.0, arr.wavelength)
        sol = solve_focus(arr, focal)
        assert sol.phases[0] == pytest.approx(0.0, abs=1e-9)

    def test_equidistant_elements_equal_phases(self):
        arr = TransducerArray(elements=np.asarray([[-0.01, 0.0, 0.0],
                                                   [0.01, 0.0, 0.0]]))
        sol = solve_focus(arr, (0.0, 0.0, 0.2))
        assert sol.phases[0] == pytest.approx(sol.phases[1], abs=1e-12)

    def test_phases_canonical_range(self):
        arr = grid_array()
        sol = solve_focus(arr, (0.013, -0.027, 0.22))
        assert np.all(sol.phases >= 0.0)
        assert np.all(sol.phases < 2.0 * math.pi)

    def test_focal_at_element_rejected(self):
        with pytest.raises(ValueError, match="coincides"):
            solve_focus(single_element(), (0.0, 0.0, 0.0))

    def test_wavelength_default(self):
        assert grid_array().wavelength == pytest.approx(0.008575)


class TestPressure:
    def test_focus_equals_coherent_sum_oracle(self):
        arr = grid_array()
        focal = (0.01, -0.02, 0.25)
        sol = solve_focus(arr, focal)
        p = pressure_at(arr, sol, focal)
        assert abs(p) == pytest.approx(coherent_sum(arr, focal), rel=1e-9)

    def test_single_element_inverse_distance(self):
        arr = single_element()
        sol = PhaseSolution(phases=np.asarray([0.0]))
        p = pressure_at(arr, sol, (0.0, 0.0, 0.5))
        assert abs(p) == pytest.approx(1.0 / 0.5, rel=1e-12)

    def test_zero_amplitudes_null_field(self):
        arr = TransducerArray(elements=np.zeros((4, 3)) + [[0, 0, 0],
                                                           [0.01, 0, 0],
                                                           [0, 0.01, 0],
                                                           [0.01, 0.01, 0]],
                              amplitudes=np.zeros(4))
        sol = solve_focus(arr, (0.0, 0.0, 0.2))
        assert pressure_at(arr, sol, (0.0, 0.0, 0.2)) == 0.0

    def test_solved_phases_beat_random_phases(self):
        arr = grid_array()
        rng = np.random.default_rng(7)
        focal = (0.03, 0.01, 0.3)
        best = abs(pressure_at(arr, solve_focus(arr, focal), focal))
        for _ in range(200):
            random_sol = PhaseSolution(
                phases=rng.uniform(0.0, 2.0 * math.pi - 1e-9, len(arr.elements)))
            assert abs(pressure_at(arr, random_sol, focal)) <= best

    def test_translation_reciprocity(self):
        arr = grid_array()
        focal = (0.0, 0.01, 0.22)
        offset = np.asarray([0.05, -0.03, 0.07])
        moved = TransducerArray(elements=arr.elements + offset)
        f2 = tuple(np.asarray(focal) + offset)
        p1 = abs(pressure_at(arr, solve_focus(arr, focal), focal))
        p2 = abs(pressure_at(moved, solve_focus(moved, f2), f2))
        assert p1 == pytest.approx(p2, rel=1e-9)


class TestFieldGrid:
    def test_argmax_near_requested_focus(self):
        arr = grid_array()
        focal = (0.0, 0.0, 0.20)
        sol = solve_focus(arr, focal)
        plane = PlaneSpec(axis="z", value=0.20, u_range=(-0.05, 0.05),
                          v_range=(-0.05, 0.05), nu=101, nv=101)
        grid = field_grid(arr, sol, plane)
        assert math.dist(grid.argmax_pos, focal) <= arr.wavelength / 2.0

    def test_symmetric_array_symmetric_grid(self):
        arr = grid_array()
        sol = solve_focus(arr, (0.0, 0.0, 0.2))
        plane = PlaneSpec(axis="z", value=0.2, u_range=(-0.04, 0.04),
                          v_range=(-0.04, 0.04), nu=41, nv=41)
        grid = field_grid(arr, sol, plane)
        np.testing.assert_allclose(grid.magnitude, grid.magnitude[::-1, :],
                                   rtol=1e-9)

    def test_minimal_resolution_shape(self):
        arr = single_element()
        sol = PhaseSolution(phases=np.asarray([0.0]))
        plane = PlaneSpec(axis="z", value=0.2, u_range=(-0.01, 0.01),
                          v_range=(-0.01, 0.01), nu=2, nv=2)
        assert field_grid(arr, sol, plane).magnitude.shape == (2, 2)

    def test_degenerate_plane_rejected(self):
        with pytest.raises(ValueError):
            PlaneSpec(axis="z", value=0.2, u_range=(0.0, 0.0),
                      v_range=(-0.01, 0.01), nu=2, nv=2)
        with pytest.raises(ValueError):
            PlaneSpec(axis="z", value=0.2, u_range=(-0.01, 0.01),
                      v_range=(-0.01, 0.01), nu=1, nv=2)

    def test_csv_layout(self):
        arr = single_element()
        sol = PhaseSolution(phases=np.asarray([0.0]))
        plane = PlaneSpec(axis="z", value=0.2, u_range=(-0.01, 0.01),
                          v_range=(-0.01, 0.01), nu=2, nv=2)
        csv = field_csv(field_grid(arr, sol, plane))
        lines = csv.strip().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith(",")
        assert len(lines[1].split(",")) == 3


class TestAmEnvelope:
    def test_trough_at_zero(self):
        assert am_envelope(0.0) == 0.0

    def test_peak_at_half_period(self):
        assert am_envelope(1.0 / 400.0) == pytest.approx(1.0)

    def test_full_period(self):
        assert am_envelope(1.0 / 200.0) == pytest.approx(0.0, abs=1e-12)

    def test_bounds_and_periodicity(self):
        for i in range(200):
            t = i * 0.00037
            e = am_envelope(t)
            assert 0.0 <= e <= 1.0 + 1e-12
            assert am_envelope(t + 0.005) == pytest.approx(e, abs=1e-9)


class TestRenderTimeline:
    def test_anchor_sample_composition(self):
        arr = grid_array()
        sample = FocalSample(t=0.1, pos=(0.0, 0.0, 0.20), intensity=0.2,
                             envelope_mode=EnvelopeMode.STM)
        [(t, sol, drive)] = render_timeline(arr, [sample])
        assert t == 0.1
        assert drive == 0.2
        np.testing.assert_allclose(
            sol.phases, solve_focus(arr, (0.0, 0.0, 0.20)).phases)

    def test_empty_list(self):
        assert render_timeline(grid_array(), []) == []

    def test_am_trough_zero_drive(self):
        sample = FocalSample(t=0.0, pos=(0.0, 0.0, 0.2), intensity=0.9,
                             envelope_mode=EnvelopeMode.AM_200HZ)
        [(_, _, drive)] = render_timeline(grid_array(), [sample])
        assert drive == 0.0

    def test_out_of_order_rejected(self):
        s1 = FocalSample(t=0.2, pos=(0, 0, 0.2), intensity=1.0,
                         envelope_mode=EnvelopeMode.STM)
        s2 = FocalSample(t=0.1, pos=(0, 0, 0.2), intensity=1.0,
                         envelope_mode=EnvelopeMode.STM)
        with pytest.raises(ValueError, match="out-of-order"):
            render_timeline(grid_array(), [s1, s2])
