from pathlib import Path

from midair_ivis.cli import main
from midair_ivis.gesture_engine import RecognizerConfig

GOLDEN = Path(__file__).resolve().parent.parent / "assets" / "golden"


def test_print_config(capsys):
    assert main(["--print-config"]) == 0
    out = capsys.readouterr().out
    assert RecognizerConfig.from_text(out) == RecognizerConfig()
    assert "debounce=2.0" in out


def test_no_command_usage_error(capsys):
    assert main([]) == 2


def test_synth_then_run(tmp_path, capsys):
    traj_path = tmp_path / "tap.traj"
    assert main(["synth", "tap", "--out", str(traj_path)]) == 0
    (tmp_path / "s.scenario").write_text(
        "0.0 play tap.traj\n1.0 expect media.playing=true\n")
    assert main(["run", str(tmp_path / "s.scenario")]) == 0


def test_run_failing_expect_exit_1(tmp_path):
    (tmp_path / "s.scenario").write_text("0.0 expect temperature=27\n")
    assert main(["run", str(tmp_path / "s.scenario")]) == 1


def test_run_missing_file_exit_2(tmp_path):
    assert main(["run", str(tmp_path / "nope.scenario")]) == 2


def test_run_golden_report(tmp_path, capsys):
    out = tmp_path / "report.txt"
    code = main(["run", str(GOLDEN / "golden.scenario"), "--report", str(out)])
    assert code == 0
    assert out.read_text() == (GOLDEN / "expected_report.txt").read_text()


def test_score_command(tmp_path, capsys):
    (tmp_path / "labels.txt").write_text("1.0 Tap\n2.0 Swipe\n")
    (tmp_path / "events.txt").write_text("1.1 Tap\n")
    assert main(["score", str(tmp_path / "labels.txt"),
                 str(tmp_path / "events.txt")]) == 0
    out = capsys.readouterr().out
    assert "precision 1.0" in out
    assert "recall 0.5" in out


def test_field_csv(tmp_path):
    out = tmp_path / "field.csv"
    code = main(["field", "--focus", "0,0,0.2", "--plane", "z=0.2",
                 "--res", "5", "--extent", "0.04", "--out", str(out)])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith(",")
    assert len(lines) == len(lines[0].split(","))


def test_haptics_export(tmp_path):
    out = tmp_path / "open.txt"
    assert main(["haptics", "OpenCircle", "--out", str(out)]) == 0
    rows = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert len(rows) > 1000
    assert rows[0].split()[-1] == "STM"
