/** Canned kinematic profiles for gestures a mouse cannot perform.
 *  Offsets are relative to the hand position when playback starts.
 *  Regenerate with scripts/make_profiles.py in the repository root.
 */

export interface ProfileFrame {
  t: number;
  dx: number;
  dy: number;
  dz: number;
  normal: number[];
  pinch: number;
  grab: number;
  fingers: boolean[];
}

export interface Profile {
  rate: number;
  frames: ProfileFrame[];
}

export const profiles: Record<"tap" | "twist", Profile> = {
  "tap": {
    "rate": 100.0,
    "frames": [
      {
        "t": 0.0,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.01,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.02,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.03,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.04,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.05,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.06,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.07,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.08,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.09,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.1,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.11,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.12,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.13,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.14,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.15,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.16,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.17,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.18,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.19,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.2,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.21,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.22,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.23,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.24,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.25,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.26,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.27,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.28,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.29,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.3,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.31,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.001160939,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.32,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.004574732,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.33,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.010038407,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.34,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.017227116,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.35,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.025713446,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.36,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.034992832,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.37,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.044513557,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.38,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.053709557,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.39,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.062034072,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.4,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.068992159,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.41,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.074170117,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.42,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.077260084,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.43,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.078078343,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.44,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.076576244,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.45,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.072843095,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.46,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.067100855,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.47,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.059690936,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.48,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.051053903,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.49,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.041703279,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.5,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.032195019,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.51,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.023094445,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.52,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.014942643,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.53,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.008224287,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.54,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.003338826,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.55,
        "dx": 0.0,
        "dy": 0.0,
        "dz": -0.00057673,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.56,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.57,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.58,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.59,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.6,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.61,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.62,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.63,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.64,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.65,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.66,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.67,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.68,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.69,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.7,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.71,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.72,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.73,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.74,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.75,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.76,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.77,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.78,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.79,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.8,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.81,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.82,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.83,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.84,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.85,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      }
    ]
  },
  "twist": {
    "rate": 100.0,
    "frames": [
      {
        "t": 0.0,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.01,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.02,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.03,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.04,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.05,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.06,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.07,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.08,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.09,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.1,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.11,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.12,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.13,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.14,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.15,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.16,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.17,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.18,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.19,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.2,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.21,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.22,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.23,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.24,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.25,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.26,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.27,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.28,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.29,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.3,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.31,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.094108313,
          -0.995561965
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.32,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.187381315,
          -0.982287251
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.33,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.278991106,
          -0.960293686
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.34,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.368124553,
          -0.929776486
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.35,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.4539905,
          -0.891006524
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.36,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.535826795,
          -0.844327926
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.37,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.612907054,
          -0.790155012
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.38,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.684547106,
          -0.728968627
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.39,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.75011107,
          -0.661311865
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.4,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.809016994,
          -0.587785252
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.41,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.860742027,
          -0.509041416
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.42,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.904827052,
          -0.425779292
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.43,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.940880769,
          -0.33873792
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.44,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.968583161,
          -0.248689887
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.45,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.987688341,
          -0.156434465
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.46,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.998026728,
          -0.06279052
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.47,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.99950656,
          0.031410759
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.48,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.992114701,
          0.125333234
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.49,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.975916762,
          0.218143241
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.5,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.951056516,
          0.309016994
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.51,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.917754626,
          0.397147891
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.52,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.87630668,
          0.481753674
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.53,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.827080574,
          0.562083378
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.54,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.770513243,
          0.63742399
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.55,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.707106781,
          0.707106781
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.56,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.63742399,
          0.770513243
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.57,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.562083378,
          0.827080574
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.58,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.481753674,
          0.87630668
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.59,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.397147891,
          0.917754626
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.6,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.309016994,
          0.951056516
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.61,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.218143241,
          0.975916762
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.62,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.125333234,
          0.992114701
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.63,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.031410759,
          0.99950656
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.64,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.06279052,
          0.998026728
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.65,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.156434465,
          0.987688341
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.66,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.248689887,
          0.968583161
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.67,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.33873792,
          0.940880769
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.68,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.425779292,
          0.904827052
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.69,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.509041416,
          0.860742027
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.7,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.587785252,
          0.809016994
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.71,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.661311865,
          0.75011107
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.72,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.728968627,
          0.684547106
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.73,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.790155012,
          0.612907054
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.74,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.844327926,
          0.535826795
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.75,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.891006524,
          0.4539905
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.76,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.929776486,
          0.368124553
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.77,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.960293686,
          0.278991106
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.78,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.982287251,
          0.187381315
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.79,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.995561965,
          0.094108313
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.8,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -1.0,
          -0.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.81,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.995561965,
          -0.094108313
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.82,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.982287251,
          -0.187381315
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.83,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.960293686,
          -0.278991106
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.84,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.929776486,
          -0.368124553
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.85,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.891006524,
          -0.4539905
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.86,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.844327926,
          -0.535826795
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.87,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.790155012,
          -0.612907054
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.88,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.728968627,
          -0.684547106
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.89,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.661311865,
          -0.75011107
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.9,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.587785252,
          -0.809016994
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.91,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.509041416,
          -0.860742027
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.92,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.425779292,
          -0.904827052
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.93,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.33873792,
          -0.940880769
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.94,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.248689887,
          -0.968583161
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.95,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.156434465,
          -0.987688341
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.96,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          -0.06279052,
          -0.998026728
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.97,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.98,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 0.99,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.0,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.01,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.02,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.03,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.04,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.05,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.06,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.07,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.08,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.09,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.1,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.11,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.12,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.13,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.14,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.15,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.16,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.17,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.18,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.19,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.2,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.21,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.22,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.23,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.24,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.25,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      },
      {
        "t": 1.26,
        "dx": 0.0,
        "dy": 0.0,
        "dz": 0.0,
        "normal": [
          0.0,
          0.0,
          -1.0
        ],
        "pinch": 0.0,
        "grab": 0.0,
        "fingers": [
          true,
          true,
          true,
          true,
          true
        ]
      }
    ]
  }
};
