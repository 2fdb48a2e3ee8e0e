"""Mid-air haptic, gesture-controlled in-vehicle infotainment simulator."""

__version__ = "0.1.0"
