"""Unit conversion helpers.

Everything inside the package is SI (N, m, rad, s). Configuration files and
CLI flags use bench units (N/mm, mm, deg, ms); these helpers live at that
boundary.
"""

import math

GRAVITY = 9.81  # m/s^2


def n_per_mm_to_si(k: float) -> float:
    return k * 1000.0


def si_to_n_per_mm(k: float) -> float:
    return k / 1000.0


def mm_to_m(x: float) -> float:
    return x / 1000.0


def m_to_mm(x: float) -> float:
    return x * 1000.0


def deg_to_rad(a: float) -> float:
    return math.radians(a)


def rad_to_deg(a: float) -> float:
    return math.degrees(a)


def ms_to_s(t: float) -> float:
    return t / 1000.0
