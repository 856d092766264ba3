"""Shared physical constants and numerical tolerances."""

from dataclasses import dataclass

SPEED_OF_LIGHT = 299_792_458.0  # m/s
ASTRONOMICAL_UNIT = 1.495978707e11  # m
JULIAN_YEAR = 3.15576e7  # s


@dataclass(frozen=True)
class Tolerances:
    """Single source of truth for every numerical threshold in the package."""

    norm: float = 1e-12
    pole: float = 1e-12
    orthogonal: float = 1e-9
    degenerate_cos: float = 1e-12
    adiabatic_warn: float = 1e-3
    adiabatic_max: float = 0.1
    appendix_regime: float = 1e-6
    appendix_velocity: float = 1e-2


TOL = Tolerances()
