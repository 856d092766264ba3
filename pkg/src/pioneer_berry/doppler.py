"""Order-of-magnitude estimate of the expansion acting on the probe itself.

In coordinates with the expansion scaled out (``R* = chi R``) the probe's
radial velocity picks up a correction ``h R* v*/c^2``; the resulting
one-way Doppler anomaly is a red shift of size ``h t (v*/c)^2``, far below
and opposite in sign to the geometric drift.  Only first-order terms in the
expansion rate are kept, and inputs where that is not justified are refused.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._config import SPEED_OF_LIGHT, TOL
from .exceptions import RegimeError


@dataclass(frozen=True)
class ProbeState:
    r_star: float  # m
    v_star: float  # m/s
    h: float  # 1/s
    c: float = SPEED_OF_LIGHT

    @property
    def t(self) -> float:
        """One-way light time ``R*/c``."""
        return self.r_star / self.c


def _check_regime(p: ProbeState) -> None:
    if abs(p.v_star) / p.c >= TOL.appendix_velocity:
        raise RegimeError(f"|v*|/c = {abs(p.v_star) / p.c:.3g} is not small")
    x = abs(p.h * p.r_star * p.v_star) / p.c**2
    if x > TOL.appendix_regime:
        raise RegimeError(f"|h R* v*/c^2| = {x:.3g} exceeds {TOL.appendix_regime:g}; first order invalid")


def radial_metric_vector(p: ProbeState) -> float:
    """``g* ~ -h R*/c``.  The dropped ``(h R*/c)^2`` term of ``g*_00`` is not restored."""
    _check_regime(p)
    return -p.h * p.r_star / p.c


def velocity_correction(p: ProbeState) -> float:
    """``R*_dot - v*``, kept separate because it sits below the last bit of ``v*``."""
    _check_regime(p)
    return p.v_star * (p.h * p.r_star * p.v_star / p.c**2)


def corrected_radial_velocity(p: ProbeState) -> float:
    """``v* (1 + h R* v*/c^2)``."""
    return p.v_star + velocity_correction(p)


def dynamic_doppler_shift(p: ProbeState, omega: float) -> tuple[float, float]:
    """Received frequency and its anomalous part.

    Returns
    -------
    omega_prime : float
        ``omega (1 - v*/c) - omega h (R*/c)(v*/c)^2``.
    anomalous_fraction : float
        ``-h (R*/c) (v*/c)^2``; negative (a red shift) for ``h, R*, v* > 0``.
    """
    _check_regime(p)
    beta = p.v_star / p.c
    frac = -p.h * p.t * beta**2
    return omega * (1.0 - beta) + omega * frac, frac


def light_delay_estimate(h: float, R: float, v_probe: float, c: float = SPEED_OF_LIGHT) -> float:
    """``-h (R/c)(v/c)^2`` written with the Doppler delay ``R/c``."""
    return -h * (R / c) * (v_probe / c) ** 2


def dynamic_to_geometric_ratio(p: ProbeState) -> float:
    """``|dynamic| / |geometric|`` over the same light time, with ``chidot = h``."""
    _, frac = dynamic_doppler_shift(p, 1.0)
    geometric = p.h * p.t
    return abs(frac) / abs(geometric)
