"""Berry and Pancharatnam phases, and spherical-polygon solid angles.

Three independent routes to the geometric phase live here: the connection
integral over fibre coordinates, the closed form ``cos(theta) dphi / 2`` for
the section, and the discrete overlap product of a sampled state sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._config import TOL
from .evolution import EvolutionTrajectory, RoundTripScenario, ScaleFactorModel, check_adiabatic
from .exceptions import BranchError, InvalidInputError, UndefinedPhaseError
from .hopf import FiberCoordinates
from .spinor import PoincarePoint, PolarizationSpinor, overlaps, spinor_from_point


@dataclass(frozen=True)
class GeometricPhaseResult:
    gamma_numeric: float
    gamma_analytic: float
    solid_angle: Optional[float] = None

    @property
    def residual(self) -> float:
        return abs(self.gamma_numeric - self.gamma_analytic)


@dataclass(frozen=True)
class StateSequence:
    """Ordered states; ``closed`` identifies the last state with the first."""

    states: np.ndarray
    closed: bool = True

    def __post_init__(self):
        arr = np.asarray(self.states, dtype=complex)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidInputError(f"expected (n, 2) spinor array, got shape {arr.shape}")
        if len(arr) < 2:
            raise InvalidInputError("need at least two states")
        object.__setattr__(self, "states", arr)

    @classmethod
    def from_spinors(cls, spinors: Sequence[PolarizationSpinor], closed: bool = True) -> "StateSequence":
        return cls(np.array([s.as_array() for s in spinors]), closed=closed)

    def links(self) -> np.ndarray:
        """Overlaps ``<psi_k|psi_{k+1}>``, including the closing link if closed."""
        a = self.states
        b = np.roll(a, -1, axis=0) if self.closed else a[1:]
        a = a if self.closed else a[:-1]
        return overlaps(a, b)


@dataclass(frozen=True)
class HelicityPhase:
    exact: float
    first_order: float

    @property
    def gap(self) -> float:
        return abs(self.exact - self.first_order)


def berry_phase_integral(path: Sequence[FiberCoordinates]) -> float:
    """``-int cos^2(theta/2) dbeta + sin^2(theta/2) dpsi`` by the trapezoid rule.

    Raises
    ------
    BranchError
        If ``beta`` or ``psi`` jumps by pi or more between samples.
    """
    if len(path) < 2:
        return 0.0
    theta = np.array([f.theta for f in path])
    beta = np.array([f.beta for f in path])
    psi = np.array([f.psi for f in path])
    dbeta, dpsi = np.diff(beta), np.diff(psi)
    if np.any(np.abs(dbeta) >= np.pi) or np.any(np.abs(dpsi) >= np.pi):
        raise BranchError("fibre path jumps by >= pi between samples; unwrap or refine it")
    c2 = np.cos(theta / 2) ** 2
    s2 = np.sin(theta / 2) ** 2
    integrand = 0.5 * (c2[:-1] + c2[1:]) * dbeta + 0.5 * (s2[:-1] + s2[1:]) * dpsi
    return float(-np.sum(integrand))


def berry_phase_analytic(theta: float, delta_phi: float) -> float:
    return float(np.cos(theta) * delta_phi / 2)


def helicity_phase(helicity: int, s: RoundTripScenario, m: ScaleFactorModel) -> HelicityPhase:
    """Section Berry phase of a circular state and its first-order form.

    ``exact`` is ``+/- dphi/2`` with ``dphi = -2 (omega/c) R (chi(T) - 1)``;
    ``first_order`` is ``-/+ (omega/c) R chidot T``.
    """
    if helicity not in (1, -1):
        raise InvalidInputError("helicity must be +1 or -1")
    check_adiabatic(s, m)
    k = s.omega_r_over_c
    delta_phi = -2.0 * k * float(m.chi_minus_one(s.T))
    return HelicityPhase(
        exact=helicity * delta_phi / 2,
        first_order=-helicity * k * m.rate * s.T,
    )


def connection_phase(states) -> float:
    """``-sum_k arg <psi_k|psi_{k+1}>`` along an open sequence, unwrapped.

    Each link is short, so summing per-link arguments keeps a continuous
    branch even when the total runs to many multiples of 2 pi.
    """
    seq = states if isinstance(states, StateSequence) else StateSequence(states, closed=False)
    links = seq.links()
    _check_links(links)
    return float(-np.sum(np.angle(links)))


def trajectory_berry_phase(traj: EvolutionTrajectory) -> GeometricPhaseResult:
    """Discrete connection phase of an evolved trajectory against ``cos(theta) dphi/2``."""
    return GeometricPhaseResult(
        gamma_numeric=connection_phase(traj.states),
        gamma_analytic=berry_phase_analytic(traj.theta, float(traj.delta_phis[-1])),
    )


def _check_links(links: np.ndarray) -> None:
    small = np.abs(links) <= TOL.orthogonal
    if np.any(small):
        k = int(np.argmax(small))
        raise UndefinedPhaseError(f"states {k} and {k + 1} are orthogonal; relative phase undefined")


def pancharatnam_phase(seq: StateSequence) -> float:
    """Gauge-invariant discrete geometric phase ``-arg prod_k <psi_k|psi_{k+1}>``.

    For a closed sequence this is ``-Omega/2`` (mod 2 pi), ``Omega`` the
    signed solid angle swept on the Poincare sphere.  The product is
    accumulated as a complex number and renormalised as it goes.
    """
    links = seq.links()
    _check_links(links)
    prod = 1.0 + 0j
    for z in links / np.abs(links):
        prod *= z
        prod /= abs(prod)
    return float(-np.angle(prod))


def _unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def _triangle_excess(a, b, c) -> float:
    """Signed area of the geodesic triangle ``abc`` (L'Huilier)."""
    ab = np.arccos(np.clip(np.dot(a, b), -1.0, 1.0))
    bc = np.arccos(np.clip(np.dot(b, c), -1.0, 1.0))
    ca = np.arccos(np.clip(np.dot(c, a), -1.0, 1.0))
    s = 0.5 * (ab + bc + ca)
    prod = np.tan(s / 2) * np.tan((s - ab) / 2) * np.tan((s - bc) / 2) * np.tan((s - ca) / 2)
    excess = 4.0 * np.arctan(np.sqrt(max(prod, 0.0)))
    return float(np.sign(np.dot(a, np.cross(b, c))) * excess)


def solid_angle(vertices: Sequence[PoincarePoint]) -> float:
    """Signed solid angle enclosed by a geodesic polygon on the unit sphere.

    Positive for counter-clockwise traversal seen from outside.  The polygon
    is fanned into triangles from the normalised sum of edge cross products,
    so vertices lying on one great circle are handled.  Of the two regions a
    closed curve bounds, the smaller is reported, giving a value in
    ``(-2 pi, 2 pi]`` that changes sign when the traversal is reversed.  An
    exact hemisphere is ``+2 pi`` when the normal points into the upper half
    space (lexicographically on ``z, y, x``) and ``-2 pi`` otherwise.
    """
    pts = np.array([p.vector for p in vertices])
    if len(pts) < 3:
        raise InvalidInputError("need at least three vertices")
    nxt = np.roll(pts, -1, axis=0)
    normal = np.sum(np.cross(pts, nxt), axis=0)
    if np.linalg.norm(normal) < 1e-14:
        return 0.0
    ref = _unit(normal)
    # the fan sum is the area to the left of the curve, in (0, 4 pi)
    area = float(sum(_triangle_excess(ref, a, b) for a, b in zip(pts, nxt)))
    if abs(area - 2.0 * np.pi) < 1e-9:
        key = next((x for x in ref[::-1] if abs(x) > 1e-12), 1.0)
        return float(np.copysign(2.0 * np.pi, key))
    return area if area < 2.0 * np.pi else area - 4.0 * np.pi


def geodesic(a: PoincarePoint, b: PoincarePoint, n: int) -> list[PoincarePoint]:
    """``n`` points on the great-circle arc from ``a`` towards ``b`` (``b`` excluded)."""
    u, v = a.vector, b.vector
    omega = np.arccos(np.clip(np.dot(u, v), -1.0, 1.0))
    out = []
    for t in np.arange(n) / n:
        if omega < 1e-15:
            w = u
        else:
            w = (np.sin((1 - t) * omega) * u + np.sin(t * omega) * v) / np.sin(omega)
        w = _unit(w)
        out.append(PoincarePoint(float(np.arccos(np.clip(w[2], -1.0, 1.0))), float(np.arctan2(w[1], w[0]))))
    return out


def polygon_states(vertices: Sequence[PoincarePoint], samples_per_edge: int) -> StateSequence:
    """Closed sequence of section-free spinors sampled along each polygon edge."""
    pts = []
    for a, b in zip(vertices, list(vertices[1:]) + [vertices[0]]):
        pts.extend(geodesic(a, b, samples_per_edge))
    return StateSequence.from_spinors([spinor_from_point(p) for p in pts], closed=True)
