"""Hopf fibration S^3 -> S^2 of the polarization state space.

Fibre coordinates ``(theta, beta, psi)`` embed as a unit quaternion
``(x1, x2, x3, x4)``; projecting forgets the fibre phase and keeps
``phi = psi - beta``.  The physical section fixes ``beta = -phi/2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import TOL
from .exceptions import InvalidInputError
from .spinor import PoincarePoint


@dataclass(frozen=True)
class FiberCoordinates:
    theta: float
    beta: float
    psi: float

    @property
    def phi(self) -> float:
        return self.psi - self.beta

    @property
    def on_section(self) -> bool:
        return self.beta == -self.psi


@dataclass(frozen=True)
class S3Point:
    x1: float
    x2: float
    x3: float
    x4: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3, self.x4])


@dataclass(frozen=True)
class VectorPotential:
    a_theta: float
    a_beta: float
    a_psi: float


def embed(f: FiberCoordinates) -> S3Point:
    c, s = np.cos(f.theta / 2), np.sin(f.theta / 2)
    return S3Point(
        float(c * np.cos(f.beta)),
        float(c * np.sin(f.beta)),
        float(s * np.cos(f.psi)),
        float(s * np.sin(f.psi)),
    )


def project(p: S3Point, previous_phi: float | None = None) -> PoincarePoint:
    """Bundle projection onto the Poincare sphere.

    Parameters
    ----------
    p : S3Point
        Point with unit Euclidean norm.
    previous_phi : float, optional
        When tracing a path, the azimuth of the previous sample.  The result
        is shifted by a multiple of 2 pi to lie within pi of it.

    Returns
    -------
    PoincarePoint
        ``phi`` is 0 at either pole (check ``is_pole``).
    """
    arr = p.as_array()
    err = abs(np.linalg.norm(arr) - 1.0)
    if err > TOL.norm:
        raise InvalidInputError(f"S3 point is not unit-norm (|norm - 1| = {err:.3e})")
    up, down = np.hypot(p.x1, p.x2), np.hypot(p.x3, p.x4)
    theta = float(2.0 * np.arctan2(down, up))
    point = PoincarePoint(theta, 0.0)
    if point.is_pole:
        return point
    beta = np.arctan2(p.x2, p.x1)
    psi = np.arctan2(p.x4, p.x3)
    phi = float(np.angle(np.exp(1j * (psi - beta))))
    if previous_phi is not None:
        phi += 2.0 * np.pi * np.round((previous_phi - phi) / (2.0 * np.pi))
    return PoincarePoint(theta, float(phi))


def section_constraint(phi: float) -> tuple[float, float]:
    """Fibre phases ``(beta, psi) = (-phi/2, +phi/2)`` of the physical section."""
    half = 0.5 * phi
    return -half, half


def on_section(theta: float, phi: float) -> FiberCoordinates:
    beta, psi = section_constraint(phi)
    return FiberCoordinates(theta, beta, psi)


def line_element(f: FiberCoordinates, dtheta: float, dbeta: float, dpsi: float) -> float:
    """Squared length ``dtheta^2/4 + cos^2(theta/2) dbeta^2 + sin^2(theta/2) dpsi^2``."""
    c2 = np.cos(f.theta / 2) ** 2
    s2 = np.sin(f.theta / 2) ** 2
    return float(0.25 * dtheta**2 + c2 * dbeta**2 + s2 * dpsi**2)


def vector_potential(theta: float) -> VectorPotential:
    """Connection components in orthonormal fibre directions; finite at both poles."""
    return VectorPotential(0.0, float(np.cos(theta / 2)), float(np.sin(theta / 2)))


def metric_displacement(theta: float, dbeta: float, dpsi: float) -> np.ndarray:
    """Displacement ``(0, cos(theta/2) dbeta, sin(theta/2) dpsi)`` along the fibre.

    Paired with :func:`vector_potential`, ``A . dr`` recovers the
    ``cos^2`` and ``sin^2`` weights of the connection one-form.
    """
    return np.array([0.0, np.cos(theta / 2) * dbeta, np.sin(theta / 2) * dpsi])


def potential_line_integral(path) -> float:
    """``-sum A . dr`` over a discretised path of :class:`FiberCoordinates`.

    Each segment averages ``A . dr`` evaluated at its two end angles, the same
    trapezoid weighting :func:`pioneer_berry.geometric.berry_phase_integral`
    applies to the connection one-form.
    """
    total = 0.0
    for a, b in zip(path[:-1], path[1:]):
        dbeta, dpsi = b.beta - a.beta, b.psi - a.psi
        for theta in (a.theta, b.theta):
            pot = vector_potential(theta)
            dr = metric_displacement(theta, dbeta, dpsi)
            total += 0.5 * (pot.a_theta * dr[0] + pot.a_beta * dr[1] + pot.a_psi * dr[2])
    return -float(total)
