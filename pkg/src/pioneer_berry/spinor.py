"""Polarization states as complex two-spinors on the Poincare sphere.

A pure polarization state is carried three ways here: as a Jones vector
``(x, y)``, as a helicity spinor ``(psi_plus, psi_minus)`` and as a point
``(theta, phi)`` on the sphere plus an overall phase.  The conversions below
move between them without ever reducing phases modulo 2 pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import TOL
from ._validation import check_unit_norm

SQRT1_2 = np.sqrt(0.5)

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class JonesVector:
    x: complex
    y: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=complex)


@dataclass(frozen=True)
class PolarizationSpinor:
    """Helicity-basis amplitudes of a pure polarization state."""

    psi_plus: complex
    psi_minus: complex

    @classmethod
    def from_array(cls, arr) -> "PolarizationSpinor":
        arr = np.asarray(arr, dtype=complex)
        return cls(complex(arr[0]), complex(arr[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.psi_plus, self.psi_minus], dtype=complex)

    @property
    def norm(self) -> float:
        return float(np.hypot(abs(self.psi_plus), abs(self.psi_minus)))

    def inner(self, other: "PolarizationSpinor") -> complex:
        """Return ``<self|other>``."""
        return complex(overlaps(self.as_array(), other.as_array()))


def overlaps(a, b) -> np.ndarray:
    """Row-wise ``<a_k|b_k>`` for ``(..., 2)`` complex arrays.

    Written in real arithmetic so that ``<s|s>`` has an imaginary part of
    exactly zero; numpy's complex product does not guarantee that.
    """
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    ar, ai, br, bi = a.real, a.imag, b.real, b.imag
    return np.sum(ar * br + ai * bi, axis=-1) + 1j * np.sum(ar * bi - ai * br, axis=-1)


EPSILON_PLUS = PolarizationSpinor(1.0 + 0j, 0j)
EPSILON_MINUS = PolarizationSpinor(0j, 1.0 + 0j)


@dataclass(frozen=True)
class PoincarePoint:
    """Point on the sphere; ``phi`` is kept unwrapped."""

    theta: float
    phi: float

    @property
    def vector(self) -> np.ndarray:
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])

    @property
    def is_pole(self) -> bool:
        return bool(np.sin(self.theta / 2) < TOL.pole or np.cos(self.theta / 2) < TOL.pole)


def jones_to_spinor(j: JonesVector, beta: float = 0.0) -> PolarizationSpinor:
    """Map a unit Jones vector to helicity amplitudes ``(x +/- iy) e^{i beta} / sqrt 2``."""
    check_unit_norm(j.as_array(), "jones vector")
    ph = np.exp(1j * beta)
    return PolarizationSpinor(
        complex(SQRT1_2 * (j.x + 1j * j.y) * ph),
        complex(SQRT1_2 * (j.x - 1j * j.y) * ph),
    )


def spinor_to_jones(s: PolarizationSpinor, beta: float = 0.0) -> JonesVector:
    """Inverse of :func:`jones_to_spinor` for a known overall phase ``beta``."""
    check_unit_norm(s.as_array(), "spinor")
    ph = np.exp(-1j * beta)
    x = SQRT1_2 * (s.psi_plus + s.psi_minus) * ph
    y = SQRT1_2 * (s.psi_plus - s.psi_minus) * ph / 1j
    return JonesVector(complex(x), complex(y))


def spinor_from_point(p: PoincarePoint, beta: float = 0.0) -> PolarizationSpinor:
    """Spinor ``(cos(theta/2), sin(theta/2) e^{i phi}) e^{i beta}``.

    The phases are applied per component (``beta`` on the upper entry,
    ``beta + phi`` on the lower) so that large unwrapped angles do not get
    combined before exponentiation.
    """
    half = 0.5 * p.theta
    return PolarizationSpinor(
        complex(np.cos(half) * np.exp(1j * beta)),
        complex(np.sin(half) * np.exp(1j * (beta + p.phi))),
    )


def spinor_to_poincare(s: PolarizationSpinor) -> tuple[PoincarePoint, float]:
    """Split a unit spinor into its sphere point and overall phase.

    At the poles the azimuth is undefined; it is reported as 0 and the
    overall phase is taken from the surviving component.

    Returns
    -------
    point : PoincarePoint
    global_phase : float
        Phase ``beta`` such that ``spinor_from_point(point, beta)``
        reproduces ``s``.
    """
    check_unit_norm(s.as_array(), "spinor")
    a, b = abs(s.psi_plus), abs(s.psi_minus)
    theta = 2.0 * np.arctan2(b, a)
    if b < TOL.pole:
        return PoincarePoint(float(theta), 0.0), float(np.angle(s.psi_plus))
    if a < TOL.pole:
        return PoincarePoint(float(theta), 0.0), float(np.angle(s.psi_minus))
    # largest component fixes the overall phase; the other only feeds phi
    if a >= b:
        beta = float(np.angle(s.psi_plus))
        phi = float(np.angle(s.psi_minus * np.conj(s.psi_plus)))
    else:
        psi = float(np.angle(s.psi_minus))
        phi = float(np.angle(s.psi_minus * np.conj(s.psi_plus)))
        beta = psi - phi
    return PoincarePoint(float(theta), phi), beta


def polarization_matrix(p: PoincarePoint) -> np.ndarray:
    """Hermitian matrix ``r . sigma`` whose +1 eigenvector is the state at ``p``."""
    ct, st = np.cos(p.theta), np.sin(p.theta)
    return np.array(
        [[ct, st * np.exp(-1j * p.phi)], [st * np.exp(1j * p.phi), -ct]],
        dtype=complex,
    )
