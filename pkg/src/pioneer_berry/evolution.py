"""Adiabatic evolution of a polarization spinor in an expanding space.

The scale factor ``chi(t)`` drives the section phase
``phi(t) = -2 (omega R / c) chi(t)``; each time step applies the diagonal
unitary ``exp(-i (dphi/2) sigma_3)``.  Because the generator is diagonal the
step is exact, so the only numerical error left in a phase budget is the
quadrature of ``dphi``.

Phase increments are built from ``chi(t) - 1`` (computed with ``expm1`` for
the exponential family) rather than from ``phi`` itself: for realistic
``omega R / c`` the absolute value of ``phi`` is ~1e14 and differencing it
would destroy every significant digit of the expansion signal.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from ._config import SPEED_OF_LIGHT, TOL
from ._validation import check_finite_scalar, check_polar_angle, check_positive, check_unit_norm
from .exceptions import InvalidInputError, RegimeError, AdiabaticityWarning
from .spinor import SIGMA_3, PolarizationSpinor, overlaps


@dataclass(frozen=True)
class ScaleFactorModel:
    """Scale factor ``chi(t)`` with ``chi(0) = 1``.

    ``linear``: ``chi = 1 + rate t``.  ``exponential``: ``chi = exp(rate t)``.
    """

    kind: Literal["linear", "exponential"] = "linear"
    rate: float = 0.0

    def __post_init__(self):
        if self.kind not in ("linear", "exponential"):
            raise InvalidInputError(f"unknown scale-factor kind {self.kind!r}")
        check_finite_scalar(self.rate, "rate")

    def chi_minus_one(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "linear":
            return self.rate * t
        return np.expm1(self.rate * t)

    def chi(self, t):
        return 1.0 + self.chi_minus_one(t)

    def chidot(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "linear":
            return np.full_like(t, self.rate)
        return self.rate * np.exp(self.rate * t)


@dataclass(frozen=True)
class RoundTripScenario:
    """A light signal emitted at comoving ``R`` and received there after ``T``."""

    R: float
    omega: float
    T: float
    theta: float = 0.0
    steps: int = 100_000
    c: float = SPEED_OF_LIGHT

    def __post_init__(self):
        check_finite_scalar(self.R, "R")
        check_finite_scalar(self.omega, "omega")
        check_positive(self.T, "T")
        check_positive(self.c, "c")
        check_polar_angle(self.theta)
        if int(self.steps) != self.steps or self.steps < 2:
            raise InvalidInputError(f"steps must be an integer >= 2, got {self.steps!r}")

    @property
    def omega_r_over_c(self) -> float:
        return self.omega * self.R / self.c

    def adiabaticity(self, model: ScaleFactorModel) -> float:
        """``epsilon = chidot(0) T``."""
        return float(model.rate * self.T)


def check_adiabatic(s: RoundTripScenario, m: ScaleFactorModel) -> float:
    """Return ``epsilon``; warn above the soft bound, raise above the hard one."""
    eps = s.adiabaticity(m)
    if abs(eps) > TOL.adiabatic_max:
        raise RegimeError(
            f"adiabaticity parameter chidot*T = {eps:.3e} exceeds {TOL.adiabatic_max:g}; "
            "first-order results would be meaningless"
        )
    if abs(eps) > TOL.adiabatic_warn:
        warnings.warn(
            f"chidot*T = {eps:.3e} above {TOL.adiabatic_warn:g}; O(eps^2) terms are not negligible",
            AdiabaticityWarning,
            stacklevel=3,
        )
    return eps


def eikonal(s: RoundTripScenario, m: ScaleFactorModel, t: float, helicity: int = 1) -> float:
    """Eikonal ``-(omega t - helicity (omega/c) R chi(t))`` of a helicity mode."""
    if helicity not in (1, -1):
        raise InvalidInputError("helicity must be +1 or -1")
    return float(-(s.omega * t - helicity * s.omega_r_over_c * m.chi(t)))


def section_phase(s: RoundTripScenario, m: ScaleFactorModel, t):
    """``phi(R, t) = -2 (omega/c) R chi(t)``."""
    return -2.0 * s.omega_r_over_c * m.chi(t)


def section_phase_change(s: RoundTripScenario, m: ScaleFactorModel, t):
    """``phi(t) - phi(0) = -2 (omega/c) R (chi(t) - 1)`` without cancellation."""
    return -2.0 * s.omega_r_over_c * m.chi_minus_one(t)


def generator_increment(dphi: float) -> np.ndarray:
    """Diagonal generator ``dS = (dphi/2) sigma_3``."""
    return 0.5 * dphi * SIGMA_3


def step_unitary(dphi: float) -> np.ndarray:
    """Closed-form ``exp(-i dS)`` for the diagonal generator."""
    half = 0.5 * dphi
    return np.diag([np.exp(-1j * half), np.exp(1j * half)])


def section_state(theta: float, phi0: float, dphi=0.0) -> np.ndarray:
    """Section spinor at azimuth ``phi0 + dphi``, shape ``(..., 2)``.

    On the section ``beta = -phi/2``, so the state is
    ``(cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{+i phi/2})``.  The two
    pieces of the azimuth are exponentiated separately.
    """
    dphi = np.asarray(dphi, dtype=float)
    up = np.cos(theta / 2) * np.exp(-0.5j * phi0) * np.exp(-0.5j * dphi)
    down = np.sin(theta / 2) * np.exp(0.5j * phi0) * np.exp(0.5j * dphi)
    return np.stack([up, down], axis=-1)


@dataclass(frozen=True)
class EvolutionTrajectory:
    """Sampled run of :func:`evolve`.

    Attributes
    ----------
    times : ndarray, shape (n,)
    states : ndarray, shape (n, 2), complex
        Helicity amplitudes at each sample.
    chis : ndarray, shape (n,)
    delta_phis : ndarray, shape (n,)
        ``phi(t) - phi(t_0)``, accurate to full relative precision.
    phi0 : float
        Section azimuth at the first sample.
    theta : float
    """

    times: np.ndarray
    states: np.ndarray
    chis: np.ndarray
    delta_phis: np.ndarray
    phi0: float
    theta: float
    omega_r_over_c: float = field(default=0.0)

    @property
    def phis(self) -> np.ndarray:
        return self.phi0 + self.delta_phis

    @property
    def spinors(self) -> list[PolarizationSpinor]:
        return [PolarizationSpinor.from_array(v) for v in self.states]

    @property
    def final_state(self) -> PolarizationSpinor:
        return PolarizationSpinor.from_array(self.states[-1])

    @property
    def norm_errors(self) -> np.ndarray:
        return np.abs(np.linalg.norm(self.states, axis=1) - 1.0)

    def __len__(self) -> int:
        return len(self.times)


def evolve(
    s: RoundTripScenario,
    m: ScaleFactorModel,
    *,
    t_span: tuple[float, float] | None = None,
    initial: PolarizationSpinor | None = None,
) -> EvolutionTrajectory:
    """Integrate the section evolution over ``[0, T]`` (or ``t_span``).

    Parameters
    ----------
    s, m
        Scenario and scale-factor model.
    t_span : (float, float), optional
        Sub-interval to integrate; ``s.steps`` uniform steps are used on it.
    initial : PolarizationSpinor, optional
        Starting state.  Defaults to the section spinor at ``(s.theta, phi(t0))``.
        Supplying the final state of an earlier run continues that run.

    Raises
    ------
    RegimeError
        ``chidot T`` above the hard adiabaticity bound, or ``chi <= 0``.
    """
    check_adiabatic(s, m)
    t0, t1 = (0.0, s.T) if t_span is None else (float(t_span[0]), float(t_span[1]))
    if not t1 > t0:
        raise InvalidInputError(f"empty time span ({t0}, {t1})")

    times = np.linspace(t0, t1, int(s.steps) + 1)
    dchi = m.chi_minus_one(times)
    chis = 1.0 + dchi
    if np.any(chis <= 0.0):
        raise RegimeError("scale factor reached chi <= 0 inside the time span")

    k = -2.0 * s.omega_r_over_c
    phi0 = float(k * chis[0])
    delta_phis = k * (dchi - dchi[0])
    increments = np.diff(delta_phis)
    if np.any(np.abs(increments) >= np.pi):
        raise InvalidInputError("phase increment per step reaches pi; increase steps")

    if initial is None:
        psi0 = section_state(s.theta, phi0)
    else:
        psi0 = check_unit_norm(initial.as_array(), "initial state")

    # Composing the diagonal step unitaries exp(-i dphi_k/2 sigma_3) adds their
    # phases, which telescope to phi(t_k) - phi(t_0): apply that in closed form.
    acc = delta_phis
    states = np.empty((len(times), 2), dtype=complex)
    states[:, 0] = psi0[0] * np.exp(-0.5j * acc)
    states[:, 1] = psi0[1] * np.exp(0.5j * acc)

    return EvolutionTrajectory(
        times=times,
        states=states,
        chis=chis,
        delta_phis=acc,
        phi0=phi0,
        theta=float(s.theta),
        omega_r_over_c=float(s.omega_r_over_c),
    )


def _sigma3_expectation(states: np.ndarray) -> np.ndarray:
    return np.abs(states[:, 0]) ** 2 - np.abs(states[:, 1]) ** 2


def cumulative_dynamic_phase(traj: EvolutionTrajectory) -> np.ndarray:
    """Running ``-int <Psi|dS|Psi>`` with the trapezoid rule, starting at 0."""
    expect = _sigma3_expectation(traj.states)
    dphi = np.diff(traj.delta_phis)
    pieces = -0.25 * (expect[:-1] + expect[1:]) * dphi
    return np.concatenate([[0.0], np.cumsum(pieces)])


def dynamic_phase(traj: EvolutionTrajectory) -> float:
    """Dynamic phase ``-int <Psi(t)| dS |Psi(t)>`` over the whole trajectory.

    This is minus the integral of the rate ``d/dt Re <Psi| int_1^chi dS |Psi>``.
    Removing it from the state, ``|Psi~> = exp(-i dyn) |Psi>``, leaves a
    parallel-transported state.  Zero whenever the scale factor is frozen.
    """
    return float(cumulative_dynamic_phase(traj)[-1])


def transported_states(traj: EvolutionTrajectory) -> np.ndarray:
    """States with the running dynamic phase removed."""
    dyn = cumulative_dynamic_phase(traj)
    return traj.states * np.exp(-1j * dyn)[:, None]


def parallel_transport_residual(traj: EvolutionTrajectory) -> float:
    """``max_k |<Psi~_k | Psi~_{k+1} - Psi~_k>|``; zero for exact transport."""
    tilde = transported_states(traj)
    a, b = tilde[:-1], tilde[1:]
    overlap = overlaps(a, b - a)
    return float(np.max(np.abs(overlap))) if len(overlap) else 0.0


@dataclass(frozen=True)
class PhaseDecomposition:
    """Total phase of the evolved state split as ``total = dynamic + geometric``.

    ``total`` is measured against the section eigenstate at the final
    azimuth.  ``connection`` is the independent discrete connection sum
    ``-sum arg <Psi_k|Psi_{k+1}>`` and should match ``geometric``.
    """

    total: float
    dynamic: float
    geometric: float
    connection: float
    transport_residual: float
    norm_error: float

    @property
    def residual(self) -> float:
        return abs(self.geometric - self.connection)


def decompose(traj: EvolutionTrajectory) -> PhaseDecomposition:
    frame = section_state(traj.theta, traj.phi0, traj.delta_phis[-1])
    total = float(np.angle(overlaps(frame, traj.states[-1])))
    dyn = dynamic_phase(traj)
    links = overlaps(traj.states[:-1], traj.states[1:])
    connection = float(-np.sum(np.angle(links)))
    return PhaseDecomposition(
        total=total,
        dynamic=dyn,
        geometric=total - dyn,
        connection=connection,
        transport_residual=parallel_transport_residual(traj),
        norm_error=float(np.max(traj.norm_errors)),
    )
