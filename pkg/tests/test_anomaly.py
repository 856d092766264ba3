from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from conftest import linear, make_scenario
from pioneer_berry._config import JULIAN_YEAR, SPEED_OF_LIGHT
from pioneer_berry.anomaly import (
    PIONEER,
    ab_coefficients,
    ab_residual,
    drift_from_phases,
    helicity_drift,
    integrated_fractional_shift,
    pioneer_comparison,
    solve_ab_system,
    theta_independence_sweep,
)
from pioneer_berry.evolution import ScaleFactorModel, decompose, evolve
from pioneer_berry.exceptions import InvalidInputError


def test_constants_are_frozen():
    with pytest.raises(Exception):
        PIONEER.a_t = 1.0
    assert PIONEER.a_p == pytest.approx(8.74e-10)


@pytest.mark.parametrize("helicity", [1, -1])
def test_helicity_drift(helicity):
    s = make_scenario(T=1.0)
    assert helicity_drift(s, ScaleFactorModel(), helicity).omega_dot_over_omega == 0.0
    pred = helicity_drift(s, linear(2.92e-18), helicity)
    assert pred.omega_dot_over_omega == 2.92e-18
    assert pred.blue_shift


def test_integrated_shift_over_a_year():
    m = linear(1e-18)
    oracle, _ = quad(lambda t: m.chidot(t) / m.chi(t) * m.chi(t), 0.0, JULIAN_YEAR)
    assert integrated_fractional_shift(m, JULIAN_YEAR) == pytest.approx(oracle, rel=1e-12)
    assert integrated_fractional_shift(m, 3.156e7) == pytest.approx(3.156e-11, rel=1e-12)


def test_solve_ab_examples():
    pred = solve_ab_system(0.0, 1e-18, 4e4)
    assert pred.omega_dot_over_omega == pytest.approx(1e-18 / (1 - 4e-14), rel=1e-15)
    assert ab_residual(0.0, 1e-18, 4e4, pred.exact) == 0
    # the rounded double sits within half an ulp of the exact root
    assert abs(Fraction(pred.omega_dot_over_omega) - pred.exact) <= Fraction(np.spacing(pred.omega_dot_over_omega)) / 2
    a = solve_ab_system(np.pi / 3, 1e-18, 4e4).omega_dot_over_omega
    b = solve_ab_system(2 * np.pi / 3, 1e-18, 4e4).omega_dot_over_omega
    assert a == b
    for theta in (0.0, 1.0, np.pi / 2, np.pi):
        assert solve_ab_system(theta, 0.0, 10.0).omega_dot_over_omega == 0.0


def test_solve_ab_degenerate_and_domain():
    pred = solve_ab_system(np.pi / 2, 1e-18, 1e5)
    assert pred.degenerate
    assert pred.omega_dot_over_omega == pytest.approx(1e-18 / (1 - 1e-13), rel=1e-15)
    a, b = ab_coefficients(np.pi / 2, 1e-18, 1e5, 5.0)
    # cos(pi/2) is 6e-17 in doubles; both coefficients carry it
    assert abs(float(a + 5.0)) < 1e-15 and abs(float(b - 5.0)) < 1e-15
    with pytest.raises(InvalidInputError):
        solve_ab_system(0.0, 1e-3, 1e3)
    with pytest.raises(InvalidInputError):
        solve_ab_system(0.0, -2e-3, 1e3)


@settings(deadline=None, max_examples=100)
@given(st.floats(0, np.pi), st.floats(-1e-15, 1e-15), st.floats(1.0, 1e8))
def test_residual_vanishes_and_first_order_bound(theta, chidot, T):
    pred = solve_ab_system(theta, chidot, T)
    if not pred.degenerate:
        assert ab_residual(theta, chidot, T, pred.exact) == 0
    # the bound is attained exactly, so check it in rationals
    exact_bound = Fraction(chidot) ** 2 * Fraction(T) / (1 - abs(Fraction(chidot)) * Fraction(T))
    assert abs(pred.exact - Fraction(chidot)) <= exact_bound
    ulp = np.spacing(abs(pred.omega_dot_over_omega))
    assert abs(pred.omega_dot_over_omega - pred.first_order) <= pred.second_order_bound + 2 * ulp
    if chidot > 0:
        assert pred.blue_shift


@pytest.mark.parametrize("eps", [1e-6, 1e-3])
def test_first_order_law(eps):
    chidot, T = 1e-9, eps / 1e-9
    pred = solve_ab_system(1.0, chidot, T)
    bound = Fraction(chidot) ** 2 * Fraction(T) / (1 - Fraction(chidot) * Fraction(T))
    assert abs(pred.exact - Fraction(chidot)) <= bound


def test_theta_sweep():
    grid = [0.0, np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi]
    rep = theta_independence_sweep(1e-18, 1e5, grid)
    assert rep.spread <= 1e-15
    assert list(rep.degenerate) == [False, False, True, False, False]
    assert np.all(theta_independence_sweep(0.0, 1e5, grid).ratios == 0.0)


@pytest.mark.parametrize("theta", [0.0, np.pi / 3, 2.5])
def test_numeric_drift_from_evolved_phases(theta):
    # finite difference of the evolved Berry phase at T and T + dT
    k, chidot, T, dT = 1e6, 1e-9, 1e3, 10.0
    gammas = []
    for t_end in (T, T + dT):
        s = make_scenario(omega_r_over_c=k, T=t_end, theta=theta, steps=50_000)
        gammas.append(decompose(evolve(s, linear(chidot))).geometric)
    drift = drift_from_phases(gammas[0], gammas[1], dT, theta, k)
    closed = solve_ab_system(theta, chidot, T).omega_dot_over_omega
    assert drift == pytest.approx(closed, rel=10 * chidot * T)
    with pytest.raises(InvalidInputError):
        drift_from_phases(0.0, 1.0, 1.0, np.pi / 2, 1.0)


def test_pioneer_comparison_examples():
    cmp = pioneer_comparison(linear(2.92e-18))
    assert cmp.acceleration_predicted == pytest.approx(2.92e-18 * SPEED_OF_LIGHT, rel=1e-15)
    assert cmp.acceleration_cgs == pytest.approx(8.754e-8, rel=1e-3)
    assert cmp.within_band(1.0) == {"a_t": True, "a_p": True}
    assert pioneer_comparison(ScaleFactorModel()).z_a_t == pytest.approx(-2.92 / 0.44)
    assert abs(pioneer_comparison(ScaleFactorModel()).z_a_t) == pytest.approx(6.6, abs=0.05)
    edge = pioneer_comparison(linear(3.36e-18))
    assert edge.within_band(1.0)["a_t"]
