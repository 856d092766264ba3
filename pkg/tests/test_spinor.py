import numpy as np
import pytest
from hypothesis import given, strategies as st

from pioneer_berry.exceptions import InvalidInputError
from pioneer_berry.spinor import (
    EPSILON_MINUS,
    EPSILON_PLUS,
    SIGMA_1,
    SIGMA_3,
    JonesVector,
    PoincarePoint,
    PolarizationSpinor,
    jones_to_spinor,
    polarization_matrix,
    spinor_from_point,
    spinor_to_jones,
    spinor_to_poincare,
)

R2 = np.sqrt(0.5)
angles = st.floats(-20.0, 20.0, allow_nan=False)
interior = st.floats(1e-3, np.pi - 1e-3)


def jones_from(theta, chi, delta):
    return JonesVector(np.cos(theta) * np.exp(1j * chi), np.sin(theta) * np.exp(1j * delta))


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (1.0, 0.0, (R2, R2)),
        (R2, 1j * R2, (0.0, 1.0)),
        (R2, -1j * R2, (1.0, 0.0)),
    ],
)
def test_jones_to_spinor_examples(x, y, expected):
    s = jones_to_spinor(JonesVector(x, y), beta=0.0)
    np.testing.assert_allclose(s.as_array(), expected, atol=1e-15)


def test_real_jones_gives_real_plus_component():
    s = jones_to_spinor(JonesVector(0.6, 0.8))
    assert s.psi_plus.imag == pytest.approx(0.8 * R2)
    s = jones_to_spinor(JonesVector(1.0, 0.0))
    assert s.psi_plus.imag == 0.0


def test_jones_to_spinor_rejects_unnormalised():
    with pytest.raises(InvalidInputError):
        jones_to_spinor(JonesVector(1.0, 0.1))


@given(st.floats(0, np.pi / 2), angles, angles, angles)
def test_jones_round_trip(theta, chi, delta, beta):
    j = jones_from(theta, chi, delta)
    back = spinor_to_jones(jones_to_spinor(j, beta), beta)
    np.testing.assert_allclose(back.as_array(), j.as_array(), atol=1e-12)


@given(st.floats(0, np.pi / 2), angles, angles)
def test_jones_spinor_is_unit_norm(theta, chi, delta):
    assert abs(jones_to_spinor(jones_from(theta, chi, delta)).norm - 1) < 1e-12


def test_helicity_basis_constants():
    np.testing.assert_array_equal(EPSILON_PLUS.as_array(), [1, 0])
    np.testing.assert_array_equal(EPSILON_MINUS.as_array(), [0, 1])


def test_spinor_to_poincare_north_pole():
    p, phase = spinor_to_poincare(PolarizationSpinor(1, 0))
    assert (p.theta, p.phi, phase) == (0.0, 0.0, 0.0)
    assert p.is_pole


def test_spinor_to_poincare_by_construction():
    s = PolarizationSpinor(np.cos(np.pi / 6), np.sin(np.pi / 6) * np.exp(1j * np.pi / 4))
    p, phase = spinor_to_poincare(s)
    assert p.theta == pytest.approx(np.pi / 3, abs=1e-15)
    assert p.phi == pytest.approx(np.pi / 4, abs=1e-15)
    assert phase == pytest.approx(0.0, abs=1e-15)


def test_spinor_to_poincare_global_phase():
    s = PolarizationSpinor(R2 * np.exp(0.3j), R2 * np.exp(0.3j))
    p, phase = spinor_to_poincare(s)
    assert p.theta == pytest.approx(np.pi / 2, abs=1e-15)
    assert p.phi == pytest.approx(0.0, abs=1e-15)
    assert phase == pytest.approx(0.3, abs=1e-15)
    # recomposition identity
    np.testing.assert_allclose(spinor_from_point(p, phase).as_array(), s.as_array(), atol=1e-12)


def test_south_pole_takes_phase_from_lower_component():
    s = PolarizationSpinor(0, np.exp(1.1j))
    p, phase = spinor_to_poincare(s)
    assert p.theta == pytest.approx(np.pi)
    assert p.phi == 0.0 and p.is_pole
    np.testing.assert_allclose(spinor_from_point(p, phase).as_array(), s.as_array(), atol=1e-12)


@given(st.floats(0, np.pi), angles, angles)
def test_spinor_to_poincare_reconstructs(theta, phi, beta):
    s = spinor_from_point(PoincarePoint(theta, phi), beta)
    p, phase = spinor_to_poincare(s)
    assert 0 <= p.theta <= np.pi
    np.testing.assert_allclose(spinor_from_point(p, phase).as_array(), s.as_array(), atol=1e-12)


@given(interior, st.floats(-np.pi + 1e-9, np.pi - 1e-9))
def test_point_round_trip_identity(theta, phi):
    p, _ = spinor_to_poincare(spinor_from_point(PoincarePoint(theta, phi)))
    assert p.theta == pytest.approx(theta, abs=1e-12)
    assert np.angle(np.exp(1j * (p.phi - phi))) == pytest.approx(0.0, abs=1e-12)


def test_polarization_matrix_examples():
    np.testing.assert_allclose(polarization_matrix(PoincarePoint(0.0, 0.3)), SIGMA_3, atol=1e-15)
    np.testing.assert_allclose(polarization_matrix(PoincarePoint(np.pi / 2, 0.0)), SIGMA_1, atol=1e-15)
    p = PoincarePoint(np.pi / 3, np.pi / 4)
    psi = spinor_from_point(p).as_array()
    assert np.linalg.norm(polarization_matrix(p) @ psi - psi) < 1e-12


@given(st.floats(0, np.pi), angles)
def test_polarization_matrix_structure(theta, phi):
    p = PoincarePoint(theta, phi)
    m = polarization_matrix(p)
    np.testing.assert_allclose(m, m.conj().T, atol=0)
    assert abs(np.trace(m)) < 1e-15
    np.testing.assert_allclose(np.linalg.eigvalsh(m), [-1, 1], atol=1e-12)
    psi = spinor_from_point(p, beta=0.7).as_array()
    assert np.linalg.norm(m @ psi - psi) < 1e-12
    assert abs(np.linalg.norm(p.vector) - 1) < 1e-12


@given(st.floats(0, np.pi), angles)
def test_antipodal_states_are_orthogonal(theta, phi):
    a = spinor_from_point(PoincarePoint(theta, phi))
    b = spinor_from_point(PoincarePoint(np.pi - theta, phi + np.pi))
    assert abs(a.inner(b)) < 1e-12
