import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from pioneer_berry.estimators import BerryPhaseTransformer, FrequencyAnomalyRegressor
from pioneer_berry.exceptions import InvalidInputError, RegimeError

THETAS = np.array([[0.0], [np.pi / 3], [np.pi / 2], [np.pi]])


def test_transformer_phases():
    est = BerryPhaseTransformer(chi_rate=1e-6, R=299_792_458.0, omega=1.0, T=1.0, steps=10_000)
    out = est.fit_transform(THETAS)
    assert est.delta_phi_ == pytest.approx(-2e-6, rel=1e-12)
    np.testing.assert_allclose(out[:, 1], np.cos(THETAS[:, 0]) * -1e-6, atol=1e-20)
    assert np.all(out[:, 2] <= 1e-6 * 1e-6)
    fast = clone(est).set_params(numeric=False).fit(THETAS).transform(THETAS)
    np.testing.assert_array_equal(fast[:, 1], out[:, 1])
    assert np.all(fast[:, 2] == 0.0)


def test_transformer_params_and_validation():
    est = BerryPhaseTransformer(chi_rate=1e-6)
    assert clone(est).get_params() == est.get_params()
    with pytest.raises(NotFittedError):
        est.transform(THETAS)
    with pytest.raises(RegimeError):
        BerryPhaseTransformer(chi_rate=0.5).fit()
    with pytest.raises(InvalidInputError):
        est.fit().transform([[4.0]])


def test_regressor_predicts_theta_independent_drift():
    reg = FrequencyAnomalyRegressor(chidot=1e-18, T=1e5).fit(THETAS)
    pred = reg.predict(THETAS)
    assert reg.spread_ == 0.0
    assert list(reg.degenerate_) == [False, False, True, False]
    assert np.all(pred == pred[0])
    assert reg.score(THETAS, pred) == 1.0
    with pytest.raises(NotFittedError):
        FrequencyAnomalyRegressor().predict(THETAS)


def test_pipeline():
    # degrees in, radians to the physics
    pipe = make_pipeline(FunctionTransformer(np.deg2rad), FrequencyAnomalyRegressor(chidot=2.92e-18, T=4e4))
    pipe.fit([[0.0], [45.0], [180.0]])
    pred = pipe.predict([[30.0], [120.0]])
    np.testing.assert_allclose(pred, 2.92e-18 / (1 - 2.92e-18 * 4e4), rtol=1e-15)
