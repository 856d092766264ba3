"""scikit-learn compatible wrappers.

The estimators map a column of polarization polar angles to geometric
phases or frequency drifts for a fixed expansion scenario, so the physics
can sit inside a :class:`sklearn.pipeline.Pipeline` or be swept with
``get_params``/``set_params`` like any other estimator.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._config import SPEED_OF_LIGHT
from ._validation import check_positive, check_theta_column
from .anomaly import solve_ab_system, theta_independence_sweep
from .evolution import RoundTripScenario, ScaleFactorModel, check_adiabatic, evolve
from .geometric import berry_phase_analytic, connection_phase


class BerryPhaseTransformer(TransformerMixin, BaseEstimator):
    """Section Berry phase of each polarization state after one round trip.

    Parameters
    ----------
    chi_kind : {'linear', 'exponential'}
    chi_rate : float
        Expansion rate at ``t = 0``, 1/s.
    R : float
        Comoving emitter coordinate, m.
    omega : float
        Angular frequency, rad/s.
    T : float
        Round-trip time, s.
    steps : int
    numeric : bool
        If False, skip the evolution and return only analytic phases.

    Attributes
    ----------
    delta_phi_ : float
        Section phase change over the round trip.
    epsilon_ : float
        Adiabaticity ``chi_rate * T``.
    n_features_in_ : int

    Notes
    -----
    ``transform`` returns columns ``[gamma_numeric, gamma_analytic, residual]``.
    """

    def __init__(self, chi_kind="linear", chi_rate=0.0, R=1.0, omega=SPEED_OF_LIGHT, T=1.0, steps=100_000, numeric=True):
        self.chi_kind = chi_kind
        self.chi_rate = chi_rate
        self.R = R
        self.omega = omega
        self.T = T
        self.steps = steps
        self.numeric = numeric

    def _scenario(self, theta=0.0):
        return RoundTripScenario(R=self.R, omega=self.omega, T=self.T, theta=theta, steps=self.steps)

    def fit(self, X=None, y=None):
        check_positive(self.T, "T")
        self.model_ = ScaleFactorModel(self.chi_kind, self.chi_rate)
        scenario = self._scenario()
        self.epsilon_ = check_adiabatic(scenario, self.model_)
        self.delta_phi_ = float(-2.0 * scenario.omega_r_over_c * self.model_.chi_minus_one(self.T))
        self.n_features_in_ = 1
        if X is not None:
            check_theta_column(X)
        return self

    def transform(self, X):
        check_is_fitted(self, "delta_phi_")
        thetas = check_theta_column(X)[:, 0]
        out = np.empty((len(thetas), 3))
        for i, theta in enumerate(thetas):
            analytic = berry_phase_analytic(theta, self.delta_phi_)
            if self.numeric:
                traj = evolve(self._scenario(theta), self.model_)
                numeric = connection_phase(traj.states)
            else:
                numeric = analytic
            out[i] = numeric, analytic, abs(numeric - analytic)
        return out


class FrequencyAnomalyRegressor(RegressorMixin, BaseEstimator):
    """Fractional frequency drift ``omega_dot/omega`` as a function of polar angle.

    Nothing is learned: ``fit`` validates the parameters and records the
    spread of the prediction over the training angles, which is zero when
    the drift is polarization independent.

    Parameters
    ----------
    chidot : float
    T : float
    """

    def __init__(self, chidot=0.0, T=1.0):
        self.chidot = chidot
        self.T = T

    def fit(self, X, y=None):
        thetas = check_theta_column(X)[:, 0]
        report = theta_independence_sweep(self.chidot, self.T, thetas)
        self.spread_ = report.spread
        self.degenerate_ = report.degenerate
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "spread_")
        thetas = check_theta_column(X)[:, 0]
        return np.array([solve_ab_system(th, self.chidot, self.T).omega_dot_over_omega for th in thetas])
