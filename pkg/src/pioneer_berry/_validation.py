"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from ._config import TOL
from .exceptions import InvalidInputError


def check_unit_norm(vec, name: str = "state", tol: float = TOL.norm) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    err = abs(np.linalg.norm(vec) - 1.0)
    if not np.isfinite(err) or err > tol:
        raise InvalidInputError(f"{name} is not unit-norm (|norm - 1| = {err:.3e} > {tol:g})")
    return vec


def check_finite_scalar(value, name: str) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} must be a real number, got {value!r}") from exc
    if not np.isfinite(value):
        raise InvalidInputError(f"{name} must be finite, got {value!r}")
    return value


def check_positive(value, name: str) -> float:
    value = check_finite_scalar(value, name)
    if value <= 0:
        raise InvalidInputError(f"{name} must be positive, got {value!r}")
    return value


def check_nonnegative(value, name: str) -> float:
    value = check_finite_scalar(value, name)
    if value < 0:
        raise InvalidInputError(f"{name} must be non-negative, got {value!r}")
    return value


def check_polar_angle(theta, name: str = "theta") -> float:
    theta = check_finite_scalar(theta, name)
    if not 0.0 <= theta <= np.pi:
        raise InvalidInputError(f"{name} must lie in [0, pi], got {theta!r}")
    return theta


def check_theta_column(X) -> np.ndarray:
    """Validate an estimator input of polar angles, shape ``(n_samples, 1)``.

    A 1-d array is accepted and treated as a single column.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    X = check_array(X, dtype=float, ensure_2d=True)
    if X.shape[1] != 1:
        raise InvalidInputError(f"expected a single column of polar angles, got {X.shape[1]} columns")
    if np.any(X < 0.0) or np.any(X > np.pi):
        raise InvalidInputError("polar angles must lie in [0, pi]")
    return X
