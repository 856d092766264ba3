"""Scenario configuration: flat TOML key/value files with unit-tagged lengths.

Example::

    name = "pioneer"
    chi_kind = "linear"
    chi_rate = 2.92e-18      # 1/s
    R = "40 AU"              # or "5.98e12 m", or a bare number of metres
    omega = 1.44e10          # rad/s
    T = "round-trip"         # 2 R / c, or seconds
    theta = 0.0
    steps = 100000
    outputs = ["trajectory", "phases", "anomaly", "appendix"]
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .._config import ASTRONOMICAL_UNIT, SPEED_OF_LIGHT, TOL
from ..exceptions import RegimeError

OUTPUT_KINDS = ("trajectory", "phases", "anomaly", "appendix", "sweep", "oracle")
LENGTH_UNITS = {"m": 1.0, "km": 1e3, "au": ASTRONOMICAL_UNIT}
SPEED_UNITS = {"m/s": 1.0, "km/s": 1e3}

DEFAULTS = {
    "chi_kind": "linear",
    "chi_rate": 0.0,
    "theta": 0.0,
    "steps": 100_000,
    "outputs": ["trajectory", "phases", "anomaly"],
    "thetas": [0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi],
    "sweep_steps": [1000, 10000, 100000],
    "v_probe": "12 km/s",
    "samples_per_edge": 10000,
}
KNOWN_KEYS = {"name", "R", "omega", "T", *DEFAULTS}


class ConfigError(ValueError):
    """One or more configuration fields are invalid."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    chi_kind: str
    chi_rate: float
    R: float  # m
    omega: float
    T: float
    theta: float
    steps: int
    outputs: tuple[str, ...]
    thetas: tuple[float, ...] = field(default_factory=tuple)
    sweep_steps: tuple[int, ...] = field(default_factory=tuple)
    v_probe: float = 1.2e4
    samples_per_edge: int = 10000

    @property
    def epsilon(self) -> float:
        return self.chi_rate * self.T

    def echo(self) -> dict:
        """Config contents in SI units, without the name."""
        d = asdict(self)
        d.pop("name")
        d["outputs"] = list(self.outputs)
        d["thetas"] = list(self.thetas)
        d["sweep_steps"] = list(self.sweep_steps)
        return d


def _parse_unit(value, units: dict, what: str) -> float:
    if isinstance(value, bool):
        raise ValueError(f"{what} must be a number or a string with units")
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise ValueError(f"{what} must be a number or a string with units")
    parts = value.split()
    if len(parts) != 2 or parts[1].lower() not in units:
        raise ValueError(f"cannot parse {what} {value!r}; expected '<number> <unit>' with unit in {sorted(units)}")
    return float(parts[0]) * units[parts[1].lower()]


def parse_length(value) -> float:
    """Metres from a bare number or a ``"<x> AU|km|m"`` string."""
    return _parse_unit(value, LENGTH_UNITS, "length")


def parse_speed(value) -> float:
    return _parse_unit(value, SPEED_UNITS, "speed")


def load_mapping(path) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError([f"{path}: {exc}"]) from exc


def _finite(errors, key, value, positive=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.append(f"{key}: expected a number, got {value!r}")
        return None
    value = float(value)
    if not math.isfinite(value):
        errors.append(f"{key}: must be finite")
        return None
    if positive and value <= 0:
        errors.append(f"{key}: must be positive, got {value!r}")
        return None
    return value


def build_config(mapping: dict, overrides: dict | None = None) -> ScenarioConfig:
    """Validate a raw mapping; every bad field is reported at once.

    Raises
    ------
    ConfigError
        Field-level problems.
    RegimeError
        The scenario is well formed but outside the adiabatic regime.
    """
    raw = {**DEFAULTS, **mapping, **(overrides or {})}
    errors = [f"{k}: unknown key" for k in sorted(set(raw) - KNOWN_KEYS)]
    for key in ("name", "R", "omega", "T"):
        if key not in raw:
            errors.append(f"{key}: required")

    name = raw.get("name")
    if name is not None and (not isinstance(name, str) or not name.strip() or "/" in name):
        errors.append(f"name: must be a non-empty string without '/', got {name!r}")

    chi_kind = raw["chi_kind"]
    if chi_kind not in ("linear", "exponential"):
        errors.append(f"chi_kind: must be 'linear' or 'exponential', got {chi_kind!r}")
    chi_rate = _finite(errors, "chi_rate", raw["chi_rate"])

    R = None
    if "R" in raw:
        try:
            R = parse_length(raw["R"])
        except ValueError as exc:
            errors.append(f"R: {exc}")
        else:
            if not (math.isfinite(R) and R >= 0):
                errors.append("R: must be a finite non-negative length")
                R = None
    omega = _finite(errors, "omega", raw["omega"], positive=True) if "omega" in raw else None

    T = None
    if "T" in raw:
        if raw["T"] == "round-trip":
            T = 2.0 * R / SPEED_OF_LIGHT if R else None
            if T is None:
                errors.append("T: 'round-trip' needs a positive R")
        else:
            T = _finite(errors, "T", raw["T"], positive=True)

    theta = _finite(errors, "theta", raw["theta"])
    if theta is not None and not 0.0 <= theta <= math.pi:
        errors.append(f"theta: must lie in [0, pi], got {theta!r}")

    steps = raw["steps"]
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        errors.append(f"steps: must be an integer >= 2, got {steps!r}")

    outputs = raw["outputs"]
    if not isinstance(outputs, list) or any(o not in OUTPUT_KINDS for o in outputs):
        errors.append(f"outputs: must be a list drawn from {list(OUTPUT_KINDS)}, got {outputs!r}")

    thetas = raw["thetas"]
    if not isinstance(thetas, list) or not thetas or any(
        isinstance(t, bool) or not isinstance(t, (int, float)) or not 0.0 <= t <= math.pi for t in thetas
    ):
        errors.append("thetas: must be a non-empty list of angles in [0, pi]")
    sweep_steps = raw["sweep_steps"]
    if not isinstance(sweep_steps, list) or any(isinstance(n, bool) or not isinstance(n, int) or n < 2 for n in sweep_steps):
        errors.append("sweep_steps: must be a list of integers >= 2")

    try:
        v_probe = parse_speed(raw["v_probe"])
    except ValueError as exc:
        errors.append(f"v_probe: {exc}")
        v_probe = None
    spe = raw["samples_per_edge"]
    if isinstance(spe, bool) or not isinstance(spe, int) or spe < 1:
        errors.append(f"samples_per_edge: must be a positive integer, got {spe!r}")

    if errors:
        raise ConfigError(errors)

    cfg = ScenarioConfig(
        name=name,
        chi_kind=chi_kind,
        chi_rate=chi_rate,
        R=R,
        omega=omega,
        T=T,
        theta=theta,
        steps=steps,
        outputs=tuple(outputs),
        thetas=tuple(float(t) for t in thetas),
        sweep_steps=tuple(sweep_steps),
        v_probe=v_probe,
        samples_per_edge=spe,
    )
    _check_numeric_regime(cfg)
    return cfg


def _check_numeric_regime(cfg: ScenarioConfig) -> None:
    eps = abs(cfg.epsilon)
    if eps > TOL.adiabatic_max:
        raise RegimeError(f"{cfg.name}: chi_rate*T = {eps:.3e} exceeds the hard bound {TOL.adiabatic_max:g}")
    if abs(cfg.chi_rate * cfg.T) >= 1.0:
        raise RegimeError(f"{cfg.name}: |chidot T| must be < 1")
    # largest per-step phase increment over any evolution the run will perform
    dphi = 2.0 * cfg.omega * cfg.R / SPEED_OF_LIGHT * abs(math.expm1(cfg.chi_rate * cfg.T) if cfg.chi_kind == "exponential" else cfg.chi_rate * cfg.T)
    coarsest = min([cfg.steps, *cfg.sweep_steps]) if "sweep" in cfg.outputs else cfg.steps
    if dphi / coarsest >= math.pi:
        raise ConfigError([f"steps: {coarsest} steps give a per-step phase >= pi; increase steps"])
    if "appendix" in cfg.outputs:
        x = abs(cfg.chi_rate * cfg.R * cfg.v_probe) / SPEED_OF_LIGHT**2
        if x > TOL.appendix_regime or cfg.v_probe / SPEED_OF_LIGHT >= TOL.appendix_velocity:
            raise RegimeError(f"{cfg.name}: probe parameters outside the first-order regime")
