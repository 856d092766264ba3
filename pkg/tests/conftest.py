import sys

import numpy as np
import pytest

from pioneer_berry._config import SPEED_OF_LIGHT
from pioneer_berry.evolution import RoundTripScenario, ScaleFactorModel


def make_scenario(omega_r_over_c=1.0, T=1.0, theta=0.0, steps=100_000):
    """Scenario with ``omega R / c`` set exactly (omega = 1 rad/s)."""
    return RoundTripScenario(R=omega_r_over_c * SPEED_OF_LIGHT, omega=1.0, T=T, theta=theta, steps=steps)


def linear(eps, T=1.0):
    return ScaleFactorModel("linear", eps / T)


@pytest.fixture
def rng():
    return np.random.default_rng(20260417)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
