"""Built-in scenarios, selectable with ``--preset NAME``."""

import math

# S-band tracking frequency of the Pioneer downlink
PIONEER_OMEGA = 2.0 * math.pi * 2.292e9

PRESETS = {
    "pioneer": {
        "name": "pioneer",
        "chi_kind": "linear",
        "chi_rate": 2.92e-18,
        "R": "40 AU",
        "omega": PIONEER_OMEGA,
        "T": "round-trip",
        "theta": 0.0,
        "steps": 100000,
        "outputs": ["trajectory", "phases", "anomaly", "appendix"],
        "v_probe": "12 km/s",
    },
    "static": {
        "name": "static",
        "chi_kind": "linear",
        "chi_rate": 0.0,
        "R": "40 AU",
        "omega": PIONEER_OMEGA,
        "T": "round-trip",
        "theta": math.pi / 3,
        "steps": 100000,
        "outputs": ["trajectory", "phases", "anomaly", "appendix"],
    },
    "octant-oracle": {
        "name": "octant-oracle",
        "chi_kind": "linear",
        "chi_rate": 0.0,
        "R": "1 AU",
        "omega": 1.0,
        "T": 1.0,
        "theta": math.pi / 2,
        "steps": 1000,
        "outputs": ["oracle", "phases"],
        "samples_per_edge": 10000,
    },
    "theta-sweep": {
        "name": "theta-sweep",
        "chi_kind": "linear",
        "chi_rate": 1e-18,
        "R": "40 AU",
        "omega": PIONEER_OMEGA,
        "T": 1e5,
        "theta": math.pi / 3,
        "steps": 100000,
        "outputs": ["phases", "anomaly", "sweep"],
        "thetas": [0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi],
        "sweep_steps": [1000, 10000, 100000],
    },
}
