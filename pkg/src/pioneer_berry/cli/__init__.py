from .config import ConfigError, ScenarioConfig, build_config, parse_length
from .main import main
from .runner import emit_report_json, emit_trajectory_csv, run, run_scenario

__all__ = [
    "ConfigError",
    "ScenarioConfig",
    "build_config",
    "emit_report_json",
    "emit_trajectory_csv",
    "main",
    "parse_length",
    "run",
    "run_scenario",
]
