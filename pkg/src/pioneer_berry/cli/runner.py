"""Execute validated scenarios and write their CSV/JSON artefacts."""

from __future__ import annotations

import hashlib
import json
import logging
import math
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .. import __version__
from .._config import TOL
from ..anomaly import helicity_drift, pioneer_comparison, solve_ab_system, theta_independence_sweep
from ..doppler import (
    ProbeState,
    corrected_radial_velocity,
    dynamic_doppler_shift,
    dynamic_to_geometric_ratio,
    radial_metric_vector,
    velocity_correction,
)
from ..evolution import EvolutionTrajectory, RoundTripScenario, ScaleFactorModel, decompose, evolve
from ..geometric import berry_phase_analytic, connection_phase, pancharatnam_phase, polygon_states, solid_angle
from ..spinor import PoincarePoint
from .config import ScenarioConfig

log = logging.getLogger(__name__)

CSV_HEADER = "t,chi,phi,re_psi_plus,im_psi_plus,re_psi_minus,im_psi_minus,norm_err"
OCTANT = (PoincarePoint(math.pi / 2, 0.0), PoincarePoint(math.pi / 2, math.pi / 2), PoincarePoint(0.0, 0.0))


def _f(x) -> float:
    # +0.0 normalises negative zero so identical results print identically
    return float(x) + 0.0


def _q(value, tolerance=None, bound=None) -> dict:
    out = {"value": _f(value)}
    if tolerance is not None:
        out["tolerance"] = _f(tolerance)
    if bound is not None:
        out["bound"] = _f(bound)
    return out


def config_hash(cfg: ScenarioConfig) -> str:
    payload = {"name": cfg.name, **cfg.echo()}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _scenario(cfg: ScenarioConfig, theta=None, steps=None) -> RoundTripScenario:
    return RoundTripScenario(
        R=cfg.R,
        omega=cfg.omega,
        T=cfg.T,
        theta=cfg.theta if theta is None else theta,
        steps=cfg.steps if steps is None else steps,
    )


def _phase_block(traj: EvolutionTrajectory) -> dict:
    dec = decompose(traj)
    delta_phi = float(traj.delta_phis[-1])
    analytic = berry_phase_analytic(traj.theta, delta_phi)
    numeric = connection_phase(traj.states)
    tol = 1e-6 * abs(delta_phi / 2)
    return {
        "delta_phi": _q(delta_phi, tolerance=0.0),
        "gamma_numeric": _q(numeric, tolerance=tol),
        "gamma_analytic": _q(analytic, tolerance=0.0),
        "residual": _q(abs(numeric - analytic), bound=tol),
        "total": _q(dec.total, tolerance=TOL.norm),
        "dynamic": _q(dec.dynamic, tolerance=tol),
        "geometric": _q(dec.geometric, tolerance=tol),
        "transport_residual": _q(dec.transport_residual, bound=1e-10),
        "norm_error": _q(dec.norm_error, bound=TOL.norm),
    }


def _anomaly_block(cfg: ScenarioConfig, model: ScaleFactorModel) -> dict:
    hel = helicity_drift(_scenario(cfg), model)
    ab = solve_ab_system(cfg.theta, cfg.chi_rate, cfg.T)
    cmp = pioneer_comparison(model)
    return {
        "helicity_drift": _q(hel.omega_dot_over_omega, tolerance=0.0),
        "omega_dot_over_omega": _q(ab.omega_dot_over_omega, bound=ab.second_order_bound),
        "omega_dot_over_omega_exact": f"{ab.exact.numerator}/{ab.exact.denominator}",
        "first_order": _q(ab.first_order, bound=ab.second_order_bound),
        "degenerate": ab.degenerate,
        "pioneer": {
            "a_t_predicted": _q(cmp.a_t_predicted, tolerance=0.0),
            "acceleration_m_s2": _q(cmp.acceleration_predicted, tolerance=0.0),
            "acceleration_cm_s2": _q(cmp.acceleration_cgs, tolerance=0.0),
            "z_a_t": _q(cmp.z_a_t, bound=1.0),
            "z_a_p": _q(cmp.z_a_p, bound=1.0),
            "within_one_sigma": cmp.within_band(1.0),
        },
    }


def _appendix_block(cfg: ScenarioConfig) -> dict:
    probe = ProbeState(r_star=cfg.R, v_star=cfg.v_probe, h=cfg.chi_rate)
    omega_prime, frac = dynamic_doppler_shift(probe, cfg.omega)
    ratio = dynamic_to_geometric_ratio(probe) if cfg.chi_rate != 0 else 0.0
    return {
        "light_time": _q(probe.t, tolerance=0.0),
        "radial_metric_vector": _q(radial_metric_vector(probe), bound=TOL.appendix_regime),
        "corrected_radial_velocity": _q(corrected_radial_velocity(probe), bound=TOL.appendix_regime),
        "velocity_correction": _q(velocity_correction(probe), bound=TOL.appendix_regime),
        "omega_prime": _q(omega_prime, tolerance=0.0),
        "anomalous_fraction": _q(frac, bound=TOL.appendix_regime),
        "dynamic_to_geometric": _q(ratio, tolerance=0.01 * ratio),
    }


def _sweep_block(cfg: ScenarioConfig, model: ScaleFactorModel) -> dict:
    report = theta_independence_sweep(cfg.chi_rate, cfg.T, cfg.thetas)
    steps_rows = []
    for n in cfg.sweep_steps:
        traj = evolve(_scenario(cfg, steps=n), model)
        numeric = connection_phase(traj.states)
        analytic = berry_phase_analytic(traj.theta, float(traj.delta_phis[-1]))
        steps_rows.append({"steps": n, "residual": _q(abs(numeric - analytic), bound=1e-6 * abs(analytic))})
    return {
        "theta": {
            "thetas": [_f(t) for t in report.thetas],
            "omega_dot_over_omega": [_f(r) for r in report.ratios],
            "degenerate": [bool(d) for d in report.degenerate],
            "spread": _q(report.spread, bound=1e-15),
        },
        "steps": steps_rows,
    }


def _oracle_block(cfg: ScenarioConfig) -> dict:
    seq = polygon_states(OCTANT, cfg.samples_per_edge)
    omega = solid_angle(OCTANT)
    phase = pancharatnam_phase(seq)
    return {
        "samples_per_edge": cfg.samples_per_edge,
        "solid_angle": _q(omega, tolerance=1e-12),
        "pancharatnam_phase": _q(phase, tolerance=1e-8),
        "minus_half_solid_angle": _q(-omega / 2, tolerance=1e-12),
        "residual": _q(abs(phase + omega / 2), bound=1e-8),
    }


def run_scenario(cfg: ScenarioConfig) -> tuple[dict, EvolutionTrajectory | None, float]:
    """Compute every requested block for one scenario.

    Returns the report (without timing), the trajectory if one was produced
    and the wall time in seconds.
    """
    start = time.perf_counter()
    model = ScaleFactorModel(cfg.chi_kind, cfg.chi_rate)
    report = {
        "name": cfg.name,
        "config": cfg.echo(),
        "epsilon": _q(cfg.epsilon, bound=TOL.adiabatic_warn),
        "provenance": {"config_sha256": config_hash(cfg), "version": __version__},
    }
    traj = None
    if {"trajectory", "phases"} & set(cfg.outputs):
        traj = evolve(_scenario(cfg), model)
    if "phases" in cfg.outputs:
        report["phases"] = _phase_block(traj)
    if "anomaly" in cfg.outputs:
        report["anomaly"] = _anomaly_block(cfg, model)
    if "appendix" in cfg.outputs:
        report["appendix"] = _appendix_block(cfg)
    if "sweep" in cfg.outputs:
        report["sweep"] = _sweep_block(cfg, model)
    if "oracle" in cfg.outputs:
        report["oracle"] = _oracle_block(cfg)
    return report, (traj if "trajectory" in cfg.outputs else None), time.perf_counter() - start


def _atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def trajectory_csv(traj: EvolutionTrajectory) -> str:
    cols = np.column_stack(
        [
            traj.times,
            traj.chis,
            traj.phis,
            traj.states[:, 0].real,
            traj.states[:, 0].imag,
            traj.states[:, 1].real,
            traj.states[:, 1].imag,
            traj.norm_errors,
        ]
    )
    cols = cols + 0.0
    lines = [CSV_HEADER]
    lines.extend(",".join(f"{v:.17g}" for v in row) for row in cols.tolist())
    return "\n".join(lines) + "\n"


def emit_trajectory_csv(traj: EvolutionTrajectory, path) -> Path:
    """Write one row per sample, 17 significant digits."""
    _atomic_write(Path(path), trajectory_csv(traj))
    return Path(path)


def emit_report_json(report: dict, path) -> Path:
    """Write the report with sorted keys; the file appears only when complete."""
    _atomic_write(Path(path), json.dumps(report, sort_keys=True, indent=2) + "\n")
    return Path(path)


def _execute(cfg: ScenarioConfig, out_dir: str) -> tuple[str, dict, float]:
    report, traj, wall = run_scenario(cfg)
    target = Path(out_dir) / cfg.name
    if traj is not None:
        emit_trajectory_csv(traj, target / "trajectory.csv")
    emit_report_json(report, target / "report.json")
    return cfg.name, report, wall


def run(configs: list[ScenarioConfig], out_dir, workers: int | None = None) -> list[dict]:
    """Run scenarios (in a process pool when there are several) and write outputs.

    Wall times go to ``timing.json`` beside the summary so that the report
    files stay byte-identical between runs.
    """
    names = [c.name for c in configs]
    if len(set(names)) != len(names):
        raise ValueError("scenario names must be unique")
    out_dir = str(out_dir)
    if len(configs) == 1:
        results = [_execute(configs[0], out_dir)]
    else:
        with ProcessPoolExecutor(max_workers=workers or min(len(configs), os.cpu_count() or 1)) as pool:
            results = list(pool.map(_execute, configs, [out_dir] * len(configs)))
    results.sort(key=lambda r: r[0])
    for name, _, wall in results:
        log.info("%s finished in %.3f s", name, wall)
    summary = {"scenarios": [r[1] for r in results], "version": __version__}
    emit_report_json(summary, Path(out_dir) / "summary.json")
    timing = {"wall_time_s": {name: wall for name, _, wall in results}}
    emit_report_json(timing, Path(out_dir) / "timing.json")
    return [r[1] for r in results]
