"""Command-line entry point: ``pioneer-berry run <config> [options]``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import warnings

from ..exceptions import AdiabaticityWarning, RegimeError
from .config import ConfigError, build_config, load_mapping
from .presets import PRESETS
from .runner import run

OUT_ENV = "PIONEER_BERRY_OUT"
DEFAULT_OUT = "runs"

EXIT_OK, EXIT_CONFIG, EXIT_REGIME, EXIT_IO = 0, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pioneer-berry", description="Geometric-phase frequency drift scenarios")
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run scenarios from a config file and/or presets")
    r.add_argument("config", nargs="?", help="flat TOML scenario file")
    r.add_argument("--out", help=f"output directory (default: ${OUT_ENV} or ./{DEFAULT_OUT})")
    r.add_argument("--preset", action="append", default=[], choices=sorted(PRESETS) + ["all"],
                   help="built-in scenario; repeatable, 'all' selects every preset")
    r.add_argument("--steps", type=int, help="override the number of evolution steps")
    r.add_argument("--quiet", action="store_true", help="suppress progress output")
    r.add_argument("--workers", type=int, help="process pool size")
    return ap


def _collect(args) -> list:
    overrides = {} if args.steps is None else {"steps": args.steps}
    mappings = []
    if args.config:
        try:
            mappings.append(load_mapping(args.config))
        except FileNotFoundError as exc:
            raise ConfigError([f"config: no such file {args.config!r}"]) from exc
    names = sorted(PRESETS) if "all" in args.preset else args.preset
    mappings.extend(PRESETS[n] for n in names)
    if not mappings:
        raise ConfigError(["config: give a config file or --preset"])
    configs, errors = [], []
    for m in mappings:
        try:
            configs.append(build_config(m, overrides))
        except ConfigError as exc:
            label = m.get("name", "<unnamed>")
            errors.extend(f"[{label}] {e}" for e in exc.errors)
    if errors:
        raise ConfigError(errors)
    return configs


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    if args.quiet:
        warnings.simplefilter("ignore", AdiabaticityWarning)
    out = args.out or os.environ.get(OUT_ENV) or DEFAULT_OUT
    try:
        configs = _collect(args)
        reports = run(configs, out, workers=args.workers)
    except ConfigError as exc:
        for e in exc.errors:
            print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except RegimeError as exc:
        print(f"refusing to run: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    if not args.quiet:
        for rep in reports:
            print(f"{rep['name']}: wrote {os.path.join(out, rep['name'])}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
