"""Command line driver: ``zgroupoid run --config cfg.json --suite all``."""
import argparse
import os
import sys
import time

from . import _kernels
from .config import build_context, load_config
from .errors import ConfigError
from .report import build_report, dumps, emit_plot_data
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
SUITE_NAMES = list(SUITES) + ["all"]


def run(config_path, suite, seed=None, stable=False, out=None):
    """Run a suite; returns (report dict, exit code)."""
    cfg = load_config(config_path)
    suite = suite or cfg.get("suite")
    if suite not in SUITE_NAMES:
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    ctx = build_context(cfg, seed)
    t0 = time.perf_counter()
    checks = run_suite(ctx, suite)
    wall = time.perf_counter() - t0
    report = build_report(suite, ctx.seed, checks, ctx.series, _kernels.BACKEND, wall, stable=stable)
    if out:
        os.makedirs(out, exist_ok=True)
        with open(os.path.join(out, "report.json"), "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
        emit_plot_data(report, out)
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="zgroupoid", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a verifier suite")
    r.add_argument("--config", required=True, help="path to the JSON experiment config")
    r.add_argument("--suite", choices=SUITE_NAMES, default=None, help="suite to run (default: config's 'suite')")
    r.add_argument("--seed", type=int, default=None, help="64-bit seed for randomized trials")
    r.add_argument("--stable", action="store_true", help="omit timestamp and timings from the report")
    r.add_argument("--out", default=None, help="directory for report.json and CSV plot data")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, code = run(args.config, args.suite, args.seed, args.stable, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(dumps(report))
    for c in report["checks"]:
        if c["asserted"] and not c["passed"]:
            print(f"FAILED: {c['name']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
