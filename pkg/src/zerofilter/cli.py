"""Command-line entry point.

Usage:
    zerofilter <subcommand> [--config PATH] [--set key=value]...
               [--out DIR] [--threads K]

Subcommands: thm1 (filter sweep), prop1 (expansion order), thm2
(non-uniformity floor), lemmas (construction checks), bench (operator
benchmark), all (everything except bench, one output directory).

Exit status: 0 when every verdict passes.  A failed experiment family
sets its bit: thm1=1, prop1=2, thm2=4, lemmas=8, bench=16.  Config
errors exit 65, output errors 66, runtime breakdowns 70.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import asdict

from . import __version__
from .config import default_threads, load_config
from .errors import ConfigError, IoError, ZeroFilterError
from .experiments import (run_lemma_suite, run_nonuniform, run_operator_bench,
                          run_taylor_order, run_zero_filter_limit)
from .output import write_json, write_manifest, write_result

EXIT_CONFIG = 65
EXIT_IO = 66
EXIT_RUNTIME = 70

RUNNERS = {
    "thm1": run_zero_filter_limit,
    "prop1": run_taylor_order,
    "thm2": run_nonuniform,
    "lemmas": run_lemma_suite,
    "bench": run_operator_bench,
}
FAMILY_BITS = {"thm1": 1, "prop1": 2, "thm2": 4, "lemmas": 8, "bench": 16}
# bench emits wall-clock cells, so the deterministic bundle excludes it
ALL_SEQUENCE = ("thm1", "prop1", "thm2", "lemmas")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerofilter",
        description="numerical laboratory for the vanishing-filter limit "
                    "of a filtered transport model")
    parser.add_argument("--version", action="version",
                        version=f"zerofilter {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    help_text = {
        "thm1": "filter sweep: error against the unfiltered flow",
        "prop1": "second-order short-time expansion check",
        "thm2": "non-uniformity floor for the two-scale family",
        "lemmas": "construction and operator invariants",
        "bench": "multiplier vs kernel-quadrature benchmark",
        "all": "thm1 + prop1 + thm2 + lemmas into one directory",
    }
    for name in ("thm1", "prop1", "thm2", "lemmas", "bench", "all"):
        p = sub.add_parser(name, help=help_text[name])
        p.add_argument("--config", metavar="PATH", default=None,
                       help="TOML config file (defaults used when absent)")
        p.add_argument("--set", metavar="KEY=VALUE", action="append",
                       default=[], dest="overrides",
                       help="override one config key (repeatable)")
        p.add_argument("--out", metavar="DIR", default="results",
                       help="output directory (default: results)")
        p.add_argument("--threads", metavar="K", type=int, default=None,
                       help="worker threads (default: ZEROFILTER_THREADS or 1)")
    return parser


def _juxtaposition(results: dict) -> dict:
    """Side-by-side view: the sweep decays, the two-scale family does not."""
    return {
        "alpha_decay": results["thm1"].constants.get("e_table", []),
        "nonuniform_floor": results["thm2"].constants.get("d_table", []),
        "control_decay": results["thm2"].constants.get("control_table", []),
        "eta0": results["thm2"].constants.get("eta0"),
    }


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        threads = args.threads if args.threads is not None else default_threads()
        if threads < 1:
            raise ConfigError(f"--threads must be >= 1, got {threads}")
        cfg = load_config(args.config, args.overrides, threads)
    except ConfigError as exc:
        print(f"zerofilter: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    names = ALL_SEQUENCE if args.subcommand == "all" else (args.subcommand,)
    exit_code = 0
    try:
        results = {}
        for name in names:
            results[name] = RUNNERS[name](cfg)
        for name in names:
            result = results[name]
            paths = write_result(result, args.out)
            if not result.all_pass():
                exit_code |= FAMILY_BITS[name]
            state = "pass" if result.all_pass() else "FAIL"
            print(f"{name}: {state} ({len(result.rows)} rows) -> {paths['csv']}")
        if args.subcommand == "all":
            overall = {
                "all_pass": all(r.all_pass() for r in results.values()),
                "experiments": {n: {"all_pass": r.all_pass(),
                                    "verdicts": r.verdicts}
                                for n, r in results.items()},
                "juxtaposition": _juxtaposition(results),
                "fingerprint": cfg.fingerprint(),
            }
            write_json(overall, f"{args.out}/all.summary.json")
        write_manifest(args.out, args.subcommand, asdict(cfg),
                       time.perf_counter() - started, exit_code)
    except ConfigError as exc:
        print(f"zerofilter: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IoError as exc:
        print(f"zerofilter: output error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ZeroFilterError as exc:
        print(f"zerofilter: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
