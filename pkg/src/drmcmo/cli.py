"""Command line entry point.

    drmcmo run --config campaign.yaml
    drmcmo run --problem bc_band --variant full --seed 1
    drmcmo summarize --dir outputs
    drmcmo front --record outputs/bc_band__full__ga__s1.json
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from drmcmo.algorithm import VARIANTS, AlgorithmConfig
from drmcmo.core import ConfigurationError
from drmcmo.harness.campaign import check_writable, execute_run, run_campaign
from drmcmo.harness.config import load_config
from drmcmo.harness.report import emit_front, fmt_sci, summarize, summary_text
from drmcmo.operators import OPERATORS
from drmcmo.problems import available_problems, get_problem
from drmcmo.records import read_record, write_record


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drmcmo", description="Detection-region CMOEA experiments")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a campaign from a config file, or a single run")
    p.add_argument("--config", type=Path, help="YAML campaign file")
    p.add_argument("--workers", type=int, help="override the worker count of --config")
    p.add_argument("--problem", help=f"one of: {', '.join(available_problems())}")
    p.add_argument("--variant", default="full", choices=VARIANTS)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--operator", default="ga", choices=OPERATORS)
    p.add_argument("--N", type=int, default=100, help="population size")
    p.add_argument("--max-fe", type=int, default=100_000, help="evaluation budget")
    p.add_argument("--front", help="reference front CSV for IGD/HV")
    p.add_argument("--out", type=Path, default=Path("outputs"), help="output directory for a single run")

    s = sub.add_parser("summarize", help="rebuild summary tables from run records")
    s.add_argument("--dir", type=Path, required=True)
    s.add_argument("--baseline", default="full")

    f = sub.add_parser("front", help="write the feasible final archive of a record as CSV")
    f.add_argument("--record", type=Path, required=True)
    f.add_argument("--out", type=Path, help="defaults to <record>.front.csv")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    if args.config is not None:
        config = load_config(args.config)
        if args.workers is not None:
            config.workers = args.workers
        summary = run_campaign(config)
        print(summary_text(summary), end="")
        return 0
    if not args.problem:
        raise ConfigurationError("run needs either --config or --problem")
    get_problem(args.problem)
    out = check_writable(args.out)
    config = AlgorithmConfig(N=args.N, max_fe=args.max_fe, variant=args.variant, operator=args.operator, seed=args.seed)
    record = execute_run(args.problem, config, front_path=args.front)
    path = write_record(record, out)
    if record.status != "ok":
        print(f"run failed: {record.error}", file=sys.stderr)
        return 1
    print(
        f"{record.key}: evaluations={record.evaluations} generations={record.generations} "
        f"igd={fmt_sci(record.final_igd, 4)} hv={fmt_sci(record.final_hv, 4)} -> {path}"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "summarize":
            summary = summarize(args.dir, baseline=args.baseline)
            print(summary_text(summary), end="")
            return 0
        record = read_record(args.record)
        out = args.out or args.record.with_suffix(".front.csv")
        print(emit_front(record, out))
        return 0
    except (ConfigurationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
