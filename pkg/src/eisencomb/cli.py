"""Command line front end.

Exit codes: 0 success, 2 usage/parse/validation error, 3 discrepancy found.
"""

from __future__ import annotations

import argparse
import configparser
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .report import block_summary_line, dumps_json, instance_text, sweep_csv, sweep_text
from .verifier import InvalidConfig, LemmaInstance, SweepConfig, Verdict, sweep, verify_instance
from .weights import parse_weight
from .weyl import BlockPair, BlockPairError, format_polynomial, gaussian_binomial, kostant_reps, length_polynomial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3

log = logging.getLogger("eisencomb")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_analyze(args) -> int:
    try:
        lam = parse_weight(args.lam)
    except ValueError as exc:
        return _fail(f"{args.lam}: {exc}")
    try:
        lam_prime = parse_weight(args.lam_prime)
    except ValueError as exc:
        return _fail(f"{args.lam_prime}: {exc}")
    try:
        inst = LemmaInstance.create(lam, lam_prime)
    except ValueError as exc:
        return _fail(str(exc))
    rec = verify_instance(inst).to_json()
    if args.format == "json":
        sys.stdout.write(dumps_json(rec))
    else:
        sys.stdout.write(instance_text(rec))
    return EXIT_DISCREPANCY if rec["verdict"] == Verdict.DISCREPANCY.value else EXIT_OK


def cmd_kostant(args) -> int:
    try:
        block = BlockPair(args.n, args.n_prime)
    except BlockPairError as exc:
        return _fail(str(exc))
    reps = kostant_reps(block)
    poly = length_polynomial(reps)
    expected = gaussian_binomial(block.N, block.n)
    shown = reps if args.length is None else [w for w in reps if w.length == args.length]
    if args.format == "json":
        sys.stdout.write(
            dumps_json(
                {
                    "block": str(block),
                    "representatives": [{"w": str(w), "length": w.length} for w in shown],
                    "length_polynomial": poly,
                    "gaussian_binomial": expected,
                    "match": poly == expected,
                }
            )
        )
    else:
        for w in shown:
            print(f"{w}  length {w.length}")
        print(f"length polynomial: {format_polynomial(poly)}")
        print(
            f"[{block.N} choose {block.n}]_q = {format_polynomial(expected)}: "
            + ("match" if poly == expected else "MISMATCH")
        )
    return EXIT_OK


def _parse_twists(text: str) -> tuple[Optional[tuple[int, int]], Optional[int]]:
    """``auto``, ``auto:M`` or ``LO:HI``; returns (range, margin)."""
    text = text.strip()
    if text == "auto":
        return None, None
    if text.startswith("auto:"):
        return None, int(text[5:])
    lo, sep, hi = text.rpartition(":")
    if not sep:
        raise InvalidConfig(f"bad twist range {text!r}, expected auto, auto:M or LO:HI")
    return (int(lo), int(hi)), None


def _load_config_file(path: str) -> dict:
    parser = configparser.ConfigParser()
    try:
        parser.read_string("[sweep]\n" + Path(path).read_text())
    except (OSError, configparser.Error) as exc:
        raise InvalidConfig(f"cannot read config {path}: {exc}") from None
    return dict(parser["sweep"])


def build_sweep_config(args) -> SweepConfig:
    values = _load_config_file(args.config) if args.config else {}
    for key in ("blocks", "bound", "twists", "output", "format", "verbosity"):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = str(flag)
    try:
        blocks = tuple(
            BlockPair.parse(tok) for tok in values.get("blocks", "2x1").split(",") if tok.strip()
        )
        bound = int(values.get("bound", "6"))
        twists, margin = _parse_twists(values.get("twists", "auto"))
    except (ValueError, BlockPairError) as exc:
        raise InvalidConfig(str(exc)) from None
    return SweepConfig(
        block_pairs=blocks,
        entry_bound=bound,
        twist_range=twists,
        twist_margin=2 if margin is None else margin,
        output_path=values.get("output"),
        format=values.get("format", "json"),
        verbosity=values.get("verbosity", "summary"),
    )


def cmd_sweep(args) -> int:
    try:
        config = build_sweep_config(args)
        run_config = config
        if config.format == "csv" and config.verbosity != "full":
            run_config = dataclasses.replace(config, verbosity="full")
        report = sweep(run_config, jobs=args.jobs)
    except InvalidConfig as exc:
        return _fail(str(exc))

    if config.format == "json":
        text = dumps_json(report)
    elif config.format == "csv":
        text = sweep_csv(report["instances"])
    else:
        text = sweep_text(report)

    summary_stream = sys.stdout
    if config.output_path:
        Path(config.output_path).write_text(text)
    else:
        sys.stdout.write(text)
        summary_stream = sys.stderr
    for blk in report["per_block"]:
        print(block_summary_line(blk), file=summary_stream)

    if report["discrepancies"]:
        dump = dumps_json({"config": report["config"], "counterexamples": report["discrepancies"]})
        target = args.counterexamples or (
            config.output_path + ".counterexamples.json" if config.output_path else None
        )
        if target:
            Path(target).write_text(dump)
            print(f"{len(report['discrepancies'])} discrepancies written to {target}", file=sys.stderr)
        else:
            sys.stderr.write(dump)
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        data = json.loads(Path(args.path).read_text())
    except (OSError, ValueError) as exc:
        return _fail(f"cannot read report {args.path}: {exc}")
    if "per_block" not in data:
        # single-instance report from `analyze --format json`
        if "verdict" not in data:
            return _fail(f"{args.path} is not a report")
        if args.format == "csv":
            sys.stdout.write(sweep_csv([data]))
        else:
            sys.stdout.write(instance_text(data))
        return EXIT_OK
    if args.format == "csv":
        if "instances" not in data:
            return _fail("report has no per-instance records; rerun sweep with --verbosity full")
        sys.stdout.write(sweep_csv(data["instances"]))
    else:
        sys.stdout.write(sweep_text(data))
    return EXIT_DISCREPANCY if data["discrepancies"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eisencomb", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze one pair of weights")
    p.add_argument("lam", metavar="LAMBDA", help="GL_n weight, e.g. [1,0]")
    p.add_argument("lam_prime", metavar="LAMBDA_PRIME", help="GL_n' weight, e.g. [2]")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("kostant", help="list Kostant representatives for a block pair")
    p.add_argument("n", type=int)
    p.add_argument("n_prime", type=int)
    p.add_argument("--length", type=int, default=None, help="only representatives of this length")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("sweep", help="exhaustive sweep over bounded weights")
    p.add_argument("--config", help="key = value file with sweep settings")
    p.add_argument("--blocks", help="comma separated block pairs, e.g. 2x1,2x3 (default 2x1)")
    p.add_argument("--bound", type=int, help="entry bound for canonical weights (default 6)")
    p.add_argument("--twists", help="auto, auto:MARGIN or LO:HI (default auto, margin 2)")
    p.add_argument("--format", choices=("json", "csv", "text"))
    p.add_argument("--verbosity", choices=("summary", "full"))
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--counterexamples", help="where to dump discrepancies")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", help="re-render a saved JSON report")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
