"""Command line entry point for running law suites.

Exit codes: 0 when every law of every selected suite passed, 1 when at least
one law failed, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harness import (
    SUITE_NAMES,
    CheckConfig,
    CheckReport,
    SuiteNotApplicableError,
    run_suite,
)

EFFECTS = ("identity", "maybe", "error", "state", "choice")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lawcheck",
        description="Exhaustively check laws of effect-generic lists and queues at small bounds.",
    )
    parser.add_argument("--effect", required=True, choices=EFFECTS)
    parser.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    parser.add_argument("--max-len", type=_nonneg, default=3, help="cell budget for list cases")
    parser.add_argument("--domain-size", type=_nonneg, default=2, help="element domain size")
    parser.add_argument("--depth", type=_nonneg, default=1, help="effect layers per slot")
    parser.add_argument("--state-size", type=_nonneg, default=2, help="state universe size")
    parser.add_argument("--max-arity", type=_nonneg, default=2, help="largest choice width")
    parser.add_argument("--tsv", type=Path, default=None, help="write the delimited report here")
    parser.add_argument(
        "--figures", type=Path, default=None, help="directory for per-suite report figures"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports: list[CheckReport] = []
    for suite in suites:
        cfg = CheckConfig(
            kind=args.effect,
            suite=suite,
            max_len=args.max_len,
            domain_size=args.domain_size,
            depth=args.depth,
            state_size=args.state_size,
            max_arity=args.max_arity,
        )
        try:
            reports.append(run_suite(cfg))
        except SuiteNotApplicableError as exc:
            if args.suite == "all":
                print(f"suite {suite}: not applicable for effect {args.effect} (skipped)")
                continue
            print(f"lawcheck: {exc}", file=sys.stderr)
            return 2

    for report in reports:
        for line in report.text_lines():
            print(line)

    if args.tsv is not None:
        lines = [line for report in reports for line in report.tsv_lines()]
        args.tsv.parent.mkdir(parents=True, exist_ok=True)
        args.tsv.write_text("".join(line + "\n" for line in lines), encoding="utf-8")

    if args.figures is not None:
        from .figures import report_figure

        args.figures.mkdir(parents=True, exist_ok=True)
        for report in reports:
            report_figure(report, args.figures / f"{report.suite}_{args.effect}.png")

    return 0 if all(not report.failures for report in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
