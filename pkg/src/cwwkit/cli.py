"""Command-line interface.

Subcommands: `codebook validate`, `evaluate`, `rank`, `compare`.
Exit codes: 0 success, 1 usage or configuration error, 2 data or
validation error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .codebook import (default_codebook, default_feedback_path, load_codebook,
                       verify_stored_centroids)
from .errors import ConfigurationError, CwwError
from .it2 import DiscretizationGrid
from .pipeline import (ALL_METHODS, EvalOptions, Method, evaluate_batch,
                       rank_students, uniqueness_report)
from .reporting import (render_csv, render_json, render_ranking, render_table,
                        render_uniqueness)
from .vocabulary import read_feedback_file

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2

CODEBOOK_ENV = "CWWKIT_CODEBOOK"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors honor the exit-code contract."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cwwkit",
                     description="Linguistic evaluation of examination strategies.")
    sub = parser.add_subparsers(dest="command", required=True)

    codebook = sub.add_parser("codebook", help="codebook maintenance")
    codebook_sub = codebook.add_subparsers(dest="codebook_command", required=True)
    validate = codebook_sub.add_parser(
        "validate", help="check FOU invariants and stored centroids")
    validate.add_argument("--codebook", help="codebook file (default: built-in)")
    validate.add_argument("--tolerance", type=float, default=0.05,
                          help="allowed |recomputed - stored| per centroid end")
    validate.add_argument("--grid", type=int, default=1001, metavar="N",
                          help="grid sample count")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--feedback",
                        help="feedback batch file (default: built-in sample)")
    common.add_argument("--codebook", help="codebook file (default: built-in)")
    common.add_argument("--grid", type=int, default=1001, metavar="N",
                        help="grid sample count")
    common.add_argument("--lwa-mode", choices=("exact", "paper"), default="exact",
                        help="aggregation mode for the perceptual method")
    common.add_argument("--out", help="write output to this file instead of stdout")

    evaluate = sub.add_parser("evaluate", parents=[common],
                              help="evaluate a feedback batch")
    evaluate.add_argument("--methods", default="all",
                          help="comma-separated method names, or 'all'")
    evaluate.add_argument("--format", choices=("table", "csv", "json"),
                          default="table")
    evaluate.add_argument("--verbose-precision", action="store_true",
                          help="print perceptual scores at full precision")

    compare = sub.add_parser("compare", parents=[common],
                             help="evaluate plus a uniqueness summary")
    compare.add_argument("--methods", default="all",
                         help="comma-separated method names, or 'all'")
    compare.add_argument("--format", choices=("table", "csv", "json"),
                         default="table")
    compare.add_argument("--verbose-precision", action="store_true",
                         help="print perceptual scores at full precision")

    rank = sub.add_parser("rank", parents=[common],
                          help="rank the batch by one method's score")
    rank.add_argument("--method", required=True,
                      help="method providing the ranking score")
    return parser


def _parse_methods(text: str) -> tuple[Method, ...]:
    if text.strip().lower() == "all":
        return ALL_METHODS
    methods = []
    for name in text.split(","):
        name = name.strip()
        try:
            methods.append(Method(name))
        except ValueError:
            valid = ", ".join(m.value for m in ALL_METHODS)
            raise ConfigurationError(
                f"unknown method {name!r}; valid methods: {valid}, all"
            ) from None
    if not methods:
        raise ConfigurationError("no methods selected")
    return tuple(methods)


def _load_codebook(path: str | None):
    path = path or os.environ.get(CODEBOOK_ENV)
    if path is None:
        return default_codebook()
    if not os.path.exists(path):
        raise FileNotFoundError(f"codebook file not found: {path}")
    return load_codebook(path)


def _load_feedback(path: str | None):
    if path is None:
        return read_feedback_file(default_feedback_path())
    if not os.path.exists(path):
        raise FileNotFoundError(f"feedback file not found: {path}")
    return read_feedback_file(path)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _options(args) -> EvalOptions:
    return EvalOptions(
        grid=DiscretizationGrid(sample_count=args.grid),
        lwa_mode=args.lwa_mode,
    )


def _cmd_codebook_validate(args) -> int:
    cb = _load_codebook(args.codebook)
    grid = DiscretizationGrid(sample_count=args.grid)
    verification = verify_stored_centroids(cb, grid, args.tolerance)
    print(verification.format_text())
    for flag in cb.flags:
        print(f"flag: {flag}")
    return EXIT_OK if verification.passed else EXIT_DATA


def _render_report(report, args, uniqueness=None) -> str:
    verbose = getattr(args, "verbose_precision", False)
    if args.format == "csv":
        text = render_csv(report, verbose)
        if uniqueness is not None:
            text += "\n" + render_uniqueness(uniqueness)
        return text
    if args.format == "json":
        return render_json(report, verbose, uniqueness)
    text = render_table(report, verbose)
    if uniqueness is not None:
        text += "\n" + render_uniqueness(uniqueness)
    return text


def _cmd_evaluate(args, with_uniqueness: bool) -> int:
    methods = _parse_methods(args.methods)
    cb = _load_codebook(args.codebook) if Method.PERCEPTUAL in methods else None
    feedback = _load_feedback(args.feedback)
    report = evaluate_batch(feedback, methods, cb, options=_options(args))
    uniqueness = uniqueness_report(report) if with_uniqueness else None
    _emit(_render_report(report, args, uniqueness), args.out)
    flagged = any(
        row.error is not None or any(cell.error for cell in row.cells.values())
        for row in report.rows
    )
    return EXIT_DATA if flagged else EXIT_OK


def _cmd_rank(args) -> int:
    methods = _parse_methods(args.method)
    if len(methods) != 1:
        raise ConfigurationError("rank takes exactly one method")
    method = methods[0]
    cb = _load_codebook(args.codebook) if method is Method.PERCEPTUAL else None
    feedback = _load_feedback(args.feedback)
    report = evaluate_batch(feedback, (method,), cb, options=_options(args))
    ranking = rank_students(report, method)
    _emit(render_ranking(ranking, method), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "codebook":
            return _cmd_codebook_validate(args)
        if args.command == "evaluate":
            return _cmd_evaluate(args, with_uniqueness=False)
        if args.command == "compare":
            return _cmd_evaluate(args, with_uniqueness=True)
        return _cmd_rank(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ConfigurationError, FileNotFoundError) as exc:
        print(f"cwwkit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (CwwError, ValueError) as exc:
        print(f"cwwkit: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
