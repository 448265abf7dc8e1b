#!/usr/bin/env python3
"""Evaluate the bundled 25-student batch with all four methods and print
the comparison table, per-method rankings and the uniqueness summary.

Usage:
    python scripts/run_comparison.py [--feedback FILE] [--grid N]
                                     [--lwa-mode exact|paper] [--verbose]
"""

import argparse

from cwwkit import (DiscretizationGrid, EvalOptions, Method, default_codebook,
                    default_feedback_path, evaluate_batch, rank_students,
                    read_feedback_file, uniqueness_report)
from cwwkit.reporting import render_ranking, render_table, render_uniqueness


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--feedback", default=None)
    parser.add_argument("--grid", type=int, default=1001)
    parser.add_argument("--lwa-mode", choices=("exact", "paper"), default="exact")
    parser.add_argument("--verbose", action="store_true",
                        help="full-precision perceptual scores")
    args = parser.parse_args()

    codebook = default_codebook()
    feedback = read_feedback_file(args.feedback or default_feedback_path())
    options = EvalOptions(grid=DiscretizationGrid(sample_count=args.grid),
                          lwa_mode=args.lwa_mode)
    report = evaluate_batch(feedback, cb=codebook, options=options)

    print(render_table(report, verbose=args.verbose))
    for method in Method:
        print(render_ranking(rank_students(report, method), method))
    print(render_uniqueness(uniqueness_report(report)))


if __name__ == "__main__":
    main()
