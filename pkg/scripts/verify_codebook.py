#!/usr/bin/env python3
"""Recompute the centroid of every codebook word with both the iterative
algorithm and the exhaustive switch scan, and compare against the stored
values. Exits nonzero if any word drifts beyond the tolerance.

Usage:
    python scripts/verify_codebook.py [--codebook FILE] [--tolerance T] [--grid N]
"""

import argparse
import sys

from cwwkit import (DiscretizationGrid, centroid_brute_force, default_codebook,
                    load_codebook, verify_stored_centroids)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--codebook", default=None)
    parser.add_argument("--tolerance", type=float, default=0.05)
    parser.add_argument("--grid", type=int, default=1001)
    args = parser.parse_args()

    cb = load_codebook(args.codebook) if args.codebook else default_codebook()
    grid = DiscretizationGrid(sample_count=args.grid)

    verification = verify_stored_centroids(cb, grid, args.tolerance)
    print(verification.format_text())

    # cross-check the iterative route against the exhaustive scan
    worst = 0.0
    for check, entry in zip(verification.checks, cb.entries):
        scan = centroid_brute_force(entry.fou, grid)
        worst = max(worst, abs(check.recomputed.c_l - scan.c_l),
                    abs(check.recomputed.c_r - scan.c_r))
    print(f"iterative vs exhaustive scan, worst delta: {worst:.3e}")

    sys.exit(0 if verification.passed and worst <= 1e-9 else 2)


if __name__ == "__main__":
    main()
