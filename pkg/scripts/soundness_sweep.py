#!/usr/bin/env python3
"""Randomized sweep comparing bounds, constructor, and exact values.

Draws seeded random graphs small enough for the subset oracle, then reports
how often each lower bound is tight and how far the constructor lands from
the optimum.  A quick way to eyeball sharpness beyond the acceptance gate.

    python scripts/soundness_sweep.py [--trials 300] [--max-n 13] [--seed 1]
"""
import argparse
import random
from collections import Counter

from gkindep import (
    brute_force_alpha,
    build_graph,
    construct_set,
    refined_bound,
)


def gnp(rng: random.Random, n: int, p: float):
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=300)
    parser.add_argument("--max-n", type=int, default=13)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    tight = Counter()
    gaps = Counter()
    checked = 0
    for _ in range(args.trials):
        g = gnp(rng, rng.randint(1, args.max_n), rng.choice([0.05, 0.15, 0.3, 0.5]))
        for k in (2, 3, 4, 5):
            alpha = brute_force_alpha(g, k)
            report = refined_bound(g, k)
            built = len(construct_set(g, k).vertices)
            assert report.combined <= alpha, "combined bound overshot"
            assert report.conservative <= alpha, "conservative bound overshot"
            assert built <= alpha
            checked += 1
            tight["base_ceil"] += report.base_ceil == alpha
            tight["combined"] += report.combined == alpha
            tight["conservative"] += report.conservative == alpha
            tight["constructor"] += built == alpha
            gaps[alpha - report.combined] += 1

    print(f"{checked} (graph, k) pairs checked; every bound was sound")
    for name in ("base_ceil", "combined", "conservative", "constructor"):
        print(f"  {name:<12} tight on {tight[name]:>5} ({100 * tight[name] / checked:.1f}%)")
    print("  combined-bound gap histogram:")
    for gap in sorted(gaps):
        print(f"    exact - combined = {gap}: {gaps[gap]}")


if __name__ == "__main__":
    main()
