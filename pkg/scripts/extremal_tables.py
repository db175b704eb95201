"""Tabulate the extremal trees by subtree count for small orders.

For each n: path and star counts, the broom minimum for every admissible
maximum degree, the T(n, d) maximum for every diameter, and for n >= 8 the
five largest counts.
"""

import argparse
from dataclasses import dataclass

from treegf.extremal import broom, census, cor_3_9_chain, tnd
from treegf.genfunc import path_count, star_count, subtree_count
from treegf.oracle import MAX_GENERATION_N


@dataclass(frozen=True)
class Config:
    n_min: int = 3
    n_max: int = 10


def table(n: int) -> list[str]:
    pool = census(n)
    lines = [f"n = {n}: {len(pool)} trees, min {path_count(n)} (path), max {star_count(n)} (star)"]
    for delta in range(3, n):
        best = min(c.chi for c in pool if c.max_degree >= delta)
        lines.append(f"  max degree >= {delta}: min {best}, broom {subtree_count(broom(n, delta))}")
    for d in range(2, n):
        best = max(c.chi for c in pool if c.diameter >= d)
        lines.append(f"  diameter >= {d}: max {best}, T(n,d) {subtree_count(tnd(n, d))}")
    if n >= 8:
        chain = cor_3_9_chain(n)
        runner_up = sorted({c.chi for c in pool}, reverse=True)[5]
        lines.append("  top five: " + " > ".join(f"{c} {name}" for name, _, c, _ in chain) + f"; next {runner_up}")
    return lines


def main() -> None:
    parser = argparse.ArgumentParser(description="Extremal subtree counts by order.")
    parser.add_argument("--n-min", type=int, default=Config.n_min)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    args = parser.parse_args()
    cfg = Config(args.n_min, min(args.n_max, MAX_GENERATION_N))
    for n in range(cfg.n_min, cfg.n_max + 1):
        print("\n".join(table(n)))


if __name__ == "__main__":
    main()
