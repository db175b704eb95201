"""Time the pendant contraction on long paths and report ring-operation counts."""

import argparse
import time
from dataclasses import dataclass

from treegf.genfunc import contract_all
from treegf.tree import path_tree


@dataclass(frozen=True)
class Config:
    sizes: tuple[int, ...] = (10**4, 10**5, 10**6)
    repeats: int = 1


def measure(n: int, repeats: int) -> tuple[int, int, float]:
    tree = path_tree(n)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        state = contract_all(tree, accumulate=True)
        count = state.p[state.live.index(1)] + state.N
        best = min(best, time.perf_counter() - start)
    return count, state.ops + 1, best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=lambda s: tuple(int(t) for t in s.split(",")), default=Config.sizes)
    parser.add_argument("--repeats", type=int, default=Config.repeats)
    args = parser.parse_args()
    cfg = Config(args.sizes, args.repeats)
    print(f"{'n':>9} {'ops':>9} {'ops/n':>6} {'seconds':>8} {'us/vertex':>9}  count ok")
    for n in cfg.sizes:
        count, ops, secs = measure(n, cfg.repeats)
        ok = count == n * (n + 1) // 2
        print(f"{n:>9} {ops:>9} {ops / n:>6.2f} {secs:>8.3f} {1e6 * secs / n:>9.2f}  {ok}")


if __name__ == "__main__":
    main()
