"""Verification suites that pit the contraction engine against independent routes.

Each suite returns a :class:`Verdict`, which is truthy exactly when the check
passed.  ``TREEGF_THREADS`` caps the number of worker processes used by the
per-tree suites (unset or 0 means one per CPU).
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .errors import BadParameters, TooLarge
from .genfunc import (
    WeightMode,
    apply_mode,
    closed_path_gf,
    closed_path_rooted_gf,
    closed_star_gf,
    pair_gf,
    rooted_gf,
    subtree_count,
    total_gf,
)
from .oracle import all_trees, brute_gf, enumerate_subtrees
from .tree import WeightedTree, build_tree

ORACLE_MAX_N = 9
PAIR_ORACLE_MAX_N = 7
CONFLUENCE_MAX_N = 9
CLOSED_FORM_MAX_N = 12

SYMBOLIC_MODES = (WeightMode.UNIT, WeightMode.EDGE_VAR, WeightMode.VERTEX_VAR, WeightMode.BIVARIATE)


@dataclass
class Verdict:
    check: str
    n: int
    trees_examined: int
    passed: bool
    witnesses: list[dict[str, Any]] = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "n": self.n,
            "trees_examined": self.trees_examined,
            "result": "pass" if self.passed else "fail",
            "witnesses": self.witnesses,
        }


def worker_count() -> int:
    raw = os.environ.get("TREEGF_THREADS", "").strip()
    try:
        requested = int(raw) if raw else 0
    except ValueError:
        requested = 0
    if requested <= 0:
        return os.cpu_count() or 1
    return requested


def fan_out(fn: Callable, items: Iterable, min_items: int = 16) -> list:
    """``list(map(fn, items))``, spread over processes when worthwhile.  Order is preserved."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1 or len(items) < min_items:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def edge_list(tree: WeightedTree) -> list[list[int]]:
    return [[u, v] for u, v in tree.edge_pairs()]


def _require(n: int, low: int, high: int) -> None:
    if n > high:
        raise TooLarge(f"n = {n} exceeds the cap of {high} for this check")
    if n < low:
        raise BadParameters(f"n = {n} is below the minimum of {low} for this check")


# -- contraction vs brute force -------------------------------------------


def oracle_mismatches(tree: WeightedTree, pairs: bool = True) -> list[str]:
    """Every place where the contraction results disagree with brute force."""
    bad = []
    subtrees = enumerate_subtrees(tree)
    if len(subtrees) != subtree_count(tree):
        bad.append("subtree count")
    for mode in SYMBOLIC_MODES:
        t = apply_mode(tree, mode)
        if total_gf(t) != brute_gf(t, subtrees=subtrees):
            bad.append(f"total {mode.value}")
        for v in t.vertices:
            if rooted_gf(t, v) != brute_gf(t, (v,), subtrees):
                bad.append(f"rooted {mode.value} v={v}")
        if pairs:
            for vi, vj in itertools.combinations(t.vertices, 2):
                if pair_gf(t, vi, vj) != brute_gf(t, (vi, vj), subtrees):
                    bad.append(f"pair {mode.value} ({vi},{vj})")
    return bad


def _oracle_job(tree: WeightedTree) -> list[str]:
    return oracle_mismatches(tree, pairs=tree.n <= PAIR_ORACLE_MAX_N)


def verify_oracle(n: int) -> Verdict:
    _require(n, 1, ORACLE_MAX_N)
    trees = all_trees(n)
    results = fan_out(_oracle_job, trees)
    witnesses = [{"edges": edge_list(t), "mismatches": bad} for t, bad in zip(trees, results) if bad]
    return Verdict("oracle", n, len(trees), not witnesses, witnesses)


# -- elimination-order independence ---------------------------------------


def confluence_mismatches(tree: WeightedTree, orders: int = 20, seed: int = 0) -> list[str]:
    rng = random.Random(f"{seed}:{tree.edge_pairs()}")
    weighted = tree.reweighted(
        [rng.randint(2, 9) for _ in range(tree.n)], [rng.randint(2, 9) for _ in range(tree.n - 1)]
    )
    symbolic = apply_mode(tree, WeightMode.BIVARIATE)
    ref_total = total_gf(weighted)
    ref_symbolic = total_gf(symbolic)
    ref_rooted = {v: rooted_gf(weighted, v) for v in tree.vertices}
    pairs = list(itertools.combinations(tree.vertices, 2))
    ref_pair = {p: pair_gf(weighted, *p) for p in pairs}
    bad = []
    for k in range(orders):
        if total_gf(weighted, rng=rng) != ref_total or total_gf(symbolic, rng=rng) != ref_symbolic:
            bad.append(f"total order#{k}")
        for v in tree.vertices:
            if rooted_gf(weighted, v, rng=rng) != ref_rooted[v]:
                bad.append(f"rooted v={v} order#{k}")
        for p in pairs:
            if pair_gf(weighted, *p, rng=rng) != ref_pair[p]:
                bad.append(f"pair {p} order#{k}")
    return bad


def verify_confluence(n: int, orders: int = 20, seed: int = 0) -> Verdict:
    _require(n, 1, CONFLUENCE_MAX_N)
    trees = all_trees(n)
    results = fan_out(_ConfluenceJob(orders, seed), trees)
    witnesses = [{"edges": edge_list(t), "mismatches": bad} for t, bad in zip(trees, results) if bad]
    return Verdict("confluence", n, len(trees), not witnesses, witnesses)


@dataclass(frozen=True)
class _ConfluenceJob:
    orders: int
    seed: int

    def __call__(self, tree: WeightedTree) -> list[str]:
        return confluence_mismatches(tree, self.orders, self.seed)


# -- closed forms ----------------------------------------------------------


def verify_closed_forms(n: int, instances: int = 200, seed: int = 0) -> Verdict:
    """Random integer-weighted paths and stars on ``1..n`` vertices vs. contraction."""
    _require(n, 1, CLOSED_FORM_MAX_N)
    rng = random.Random(seed)
    witnesses = []
    for k in range(instances):
        size = rng.randint(1, n)
        ys = [rng.randint(0, 9) for _ in range(size)]
        xs = [rng.randint(0, 9) for _ in range(size - 1)]
        path = build_tree(size, [(i, i + 1, xs[i - 1]) for i in range(1, size)], ys)
        if closed_path_gf(ys, xs) != total_gf(path) or closed_path_rooted_gf(ys, xs) != rooted_gf(path, 1):
            witnesses.append({"shape": "path", "vertex_weights": ys, "edge_weights": xs})
        # star: centre is vertex 1, leaf k + 1 carries ys[k]
        star = build_tree(size, [(1, i + 2, xs[i]) for i in range(size - 1)], [ys[-1], *ys[:-1]])
        if closed_star_gf(ys[:-1], ys[-1], xs) != total_gf(star):
            witnesses.append({"shape": "star", "vertex_weights": ys, "edge_weights": xs})
    return Verdict("closedforms", n, 2 * instances, not witnesses, witnesses)
