"""Subtree generating functions by repeated pendant contraction.

Three quantities are computed, all in ``n - 1`` or fewer contraction steps:

* :func:`total_gf` -- sum of weights of all subtrees,
* :func:`rooted_gf` -- sum over subtrees containing a given vertex,
* :func:`pair_gf` -- sum over subtrees containing two given vertices.

A subtree is a nonempty connected vertex set; its weight is the product of
its vertex weights and the weights of the edges inside it.  Counts and size
profiles are these functions evaluated in particular weightings.
"""

from __future__ import annotations

import enum
import heapq
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SameVertex
from .ring import X, Y, Poly2, RingElem, as_poly
from .tree import ContractionState, WeightedTree, contract_pendant, path_between


class WeightMode(enum.Enum):
    UNIT = "unit"  # f = g = 1 over the integers
    EDGE_VAR = "edge"  # f = 1, g = x
    VERTEX_VAR = "vertex"  # f = y, g = 1
    BIVARIATE = "both"  # f = y, g = x
    EXPLICIT = "explicit"  # the tree's own weights


_MODE_WEIGHTS = {
    WeightMode.UNIT: (1, 1),
    WeightMode.EDGE_VAR: (Poly2.const(1), X),
    WeightMode.VERTEX_VAR: (Y, Poly2.const(1)),
    WeightMode.BIVARIATE: (Y, X),
}


def apply_mode(tree: WeightedTree, mode: WeightMode | str) -> WeightedTree:
    """Return ``tree`` with every vertex/edge weight replaced according to ``mode``."""
    mode = WeightMode(mode)
    if mode is WeightMode.EXPLICIT:
        return tree
    f, g = _MODE_WEIGHTS[mode]
    return tree.reweighted([f] * tree.n, [g] * (tree.n - 1))


# -- the contraction driver ------------------------------------------------


def contract_all(
    tree: WeightedTree,
    keep: Iterable[int] = (),
    *,
    accumulate: bool = False,
    rng: random.Random | None = None,
) -> ContractionState:
    """Contract pendants not in ``keep`` until none is left (or one vertex remains).

    By default the smallest eligible vertex id goes first.  With ``rng`` each
    step picks uniformly among the eligible pendants instead.
    """
    keep = frozenset(keep)
    for v in keep:
        tree.check_vertex(v)
    state = ContractionState.start(tree)
    if tree.n == 1:
        return state
    deg = state.live_degree
    cands = [v for v in tree.vertices if deg[v] == 1 and v not in keep]
    if rng is None:
        heapq.heapify(cands)
    while cands and state.remaining > 1:
        if rng is None:
            u = heapq.heappop(cands)
        else:
            k = rng.randrange(len(cands))
            cands[k], cands[-1] = cands[-1], cands[k]
            u = cands.pop()
        for v, _ in tree.incident(u):
            if state.live[v]:
                break
        contract_pendant(state, tree, u, accumulate)
        if deg[v] == 1 and v not in keep:
            if rng is None:
                heapq.heappush(cands, v)
            else:
                cands.append(v)
    return state


def _last_live(state: ContractionState) -> int:
    return state.live.index(1)


def total_gf(tree: WeightedTree, *, rng: random.Random | None = None) -> RingElem:
    """Sum of weights of all subtrees of ``tree``."""
    if tree.n == 1:
        return tree.f(1)
    state = contract_all(tree, accumulate=True, rng=rng)
    return state.p[_last_live(state)] + state.N


def rooted_gf(tree: WeightedTree, vi: int, *, rng: random.Random | None = None) -> RingElem:
    """Sum of weights of the subtrees containing ``vi``."""
    tree.check_vertex(vi)
    if tree.n == 1:
        return tree.f(vi)
    state = contract_all(tree, keep=(vi,), rng=rng)
    return state.p[vi]


def pair_gf(tree: WeightedTree, vi: int, vj: int, *, rng: random.Random | None = None) -> RingElem:
    """Sum of weights of the subtrees containing both ``vi`` and ``vj``."""
    tree.check_vertex(vi)
    tree.check_vertex(vj)
    if vi == vj:
        raise SameVertex("vertices must be distinct")
    state = contract_all(tree, keep=(vi, vj), rng=rng)
    path = path_between(tree, vi, vj)
    result = math.prod((state.p[v] for v in path), start=1)
    for a, b in zip(path, path[1:]):
        result = result * tree.g(a, b)
    return result


# -- counts ----------------------------------------------------------------


def subtree_count(tree: WeightedTree) -> int:
    return total_gf(apply_mode(tree, WeightMode.UNIT))


def rooted_count(tree: WeightedTree, vi: int) -> int:
    return rooted_gf(apply_mode(tree, WeightMode.UNIT), vi)


def pair_count(tree: WeightedTree, vi: int, vj: int) -> int:
    return pair_gf(apply_mode(tree, WeightMode.UNIT), vi, vj)


# -- size profiles ---------------------------------------------------------


@dataclass(frozen=True)
class SubtreeProfile:
    """Subtree counts by size.

    ``a[k]`` counts subtrees with ``k`` edges (``k = 0..n-1``) and
    ``b[k]`` those with ``k`` vertices (``b[0]`` is always 0), so
    ``a[k] == b[k + 1]``.
    """

    a: tuple[int, ...]

    @property
    def b(self) -> tuple[int, ...]:
        return (0, *self.a)

    def by_edges(self, k: int) -> int:
        return self.a[k] if 0 <= k < len(self.a) else 0

    def by_vertices(self, k: int) -> int:
        return self.by_edges(k - 1)

    @property
    def total(self) -> int:
        return sum(self.a)


def _profile(gf: RingElem, n: int) -> SubtreeProfile:
    gf = as_poly(gf)
    return SubtreeProfile(tuple(gf.coefficient(k, 0) for k in range(n)))


def size_profile(tree: WeightedTree) -> SubtreeProfile:
    return _profile(total_gf(apply_mode(tree, WeightMode.EDGE_VAR)), tree.n)


def rooted_profile(tree: WeightedTree, vi: int) -> SubtreeProfile:
    return _profile(rooted_gf(apply_mode(tree, WeightMode.EDGE_VAR), vi), tree.n)


def pair_profile(tree: WeightedTree, vi: int, vj: int) -> SubtreeProfile:
    return _profile(pair_gf(apply_mode(tree, WeightMode.EDGE_VAR), vi, vj), tree.n)


# -- closed forms for weighted paths and stars -----------------------------


def closed_path_gf(vertex_weights: Sequence[RingElem], edge_weights: Sequence[RingElem]) -> RingElem:
    """Total generating function of the path ``v_1 - v_2 - ... - v_n`` by direct summation.

    Each subpath ``v_i..v_{i+j}`` contributes ``x_i y_i ... x_{i+j-1} y_{i+j-1} * y_{i+j}``.
    """
    y, x = list(vertex_weights), list(edge_weights)
    n = len(y)
    if n < 1 or len(x) != n - 1:
        raise ValueError(f"need n >= 1 vertex weights and n - 1 edge weights, got {len(y)} and {len(x)}")
    total = 0
    for j in range(n):
        for i in range(n - j):
            total = total + math.prod((x[s] * y[s] for s in range(i, i + j)), start=1) * y[i + j]
    return total


def closed_path_rooted_gf(vertex_weights: Sequence[RingElem], edge_weights: Sequence[RingElem]) -> RingElem:
    """Generating function of the subpaths containing the end vertex ``v_1``."""
    y, x = list(vertex_weights), list(edge_weights)
    n = len(y)
    if n < 1 or len(x) != n - 1:
        raise ValueError(f"need n >= 1 vertex weights and n - 1 edge weights, got {len(y)} and {len(x)}")
    inner = 1
    for j in range(1, n):
        inner = inner + math.prod((x[i] * y[i + 1] for i in range(j)), start=1)
    return y[0] * inner


def closed_star_gf(leaf_weights: Sequence[RingElem], center_weight: RingElem, edge_weights: Sequence[RingElem]) -> RingElem:
    """Total generating function of a star with ``r`` weighted leaves.

    Leaf ``k`` hangs on the centre by an edge of weight ``edge_weights[k]``.
    The sum over nonempty leaf subsets is taken in the factored form
    ``prod(1 + x_k y_k) - 1``.
    """
    ys, xs = list(leaf_weights), list(edge_weights)
    if len(ys) != len(xs):
        raise ValueError(f"{len(ys)} leaf weights but {len(xs)} edge weights")
    subsets = math.prod((1 + xk * yk for xk, yk in zip(xs, ys)), start=1) - 1
    return sum(ys, start=0) + center_weight + subsets * center_weight


def path_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n + 1) // 2


def star_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** (n - 1) + n - 1
