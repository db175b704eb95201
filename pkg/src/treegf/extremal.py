"""Extremal trees for the subtree count.

Family constructors, the four count-monotone tree transformations and
exhaustive checks of which trees minimise or maximise the number of
subtrees under degree and diameter constraints.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .checks import Verdict, edge_list
from .errors import BadParameters, BranchTooLarge, LegTooShort, NotNeighbor, NotPendantPath, TooLarge
from .genfunc import rooted_count, star_count, subtree_count
from .oracle import MAX_GENERATION_N, all_trees, canonical_code
from .tree import WeightedTree, build_tree, component, degree, diameter, induced_subtree, max_degree


class FamilyKind(enum.Enum):
    PATH = "path"
    STAR = "star"
    BROOM = "broom"  # T_{n,delta}
    TND = "tnd"  # T(n,d)
    BND = "bnd"  # B_{n,d}
    CATERPILLAR = "caterpillar"  # T_d(k_i, ..., k_d)
    SPIDER = "spider"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    n: int | None = None
    d: int | None = None
    delta: int | None = None
    i: int = 1
    ks: tuple[int, ...] = ()
    legs: tuple[int, ...] = ()


def path_family(n: int) -> WeightedTree:
    if n < 1:
        raise BadParameters(f"path needs n >= 1, got {n}")
    return build_tree(n, [(v, v + 1) for v in range(1, n)])


def star_family(n: int) -> WeightedTree:
    """``K_{1,n-1}`` with the centre at vertex 1."""
    if n < 1:
        raise BadParameters(f"star needs n >= 1, got {n}")
    return build_tree(n, [(1, v) for v in range(2, n + 1)])


def broom(n: int, delta: int) -> WeightedTree:
    """Path on ``n - delta + 1`` vertices with ``delta - 1`` extra leaves at vertex 1."""
    if delta < 2 or n < delta + 1:
        raise BadParameters(f"broom needs delta >= 2 and n >= delta + 1, got n={n}, delta={delta}")
    spine = n - delta + 1
    edges = [(v, v + 1) for v in range(1, spine)]
    edges += [(1, v) for v in range(spine + 1, n + 1)]
    return build_tree(n, edges)


def tnd(n: int, d: int) -> WeightedTree:
    """``T(n, d)``: path ``1..d+1`` with ``n - d - 1`` leaves on vertex ``floor((d+1)/2) + 1``."""
    if d < 1 or n < d + 1:
        raise BadParameters(f"T(n,d) needs d >= 1 and n >= d + 1, got n={n}, d={d}")
    hub = (d + 1) // 2 + 1
    edges = [(v, v + 1) for v in range(1, d + 1)]
    edges += [(hub, v) for v in range(d + 2, n + 1)]
    return build_tree(n, edges)


def bnd(n: int, d: int) -> WeightedTree:
    """``B_{n,d}``: star ``K_{1,n-d-1}`` (centre 1, first leaf 2) with ``d`` extra leaves on leaf 2."""
    if d < 1 or n < 2 * d + 2:
        raise BadParameters(f"B_(n,d) needs n >= 2d + 2 >= 4, got n={n}, d={d}")
    star_leaves = n - d - 1
    edges = [(1, v) for v in range(2, star_leaves + 2)]
    edges += [(2, v) for v in range(star_leaves + 2, n + 1)]
    return build_tree(n, edges)


def caterpillar(d: int, i: int, ks: Sequence[int]) -> WeightedTree:
    """``T_d(k_i, ..., k_d)``: path ``v_1..v_{d+1}`` (ids ``1..d+1``) with ``k_l`` leaves on ``v_l``.

    Leaves get ids ``d+2, d+3, ...`` in order of ``l``.
    """
    ks = tuple(ks)
    if d <= 1 or not 1 <= i <= d or len(ks) != d - i + 1:
        raise BadParameters(f"caterpillar needs d > 1, 1 <= i <= d and d - i + 1 counts; got d={d}, i={i}, ks={ks}")
    if ks[0] < 1 or any(k < 0 for k in ks):
        raise BadParameters(f"caterpillar needs k_i >= 1 and all k_l >= 0, got {ks}")
    edges = [(v, v + 1) for v in range(1, d + 1)]
    nxt = d + 2
    for l, k in zip(range(i, d + 1), ks):
        for _ in range(k):
            edges.append((l, nxt))
            nxt += 1
    return build_tree(nxt - 1, edges)


def spider(legs: Sequence[int]) -> WeightedTree:
    """Vertex 1 with pendant paths of the given lengths (in edges)."""
    legs = tuple(legs)
    if not legs or any(s < 1 for s in legs):
        raise BadParameters(f"spider needs at least one leg and positive leg lengths, got {legs}")
    edges, nxt = [], 2
    for s in legs:
        prev = 1
        for _ in range(s):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_tree(nxt - 1, edges)


def make_family(spec: FamilySpec) -> WeightedTree:
    kind = FamilyKind(spec.kind)

    def need(name):
        value = getattr(spec, name)
        if value is None:
            raise BadParameters(f"{kind.value} needs --{name}")
        return value

    if kind is FamilyKind.PATH:
        return path_family(need("n"))
    if kind is FamilyKind.STAR:
        return star_family(need("n"))
    if kind is FamilyKind.BROOM:
        return broom(need("n"), need("delta"))
    if kind is FamilyKind.TND:
        return tnd(need("n"), need("d"))
    if kind is FamilyKind.BND:
        return bnd(need("n"), need("d"))
    if kind is FamilyKind.CATERPILLAR:
        return caterpillar(need("d"), spec.i, spec.ks)
    return spider(spec.legs)


def bnd_count(n: int, d: int) -> int:
    """Closed-form subtree count of ``B_{n,d}``."""
    return n - 2 + 2**d + 2 ** (n - d - 2) + 2 ** (n - 2)


def t_n4_count(n: int) -> int:
    """Closed-form subtree count of ``T(n, 4)``."""
    return n + 1 + 2 ** (n - 2) + 2 ** (n - 5)


# -- transformations -------------------------------------------------------


class Relation(enum.Enum):
    STRICT_LT = "STRICT_LT"
    EQ = "EQ"
    STRICT_GT = "STRICT_GT"

    @classmethod
    def between(cls, before: int, after: int) -> "Relation":
        if before < after:
            return cls.STRICT_LT
        if before > after:
            return cls.STRICT_GT
        return cls.EQ


@dataclass(frozen=True)
class TransformReport:
    """Outcome of one transformation; ``relation`` compares ``chi_before`` to ``chi_after``."""

    before: WeightedTree
    after: WeightedTree
    chi_before: int
    chi_after: int
    equality_condition_met: bool
    relation: Relation = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "relation", Relation.between(self.chi_before, self.chi_after))

    def to_json(self) -> dict:
        return {
            "chi_before": str(self.chi_before),
            "chi_after": str(self.chi_after),
            "relation": self.relation.value,
            "equality_condition_met": self.equality_condition_met,
        }


def _report(before: WeightedTree, after: WeightedTree, equality: bool) -> TransformReport:
    return TransformReport(before, after, subtree_count(before), subtree_count(after), equality)


def _split_branch(tree: WeightedTree, u: int, branch_roots) -> tuple[list[int], set[int], list[int]]:
    tree.check_vertex(u)
    roots = [branch_roots] if isinstance(branch_roots, int) else sorted(set(branch_roots))
    if not roots:
        raise NotNeighbor("no branch root given")
    nbrs = set(tree.neighbors(u))
    for w in roots:
        tree.check_vertex(w)
        if w not in nbrs:
            raise NotNeighbor(f"vertex {w} is not a neighbour of {u}")
    branch: set[int] = set()
    for w in roots:
        branch |= component(tree, w, {u})
    rest = [v for v in tree.vertices if v not in branch]
    if len(rest) < 2:
        raise BranchTooLarge(f"the part of the tree left at {u} must keep at least 2 vertices")
    return roots, branch, rest


def _regrow(tree: WeightedTree, rest: Iterable[int], u: int, tails: list[tuple[int, int]], extra: int) -> WeightedTree:
    # tails: edges among the new vertices, numbered 0 = u and 1..extra = fresh
    core, relabel = induced_subtree(tree, rest)
    m = core.n
    name = lambda k: relabel[u] if k == 0 else m + k
    edges = core.edge_pairs() + [(name(a), name(b)) for a, b in tails]
    return build_tree(m + extra, edges)


def phi1(tree: WeightedTree, u: int, branch_root) -> TransformReport:
    """Replace the branch hanging at ``u`` through ``branch_root`` by the same number of leaves at ``u``.

    ``branch_root`` may also be several neighbours of ``u``; their branches are
    treated as one.  The count never decreases.
    """
    roots, branch, rest = _split_branch(tree, u, branch_root)
    r = len(branch)
    after = _regrow(tree, rest, u, [(0, k) for k in range(1, r + 1)], r)
    # equal exactly when the branch already is r leaves on u
    equality = all(w in roots and degree(tree, w) == 1 for w in branch)
    return _report(tree, after, equality)


def phi2(tree: WeightedTree, u: int, branch_root) -> TransformReport:
    """Replace the branch at ``u`` by a pendant path with as many vertices.  The count never increases."""
    roots, branch, rest = _split_branch(tree, u, branch_root)
    r = len(branch)
    after = _regrow(tree, rest, u, [(k, k + 1) for k in range(r)], r)
    equality = len(roots) == 1 and all(degree(tree, w) <= 2 for w in branch)
    return _report(tree, after, equality)


def phi3(d: int, i: int, ks: Sequence[int]) -> TransformReport:
    """Move the ``k_i`` leaves of ``v_i`` in ``T_d(k_i, ..., k_d)`` onto ``v_{i+1}``.

    Only defined for ``i <= (d + 1) / 2``, where the count cannot decrease.
    """
    ks = tuple(ks)
    before = caterpillar(d, i, ks)
    if 2 * i > d + 1:
        raise BadParameters(f"phi3 needs i <= (d + 1) / 2, got i={i}, d={d}")
    after = caterpillar(d, i + 1, (ks[0] + ks[1], *ks[2:]))
    equality = all(k == 0 for k in ks[1:]) and d % 2 == 1 and 2 * i == d + 1
    return _report(before, after, equality)


def phi3_difference(d: int, i: int, ks: Sequence[int]) -> int:
    """Predicted ``chi(after) - chi(before)`` for :func:`phi3`.

    ``(2^k_i - 1) * (2^k_{i+1} * R + 2^k_{i+1} - i)``, where ``R`` counts the
    subtrees through ``v_{i+2}`` of the component of ``T - v_{i+1} v_{i+2}``
    holding ``v_{d+1}``.
    """
    ks = tuple(ks)
    tree = caterpillar(d, i, ks)
    far = component(tree, i + 2, {i + 1})
    sub, relabel = induced_subtree(tree, far)
    r = rooted_count(sub, relabel[i + 2])
    return (2 ** ks[0] - 1) * (2 ** ks[1] * r + 2 ** ks[1] - i)


def _leg(tree: WeightedTree, u: int, end: int) -> list[int]:
    """Vertices from leaf ``end`` up to (excluding) ``u`` along a pendant path."""
    tree.check_vertex(end)
    if end == u or degree(tree, end) != 1:
        raise NotPendantPath(f"vertex {end} is not a leaf")
    leg, prev, cur = [end], 0, end
    while True:
        nxt = [w for w in tree.neighbors(cur) if w != prev]
        if len(nxt) != 1:
            raise NotPendantPath(f"vertex {cur} branches before reaching {u}")
        prev, cur = cur, nxt[0]
        if cur == u:
            return leg
        if degree(tree, cur) != 2:
            raise NotPendantPath(f"path from {end} meets vertex {cur} of degree {degree(tree, cur)} before {u}")
        leg.append(cur)


def _split_legs(tree: WeightedTree, u: int, end1: int, end2: int) -> tuple[int, int, list[int]]:
    tree.check_vertex(u)
    leg1, leg2 = _leg(tree, u, end1), _leg(tree, u, end2)
    if set(leg1) & set(leg2):
        raise NotPendantPath("the two legs must be different")
    s, t = len(leg1), len(leg2)
    if s < 2 or t < 2:
        raise LegTooShort(f"both legs need length >= 2, got {s} and {t}")
    rest = [v for v in tree.vertices if v not in set(leg1) | set(leg2)]
    if len(rest) < 2:
        raise BadParameters(f"the rest of the tree at {u} needs at least 2 vertices")
    return s, t, rest


def phi4(tree: WeightedTree, u: int, leg1_end: int, leg2_end: int) -> TransformReport:
    """Replace two pendant paths of lengths ``s, t >= 2`` at ``u`` by paths of lengths ``s + t - 1`` and 1."""
    s, t, rest = _split_legs(tree, u, leg1_end, leg2_end)
    long_leg = [(k, k + 1) for k in range(s + t - 1)]
    after = _regrow(tree, rest, u, long_leg + [(0, s + t)], s + t)
    return _report(tree, after, False)


def phi4_difference(tree: WeightedTree, u: int, leg1_end: int, leg2_end: int) -> int:
    """Predicted ``chi(before) - chi(after)`` for :func:`phi4`: ``(s-1)(t-1)`` times the
    number of subtrees of the remaining tree that contain ``u`` and some other vertex."""
    s, t, rest = _split_legs(tree, u, leg1_end, leg2_end)
    core, relabel = induced_subtree(tree, rest)
    return (s * t - s - t + 1) * (rooted_count(core, relabel[u]) - 1)


def attach_legs(base: WeightedTree, u: int, legs: Sequence[int]) -> tuple[WeightedTree, list[int]]:
    """Glue pendant paths of the given lengths onto vertex ``u`` of ``base``.

    Returns the new tree and the leaf at the end of each new leg.
    """
    base.check_vertex(u)
    edges, nxt, ends = base.edge_pairs(), base.n + 1, []
    for s in legs:
        if s < 1:
            raise BadParameters(f"leg lengths must be positive, got {s}")
        prev = u
        for _ in range(s):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        ends.append(prev)
    return build_tree(nxt - 1, edges), ends


# -- reduction chains ------------------------------------------------------


def reduce_to_star(tree: WeightedTree) -> list[TransformReport]:
    """Apply :func:`phi1` until the tree is a star.

    Each step picks the smallest ``(u, w)`` with ``u`` and ``w`` adjacent
    non-leaves and moves the branch through ``w``; the count rises strictly.
    """
    steps = []
    while True:
        site = next(
            ((u, w) for u in tree.vertices if degree(tree, u) > 1 for w in sorted(tree.neighbors(u)) if degree(tree, w) > 1),
            None,
        )
        if site is None:
            return steps
        report = phi1(tree, *site)
        steps.append(report)
        tree = report.after


def reduce_to_path(tree: WeightedTree) -> list[TransformReport]:
    """Apply :func:`phi2` until the tree is a path.

    Each step takes the smallest vertex of degree at least 3 and straightens
    the branches through its two smallest neighbours; the count falls strictly.
    """
    steps = []
    while True:
        u = next((v for v in tree.vertices if degree(tree, v) > 2), None)
        if u is None:
            return steps
        report = phi2(tree, u, sorted(tree.neighbors(u))[:2])
        steps.append(report)
        tree = report.after


# -- exhaustive theorem checks ---------------------------------------------


@dataclass(frozen=True)
class Census:
    tree: WeightedTree
    code: str
    chi: int
    max_degree: int
    diameter: int


@functools.lru_cache(maxsize=None)
def census(n: int) -> tuple[Census, ...]:
    """Every unlabelled tree on ``n`` vertices with its subtree count."""
    return tuple(Census(t, canonical_code(t), subtree_count(t), max_degree(t), diameter(t)) for t in all_trees(n))


def _exhaustive_range(n: int, low: int = 3) -> None:
    if n > MAX_GENERATION_N:
        raise TooLarge(f"exhaustive checks are capped at n <= {MAX_GENERATION_N}, got n = {n}")
    if n < low:
        raise BadParameters(f"this check needs n >= {low}, got n = {n}")


def _witness(role: str, c: Census, **extra) -> dict:
    return {"role": role, "chi": str(c.chi), "edges": edge_list(c.tree), **extra}


def _unique_extreme(pool: list[Census], pick, expected_code: str) -> tuple[bool, list[Census]]:
    best = pick(c.chi for c in pool)
    winners = [c for c in pool if c.chi == best]
    return len(winners) == 1 and winners[0].code == expected_code, winners


def verify_theorem_1_1(n: int) -> Verdict:
    """Path uniquely minimises and star uniquely maximises the count over all trees on ``n`` vertices."""
    _exhaustive_range(n)
    pool = list(census(n))
    ok_min, mins = _unique_extreme(pool, min, canonical_code(path_family(n)))
    ok_max, maxs = _unique_extreme(pool, max, canonical_code(star_family(n)))
    witnesses = [_witness("min", c) for c in mins] + [_witness("max", c) for c in maxs]
    return Verdict("theorem11", n, len(pool), ok_min and ok_max, witnesses)


def verify_theorem_3_6(n: int, delta: int | None = None) -> Verdict:
    """Among trees with maximum degree at least ``delta``, the broom uniquely minimises the count.

    Without ``delta`` every admissible value ``3..n-1`` is checked.
    """
    _exhaustive_range(n)
    deltas = range(3, n) if delta is None else [delta]
    if delta is not None and not 3 <= delta <= n - 1:
        raise BadParameters(f"delta must lie in 3..{n - 1}, got {delta}")
    pool = census(n)
    passed, witnesses, examined = True, [], set()
    for dl in deltas:
        eligible = [c for c in pool if c.max_degree >= dl]
        examined.update(c.code for c in eligible)
        ok, winners = _unique_extreme(eligible, min, canonical_code(broom(n, dl)))
        passed &= ok
        witnesses += [_witness("min", c, delta=dl) for c in winners]
    return Verdict("theorem36", n, len(examined), passed, witnesses)


def verify_theorem_3_7(n: int, d: int | None = None) -> Verdict:
    """Among trees with diameter at least ``d``, ``T(n, d)`` uniquely maximises the count.

    Without ``d`` every admissible value ``2..n-1`` is checked.
    """
    _exhaustive_range(n)
    ds = range(2, n) if d is None else [d]
    if d is not None and not 2 <= d <= n - 1:
        raise BadParameters(f"d must lie in 2..{n - 1}, got {d}")
    pool = census(n)
    passed, witnesses, examined = True, [], set()
    for dd in ds:
        eligible = [c for c in pool if c.diameter >= dd]
        examined.update(c.code for c in eligible)
        ok, winners = _unique_extreme(eligible, max, canonical_code(tnd(n, dd)))
        passed &= ok
        witnesses += [_witness("max", c, d=dd) for c in winners]
    return Verdict("theorem37", n, len(examined), passed, witnesses)


COR_3_9_MAX_N = 12


def cor_3_9_chain(n: int) -> list[tuple[str, WeightedTree, int, int]]:
    """``(name, tree, computed count, closed-form count)`` for the five largest-count trees."""
    shapes = [
        ("star", star_family(n), star_count(n)),
        ("T(n,3)", tnd(n, 3), bnd_count(n, 1)),
        ("B(n,2)", bnd(n, 2), bnd_count(n, 2)),
        ("B(n,3)", bnd(n, 3), bnd_count(n, 3)),
        ("T(n,4)", tnd(n, 4), t_n4_count(n)),
    ]
    return [(name, t, subtree_count(t), formula) for name, t, formula in shapes]


def verify_cor_3_9(n: int) -> Verdict:
    """The five trees with the most subtrees, in order, for ``n >= 8``.

    Checks the strict chain star > T(n,3) > B(n,2) > B(n,3) > T(n,4) against
    the closed forms; for ``n <= 10`` also checks every other tree lies
    strictly below T(n,4).
    """
    if n < 8:
        raise BadParameters(f"this chain is only claimed for n >= 8, got n = {n}")
    if n > COR_3_9_MAX_N:
        raise TooLarge(f"n = {n} exceeds the cap of {COR_3_9_MAX_N}")
    chain = cor_3_9_chain(n)
    counts = [c for _, _, c, _ in chain]
    passed = all(c == f for _, _, c, f in chain) and all(a > b for a, b in zip(counts, counts[1:]))
    passed &= canonical_code(tnd(n, 3)) == canonical_code(bnd(n, 1))
    witnesses = [{"role": name, "chi": str(c), "closed_form": str(f), "edges": edge_list(t)} for name, t, c, f in chain]
    examined = len(chain)
    if n <= MAX_GENERATION_N:
        top = {canonical_code(t) for _, t, _, _ in chain}
        pool = census(n)
        examined = len(pool)
        for c in pool:
            if c.code not in top and c.chi >= counts[-1]:
                passed = False
                witnesses.append(_witness("violator", c))
    return Verdict("cor39", n, examined, passed, witnesses)
