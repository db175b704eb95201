"""Ground truth for small trees.

Nothing here uses pendant contraction: subtrees are enumerated explicitly as
connected vertex sets, isomorphism classes are told apart by AHU codes, and
unlabelled trees are generated exhaustively.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import TooLarge
from .ring import RingElem, one, zero
from .tree import WeightedTree, build_tree

MAX_ENUMERATION_N = 16
MAX_GENERATION_N = 10


@dataclass(frozen=True)
class SubtreeSet:
    """Every subtree of ``tree`` as a frozenset of vertex ids."""

    tree: WeightedTree
    vertex_sets: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.vertex_sets)

    def __iter__(self):
        return iter(self.vertex_sets)

    def containing(self, *vertices: int) -> list[frozenset[int]]:
        need = set(vertices)
        return [s for s in self.vertex_sets if need <= s]


def _connected_sets(tree: WeightedTree) -> Iterator[frozenset[int]]:
    # ESU-style growth: each set is produced once, under its smallest vertex
    nbrs = [()] + [tuple(tree.neighbors(v)) for v in tree.vertices]

    def extend(sub: frozenset, border: frozenset, ext: list, anchor: int):
        yield sub
        ext = list(ext)
        while ext:
            w = ext.pop()
            fresh = [z for z in nbrs[w] if z > anchor and z not in sub and z not in border]
            yield from extend(sub | {w}, border | set(nbrs[w]), ext + fresh, anchor)

    for v in tree.vertices:
        yield from extend(frozenset([v]), frozenset(nbrs[v]) | {v}, [z for z in nbrs[v] if z > v], v)


def enumerate_subtrees(tree: WeightedTree) -> SubtreeSet:
    if tree.n > MAX_ENUMERATION_N:
        raise TooLarge(f"brute-force enumeration is capped at n <= {MAX_ENUMERATION_N}, got n = {tree.n}")
    sets = sorted(_connected_sets(tree), key=lambda s: (len(s), sorted(s)))
    return SubtreeSet(tree, tuple(sets))


def subtree_weight(tree: WeightedTree, vertices: frozenset[int]) -> RingElem:
    w = one(tree.ring)
    for v in sorted(vertices):
        w = w * tree.f(v)
    for u, v, g in tree.edges:
        if u in vertices and v in vertices:
            w = w * g
    return w


def brute_gf(tree: WeightedTree, contains: Iterable[int] = (), subtrees: SubtreeSet | None = None) -> RingElem:
    """Sum of subtree weights, optionally only over subtrees containing ``contains``."""
    need = set(contains)
    for v in need:
        tree.check_vertex(v)
    if subtrees is None:
        subtrees = enumerate_subtrees(tree)
    total = zero(tree.ring)
    for s in subtrees:
        if need <= s:
            total = total + subtree_weight(tree, s)
    return total


# -- canonical forms -------------------------------------------------------


def centers(tree: WeightedTree) -> list[int]:
    """The one or two central vertices, found by peeling leaves layer by layer."""
    if tree.n <= 2:
        return list(tree.vertices)
    deg = [0] + [len(tree.incident(v)) for v in tree.vertices]
    layer = [v for v in tree.vertices if deg[v] == 1]
    left = tree.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in tree.neighbors(v):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(tree: WeightedTree, root: int) -> str:
    """AHU code of ``tree`` hung from ``root``: ``(`` + sorted child codes + ``)``."""
    parent = {root: 0}
    order = [root]
    for v in order:
        for w in tree.neighbors(v):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    kids: dict[int, list[str]] = {v: [] for v in order}
    code = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(kids[v])) + ")"
        if parent[v]:
            kids[parent[v]].append(code[v])
    return code[root]


def canonical_code(tree: WeightedTree) -> str:
    """Isomorphism invariant: AHU code from the centre, smaller one if bicentral."""
    return min(rooted_code(tree, c) for c in centers(tree))


# -- tree generation -------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``1..n`` with Prufer sequence ``seq``."""
    if n < 2:
        return []
    if len(seq) != n - 2:
        raise ValueError(f"a Prufer sequence for n = {n} has length {n - 2}")
    deg = [1] * (n + 1)
    for s in seq:
        deg[s] += 1
    edges = []
    for s in seq:
        leaf = next(v for v in range(1, n + 1) if deg[v] == 1)
        edges.append((leaf, s))
        deg[leaf] -= 1
        deg[s] -= 1
    u, v = (w for w in range(1, n + 1) if deg[w] == 1)
    edges.append((u, v))
    return edges


def labeled_trees(n: int) -> Iterator[WeightedTree]:
    """All ``n ** (n - 2)`` labelled trees on ``1..n`` (unit weights)."""
    if n == 1:
        yield build_tree(1, [])
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield build_tree(n, prufer_decode(seq, n))


def prufer_classes(n: int) -> dict[str, WeightedTree]:
    """One labelled representative per isomorphism class, by full Prufer enumeration."""
    out: dict[str, WeightedTree] = {}
    for t in labeled_trees(n):
        out.setdefault(canonical_code(t), t)
    return out


def _add_leaf(tree: WeightedTree, v: int) -> WeightedTree:
    return build_tree(tree.n + 1, [*tree.edge_pairs(), (v, tree.n + 1)])


@functools.lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[str, WeightedTree], ...]:
    if n == 1:
        t = build_tree(1, [])
        return ((canonical_code(t), t),)
    found: dict[str, WeightedTree] = {}
    for _, t in _classes(n - 1):
        seen_roots = set()
        for v in t.vertices:
            # vertices with equal rooted codes give isomorphic extensions
            rc = rooted_code(t, v)
            if rc in seen_roots:
                continue
            seen_roots.add(rc)
            bigger = _add_leaf(t, v)
            found.setdefault(canonical_code(bigger), bigger)
    return tuple(sorted(found.items()))


def all_trees(n: int) -> list[WeightedTree]:
    """One unit-weighted representative per unlabelled tree on ``n`` vertices.

    Sorted by canonical code.  Every tree on ``n`` vertices arises by adding
    a leaf to one on ``n - 1``, so growing and deduplicating is exhaustive.
    """
    if not 1 <= n <= MAX_GENERATION_N:
        raise TooLarge(f"tree generation is capped at 1 <= n <= {MAX_GENERATION_N}, got n = {n}")
    return [t for _, t in _classes(n)]


def isomorphic(a: WeightedTree, b: WeightedTree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def labeled_tree_count(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1

