"""Immutable weighted trees and the pendant-contraction step.

Vertices are numbered ``1..n`` everywhere in the public API.  Every vertex
carries a weight ``f(v)`` and every edge a weight ``g(e)``; all weights of
one tree live in the same ring (``int`` or :class:`~treegf.ring.Poly2`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import MixedRings, NotATree, NotLive, NotPendant, SameVertex, VertexOutOfRange
from .ring import RingElem, coerce, one, ring_of, zero

Edge = tuple[int, int, RingElem]


@dataclass(frozen=True, eq=False)
class WeightedTree:
    """A validated tree on vertices ``1..n`` with vertex and edge weights.

    ``edges[k] = (u, v, g(e_k))`` and ``vertex_weights[v - 1] = f(v)``.
    Construction raises :class:`NotATree` / :class:`MixedRings` on bad input.
    """

    n: int
    edges: tuple[Edge, ...]
    vertex_weights: tuple[RingElem, ...]
    ring: type = field(init=False, repr=False)
    _adj: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "vertex_weights", tuple(self.vertex_weights))
        object.__setattr__(self, "ring", _common_ring(self.vertex_weights, self.edges))
        object.__setattr__(self, "_adj", _validated_adjacency(self.n, self.edges, len(self.vertex_weights)))

    # -- weights ----------------------------------------------------------

    def f(self, v: int) -> RingElem:
        """Weight of vertex ``v``."""
        self.check_vertex(v)
        return self.vertex_weights[v - 1]

    def g(self, u: int, v: int) -> RingElem:
        """Weight of the edge joining ``u`` and ``v``."""
        self.check_vertex(u)
        for w, k in self._adj[u]:
            if w == v:
                return self.edges[k][2]
        raise NotATree(f"vertices {u} and {v} are not adjacent")

    @property
    def edge_weights(self) -> tuple[RingElem, ...]:
        return tuple(e[2] for e in self.edges)

    def reweighted(self, vertex_weights: Sequence[RingElem], edge_weights: Sequence[RingElem]) -> "WeightedTree":
        """Same shape, new weights.  The shape is not re-validated."""
        if len(vertex_weights) != self.n or len(edge_weights) != self.n - 1:
            raise ValueError("weight sequences do not match the tree size")
        obj = object.__new__(WeightedTree)
        edges = tuple((u, v, w) for (u, v, _), w in zip(self.edges, edge_weights))
        vws = tuple(vertex_weights)
        object.__setattr__(obj, "n", self.n)
        object.__setattr__(obj, "edges", edges)
        object.__setattr__(obj, "vertex_weights", vws)
        object.__setattr__(obj, "ring", _common_ring(vws, edges))
        object.__setattr__(obj, "_adj", self._adj)
        return obj

    # -- structure --------------------------------------------------------

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise VertexOutOfRange(f"vertex {v!r} not in 1..{self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> list[int]:
        self.check_vertex(v)
        return [w for w, _ in self._adj[v]]

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge_index)`` pairs around ``v``."""
        return self._adj[v]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def __repr__(self):
        return f"WeightedTree(n={self.n}, edges={self.edge_pairs()})"


def _common_ring(vertex_weights, edges) -> type:
    rings = {ring_of(w) for w in vertex_weights}
    rings.update(ring_of(e[2]) for e in edges)
    if len(rings) > 1:
        raise MixedRings("vertex and edge weights mix int and Poly2")
    return rings.pop() if rings else int


def _validated_adjacency(n, edges, n_weights):
    if not isinstance(n, int) or n < 1:
        raise NotATree(f"vertex count must be a positive integer, got {n!r}")
    if n_weights != n:
        raise NotATree(f"expected {n} vertex weights, got {n_weights}")
    if len(edges) != n - 1:
        raise NotATree(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    seen = set()
    for k, e in enumerate(edges):
        if len(e) != 3:
            raise NotATree(f"edge {k} is not a (u, v, weight) triple")
        u, v, _ = e
        for w in (u, v):
            if not isinstance(w, int) or isinstance(w, bool) or not 1 <= w <= n:
                raise NotATree(f"edge ({u}, {v}): vertex id out of range 1..{n}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise NotATree(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append((v, k))
        adj[v].append((u, k))
    # n - 1 edges plus connectivity rules out cycles
    reached = bytearray(n + 1)
    reached[1] = 1
    stack, count = [1], 1
    while stack:
        for w, _ in adj[stack.pop()]:
            if not reached[w]:
                reached[w] = 1
                count += 1
                stack.append(w)
    if count != n:
        raise NotATree(f"graph is disconnected ({count} of {n} vertices reachable from 1)")
    return tuple(tuple(a) for a in adj)


def build_tree(
    n: int,
    edges: Iterable[Sequence],
    vertex_weights: Sequence[RingElem] | None = None,
) -> WeightedTree:
    """Build a validated tree.

    ``edges`` holds ``(u, v)`` or ``(u, v, weight)``; a missing edge weight and
    a missing ``vertex_weights`` default to the ring's one.
    """
    edges = [tuple(e) for e in edges]
    given = [e[2] for e in edges if len(e) == 3] + list(vertex_weights or [])
    rings = {ring_of(w) for w in given}
    if len(rings) > 1:
        raise MixedRings("vertex and edge weights mix int and Poly2")
    ring = rings.pop() if rings else int
    unit = one(ring)
    full = []
    for e in edges:
        if len(e) == 2:
            full.append((e[0], e[1], unit))
        elif len(e) == 3:
            full.append(e)
        else:
            raise NotATree(f"bad edge {e!r}")
    if vertex_weights is None:
        vertex_weights = [unit] * n if isinstance(n, int) and n > 0 else []
    return WeightedTree(n, tuple(full), tuple(vertex_weights))


def path_tree(n: int) -> WeightedTree:
    return build_tree(n, [(i, i + 1) for i in range(1, n)])


def star_tree(n: int) -> WeightedTree:
    """``K_{1,n-1}`` with the centre at vertex 1."""
    return build_tree(n, [(1, i) for i in range(2, n + 1)])


# -- graph quantities ------------------------------------------------------


def degree(tree: WeightedTree, v: int) -> int:
    tree.check_vertex(v)
    return len(tree.incident(v))


def max_degree(tree: WeightedTree) -> int:
    return max(len(tree.incident(v)) for v in tree.vertices)


def distances_from(tree: WeightedTree, source: int) -> list[int]:
    """BFS distances, indexed by vertex id (index 0 unused)."""
    tree.check_vertex(source)
    dist = [-1] * (tree.n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in tree.incident(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter(tree: WeightedTree) -> int:
    dist = distances_from(tree, 1)
    far = max(tree.vertices, key=lambda v: dist[v])
    return max(distances_from(tree, far)[1:])


def path_between(tree: WeightedTree, vi: int, vj: int) -> list[int]:
    """The unique ``vi``-``vj`` path, endpoints included."""
    tree.check_vertex(vi)
    tree.check_vertex(vj)
    if vi == vj:
        raise SameVertex("vertices must be distinct")
    parent = [0] * (tree.n + 1)
    parent[vi] = vi
    queue = deque([vi])
    while queue:
        v = queue.popleft()
        if v == vj:
            break
        for w, _ in tree.incident(v):
            if not parent[w]:
                parent[w] = v
                queue.append(w)
    path = [vj]
    while path[-1] != vi:
        path.append(parent[path[-1]])
    return path[::-1]


def component(tree: WeightedTree, start: int, removed: Iterable[int]) -> set[int]:
    """Vertices reachable from ``start`` without entering ``removed``."""
    blocked = set(removed)
    seen = {start}
    stack = [start]
    while stack:
        for w, _ in tree.incident(stack.pop()):
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def induced_subtree(tree: WeightedTree, keep: Iterable[int]) -> tuple[WeightedTree, dict[int, int]]:
    """Restrict ``tree`` to a connected vertex set, relabelled ``1..k`` in id order.

    Returns the new tree and the old-id to new-id map.
    """
    order = sorted(set(keep))
    relabel = {v: i for i, v in enumerate(order, 1)}
    edges = [(relabel[u], relabel[v], w) for u, v, w in tree.edges if u in relabel and v in relabel]
    sub = WeightedTree(len(order), tuple(edges), tuple(tree.f(v) for v in order))
    return sub, relabel


# -- contraction -----------------------------------------------------------


@dataclass
class ContractionState:
    """Working labels while pendants are peeled off a tree.

    ``p[v]`` is the current label of vertex ``v`` (index 0 unused),
    ``N`` the accumulator and ``ops`` the number of ring operations spent.
    """

    live: bytearray
    live_degree: list[int]
    p: list
    N: RingElem
    remaining: int
    ops: int = 0

    @classmethod
    def start(cls, tree: WeightedTree) -> "ContractionState":
        return cls(
            live=bytearray([0]) + bytearray([1]) * tree.n,
            live_degree=[0] + [len(tree.incident(v)) for v in tree.vertices],
            p=[None, *tree.vertex_weights],
            N=zero(tree.ring),
            remaining=tree.n,
        )

    @property
    def live_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(1, len(self.live)) if self.live[v])

    def label(self, v: int) -> RingElem:
        return self.p[v]


def contract_pendant(state: ContractionState, tree: WeightedTree, u: int, accumulate: bool = False) -> ContractionState:
    """Remove live pendant ``u`` with edge ``e = (u, v)``: ``p(v) <- p(v) * (p(u) * g(e) + 1)``.

    With ``accumulate`` the removed label ``p(u)`` is also added to ``N``.
    The state is updated in place and returned.
    """
    tree.check_vertex(u)
    if not state.live[u]:
        raise NotLive(f"vertex {u} has already been contracted")
    if state.remaining < 2 or state.live_degree[u] != 1:
        raise NotPendant(f"vertex {u} has {state.live_degree[u]} live neighbours, need exactly 1")
    live = state.live
    for v, k in tree.incident(u):
        if live[v]:
            break
    pu = state.p[u]
    state.p[v] = state.p[v] * (pu * tree.edges[k][2] + 1)
    state.ops += 3
    if accumulate:
        state.N = state.N + pu
        state.ops += 1
    live[u] = 0
    state.live_degree[u] = 0
    state.live_degree[v] -= 1
    state.remaining -= 1
    return state


def reduce_tree(tree: WeightedTree, u: int) -> tuple[WeightedTree, dict[int, int]]:
    """The contracted tree ``T'``: drop pendant ``u`` and fold its weight into the neighbour.

    Survivors are relabelled ``1..n-1`` in id order; the old-to-new map is returned.
    """
    if tree.n < 2 or degree(tree, u) != 1:
        raise NotPendant(f"vertex {u} is not a pendant vertex")
    (v, k), = tree.incident(u)
    weights = list(tree.vertex_weights)
    weights[v - 1] = tree.f(v) * (tree.f(u) * tree.edges[k][2] + 1)
    folded = tree.reweighted(weights, tree.edge_weights)
    return induced_subtree(folded, [w for w in tree.vertices if w != u])


def coerce_weights(values: Iterable, ring: type) -> list[RingElem]:
    return [coerce(v, ring) for v in values]
