import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_tree, trees
from treegf.errors import MixedRings, NotATree, NotLive, NotPendant, SameVertex, VertexOutOfRange
from treegf.ring import X, Y, Poly2
from treegf.tree import (
    ContractionState,
    build_tree,
    contract_pendant,
    degree,
    diameter,
    max_degree,
    path_between,
    path_tree,
    reduce_tree,
    star_tree,
)


def test_single_vertex():
    t = build_tree(1, [], [1])
    assert t.n == 1 and t.edges == () and t.f(1) == 1


def test_path_construction():
    t = build_tree(3, [(1, 2, 1), (2, 3, 1)])
    assert t.neighbors(2) == [1, 3]
    assert degree(t, 1) == 1 and degree(t, 2) == 2


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(1, 2), (1, 2)]),  # duplicate
        (3, [(1, 2), (2, 1)]),  # duplicate, reversed
        (3, [(1, 1), (2, 3)]),  # self-loop
        (3, [(1, 2), (2, 4)]),  # out of range
        (3, [(1, 2)]),  # too few edges
        (4, [(1, 2), (2, 3), (3, 1)]),  # cycle + isolated vertex
        (0, []),
    ],
)
def test_not_a_tree(n, edges):
    with pytest.raises(NotATree):
        build_tree(n, edges)


def test_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        build_tree(2, [(1, 2, X)], [1, 1])
    with pytest.raises(MixedRings):
        build_tree(2, [(1, 2, 3)], [Y, Y])


def test_defaults_follow_given_ring():
    t = build_tree(2, [(1, 2, X)])
    assert t.ring is Poly2 and t.f(1) == Poly2.const(1)


def test_tree_is_immutable():
    t = path_tree(3)
    with pytest.raises(AttributeError):
        t.n = 4


@settings(max_examples=60)
@given(trees(min_n=2, max_n=12), st.data())
def test_exactly_spanning_trees_accepted(tree, data):
    edges = tree.edge_pairs()
    # dropping an edge disconnects
    k = data.draw(st.integers(0, len(edges) - 1))
    with pytest.raises(NotATree):
        build_tree(tree.n, edges[:k] + edges[k + 1 :])
    # adding a non-edge closes a cycle
    present = {frozenset(e) for e in edges}
    missing = [(u, v) for u in tree.vertices for v in tree.vertices if u < v and frozenset((u, v)) not in present]
    if missing:
        extra = data.draw(st.sampled_from(missing))
        with pytest.raises(NotATree):
            build_tree(tree.n, edges + [extra])
    # the edge set itself, in any order, is fine
    shuffled = data.draw(st.permutations(edges))
    assert build_tree(tree.n, shuffled).n == tree.n


def test_graph_quantities():
    assert diameter(path_tree(5)) == 4
    assert max_degree(star_tree(5)) == 4
    assert path_between(path_tree(4), 1, 4) == [1, 2, 3, 4]
    assert path_between(path_tree(4), 3, 1) == [3, 2, 1]
    assert diameter(build_tree(1, [])) == 0
    with pytest.raises(SameVertex):
        path_between(path_tree(4), 2, 2)
    with pytest.raises(VertexOutOfRange):
        degree(path_tree(4), 5)


def test_contract_p2_integers():
    rng = random.Random(4)
    for _ in range(20):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        t = build_tree(2, [(1, 2, c)], [a, b])
        state = contract_pendant(ContractionState.start(t), t, 1, accumulate=True)
        assert state.label(2) == b * (a * c + 1)
        assert state.N == a
        assert state.label(2) + state.N == a + b + a * b * c
        assert state.live_vertices == {2}


def test_contract_p2_unit_and_edge_variable():
    t = path_tree(2)
    state = contract_pendant(ContractionState.start(t), t, 1, accumulate=True)
    assert (state.label(2), state.N, state.label(2) + state.N) == (2, 1, 3)

    t = build_tree(2, [(1, 2, X)])
    state = contract_pendant(ContractionState.start(t), t, 1, accumulate=True)
    assert state.label(2) == 1 + X
    assert state.label(2) + state.N == 2 + X


def test_contract_errors():
    t = path_tree(3)
    state = ContractionState.start(t)
    with pytest.raises(NotPendant):
        contract_pendant(state, t, 2)
    contract_pendant(state, t, 1)
    with pytest.raises(NotLive):
        contract_pendant(state, t, 1)
    contract_pendant(state, t, 2)
    with pytest.raises(NotPendant):
        contract_pendant(state, t, 3)  # last vertex standing


def test_state_starts_from_vertex_weights():
    t = build_tree(3, [(1, 2, 5), (2, 3, 7)], [2, 3, 4])
    state = ContractionState.start(t)
    assert [state.label(v) for v in t.vertices] == [2, 3, 4]
    assert state.N == 0 and state.live_vertices == {1, 2, 3}


def test_live_vertices_stay_connected():
    rng = random.Random(11)
    for n in range(2, 12):
        t = random_tree(rng, n)
        state = ContractionState.start(t)
        while state.remaining > 1:
            leaves = [v for v in state.live_vertices if state.live_degree[v] == 1]
            contract_pendant(state, t, rng.choice(leaves))
            live = state.live_vertices
            start = min(live)
            seen, stack = {start}, [start]
            while stack:
                for w in t.neighbors(stack.pop()):
                    if w in live and w not in seen:
                        seen.add(w)
                        stack.append(w)
            assert seen == live


def test_reduce_tree_folds_weight_into_neighbour():
    t = build_tree(3, [(1, 2, 5), (2, 3, 7)], [2, 3, 4])
    smaller, relabel = reduce_tree(t, 3)
    assert relabel == {1: 1, 2: 2}
    assert smaller.f(2) == 3 * (4 * 7 + 1)
    assert smaller.g(1, 2) == 5
    with pytest.raises(NotPendant):
        reduce_tree(t, 2)
