import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import trees
from treegf.errors import SameVertex, VertexOutOfRange
from treegf.genfunc import (
    WeightMode,
    apply_mode,
    closed_path_gf,
    closed_path_rooted_gf,
    closed_star_gf,
    contract_all,
    pair_count,
    pair_gf,
    pair_profile,
    path_count,
    rooted_count,
    rooted_gf,
    rooted_profile,
    size_profile,
    star_count,
    subtree_count,
    total_gf,
)
from treegf.oracle import all_trees, brute_gf
from treegf.ring import X, Y, Poly2
from treegf.tree import build_tree, distances_from, path_tree, reduce_tree, star_tree

A, C, B = 1, 2, 3


def poly_x(*coeffs_high_to_low):
    deg = len(coeffs_high_to_low) - 1
    return sum((c * X ** (deg - k) for k, c in enumerate(coeffs_high_to_low)), Poly2())


def poly_y(*coeffs_high_to_low):
    deg = len(coeffs_high_to_low) - 1
    return sum((c * Y ** (deg - k) for k, c in enumerate(coeffs_high_to_low)), Poly2())


# -- printed examples on the double star -----------------------------------


def test_double_star_edge_polynomials(double_star):
    t = apply_mode(double_star, WeightMode.EDGE_VAR)
    assert total_gf(t) == X * (X**2 + 2 * X + 1) ** 2 + 2 * (X**2 + 2 * X + 1) + 4
    assert total_gf(t) == poly_x(1, 4, 6, 6, 5, 6)
    assert rooted_gf(t, A) == poly_x(1, 4, 6, 5, 3, 1)
    assert pair_gf(t, B, C) == poly_x(1, 3, 3, 1, 0, 0)


def test_double_star_vertex_polynomials(double_star):
    t = apply_mode(double_star, WeightMode.VERTEX_VAR)
    q = Y**3 + 2 * Y**2 + Y
    assert total_gf(t) == q**2 + 2 * q + 4 * Y == poly_y(1, 4, 6, 6, 5, 6, 0)
    assert rooted_gf(t, A) == poly_y(1, 4, 6, 5, 3, 1, 0)
    assert pair_gf(t, B, C) == Y * (Y**2 + Y) * q == poly_y(1, 3, 3, 1, 0, 0, 0)


def test_double_star_counts(double_star):
    assert subtree_count(double_star) == 28
    assert rooted_count(double_star, A) == 20
    assert pair_count(double_star, B, C) == 8


def test_double_star_profiles(double_star):
    assert size_profile(double_star).a == (6, 5, 6, 6, 4, 1)
    assert rooted_profile(double_star, A).a == (1, 3, 5, 6, 4, 1)
    assert pair_profile(double_star, B, C).a == (0, 0, 1, 3, 3, 1)
    assert size_profile(double_star).b == (0, 6, 5, 6, 6, 4, 1)


# -- small cases ------------------------------------------------------------


def test_single_vertex():
    t = build_tree(1, [], [Y])
    assert total_gf(t) == Y
    assert rooted_gf(t, 1) == Y
    assert subtree_count(t) == 1


def test_paths_and_stars():
    assert subtree_count(path_tree(5)) == 15
    for r in range(0, 8):
        assert rooted_count(star_tree(r + 1), 1) == 2**r
    for n in range(1, 9):
        bi = apply_mode(path_tree(n), WeightMode.BIVARIATE)
        assert rooted_gf(bi, 1) == sum((X**j * Y ** (j + 1) for j in range(n)), Poly2())
        assert total_gf(bi) == sum(((n - j) * X**j * Y ** (j + 1) for j in range(n)), Poly2())
    for n in range(2, 8):
        assert pair_count(path_tree(n), 1, n) == 1


def test_p3_pair_matches_enumeration():
    t = path_tree(3)
    assert brute_gf(t, (1, 2)) == 2  # {v1 v2}, {v1 v2 v3}
    assert pair_count(t, 1, 2) == 2


def test_star_bivariate_closed_form():
    for n in range(1, 9):
        bi = apply_mode(star_tree(n), WeightMode.BIVARIATE)
        expected = n * Y + sum((math.comb(n - 1, i) * X**i * Y ** (i + 1) for i in range(1, n)), Poly2())
        assert total_gf(bi) == expected


def test_p4_profile():
    assert size_profile(path_tree(4)).a == (4, 3, 2, 1)


def test_profile_out_of_range_is_zero(double_star):
    prof = size_profile(double_star)
    assert prof.by_edges(-1) == 0 and prof.by_edges(6) == 0 and prof.by_edges(99) == 0
    assert prof.by_vertices(0) == 0 and prof.by_vertices(1) == 6


def test_argument_errors(double_star):
    with pytest.raises(SameVertex):
        pair_gf(double_star, 2, 2)
    with pytest.raises(VertexOutOfRange):
        rooted_gf(double_star, 7)
    with pytest.raises(VertexOutOfRange):
        pair_gf(double_star, 0, 1)


# -- invariants over every small tree --------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_profile_identities(n):
    for t in all_trees(n):
        prof = size_profile(t)
        chi = subtree_count(t)
        assert all(prof.by_edges(k) == prof.by_vertices(k + 1) for k in range(-1, n + 1))
        assert prof.total == chi
        assert prof.a[0] == n and prof.a[n - 1] == 1
        for v in t.vertices:
            assert rooted_profile(t, v).a[0] == 1
        for vi, vj in itertools.combinations(t.vertices, 2):
            dist = distances_from(t, vi)[vj]
            prof = pair_profile(t, vi, vj)
            assert all(prof.a[k] == 0 for k in range(dist))
            assert prof.a[dist] == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_specialisation_coherence(n):
    for t in all_trees(n):
        both = total_gf(apply_mode(t, WeightMode.BIVARIATE))
        assert both.subs(x=1, y=1) == subtree_count(t)
        assert both.subs(y=1) == total_gf(apply_mode(t, WeightMode.EDGE_VAR))
        assert both.subs(x=1) == total_gf(apply_mode(t, WeightMode.VERTEX_VAR))
        for v in t.vertices:
            rb = rooted_gf(apply_mode(t, WeightMode.BIVARIATE), v)
            assert rb.subs(y=1) == rooted_gf(apply_mode(t, WeightMode.EDGE_VAR), v)
            assert rb.evaluate(1, 1) == rooted_count(t, v)


@pytest.mark.parametrize("n", range(2, 9))
def test_monotone_containment(n):
    for t in all_trees(n):
        chi = subtree_count(t)
        for vi, vj in itertools.permutations(t.vertices, 2):
            assert pair_count(t, vi, vj) < rooted_count(t, vi) < chi
            assert pair_count(t, vi, vj) == pair_count(t, vj, vi)


@settings(max_examples=80, deadline=None)
@given(trees(max_n=9), st.randoms(use_true_random=False))
def test_order_confluence(tree, rnd):
    rng = random.Random(rnd.random())
    weighted = tree.reweighted([rng.randint(-3, 9) for _ in tree.vertices], [rng.randint(-3, 9) for _ in range(tree.n - 1)])
    bi = apply_mode(tree, WeightMode.BIVARIATE)
    for t in (weighted, bi):
        assert total_gf(t, rng=rng) == total_gf(t)
        v = rng.randint(1, tree.n)
        assert rooted_gf(t, v, rng=rng) == rooted_gf(t, v)
        if tree.n > 1:
            vi, vj = rng.sample(range(1, tree.n + 1), 2)
            assert pair_gf(t, vi, vj, rng=rng) == pair_gf(t, vi, vj)


@settings(max_examples=80, deadline=None)
@given(trees(min_n=2, max_n=9), st.data())
def test_single_contraction_invariance(tree, data):
    """Contracting one pendant and recursing gives the same answers."""
    t = apply_mode(tree, WeightMode.BIVARIATE)
    leaves = [v for v in t.vertices if len(t.neighbors(v)) == 1]
    u = data.draw(st.sampled_from(leaves))
    smaller, relabel = reduce_tree(t, u)
    assert total_gf(t) == total_gf(smaller) + t.f(u)
    others = [v for v in t.vertices if v != u]
    vi = data.draw(st.sampled_from(others))
    assert rooted_gf(t, vi) == rooted_gf(smaller, relabel[vi])
    if len(others) >= 2:
        vi, vj = data.draw(st.lists(st.sampled_from(others), min_size=2, max_size=2, unique=True))
        assert pair_gf(t, vi, vj) == pair_gf(smaller, relabel[vi], relabel[vj])


# -- closed forms -----------------------------------------------------------


def test_closed_path_small():
    y1, y2, x1 = 3, 5, 7
    assert closed_path_gf([y1, y2], [x1]) == y1 + y2 + x1 * y1 * y2
    assert closed_path_gf([Y, Y], [X]) == 2 * Y + X * Y**2
    assert closed_path_gf([1] * 5, [1] * 4) == 15
    assert closed_path_rooted_gf([1] * 5, [1] * 4) == 5


def test_closed_star_small():
    assert closed_star_gf([1, 1], 1, [1, 1]) == 6 == closed_path_gf([1, 1, 1], [1, 1])
    assert closed_star_gf([1] * 4, 1, [1] * 4) == 20
    assert closed_star_gf([], 7, []) == 7


def test_closed_star_matches_literal_subset_sum():
    rng = random.Random(2)
    for r in range(0, 7):
        ys = [rng.randint(0, 9) for _ in range(r)]
        xs = [rng.randint(0, 9) for _ in range(r)]
        yc = rng.randint(0, 9)
        literal = sum(ys) + yc
        for size in range(1, r + 1):
            for subset in itertools.combinations(range(r), size):
                literal += math.prod(xs[k] * ys[k] for k in subset) * yc
        assert closed_star_gf(ys, yc, xs) == literal


def test_closed_forms_length_mismatch():
    with pytest.raises(ValueError):
        closed_path_gf([1, 1], [1, 1])
    with pytest.raises(ValueError):
        closed_star_gf([1, 1], 1, [1])


def _weighted_path(ys, xs):
    return build_tree(len(ys), [(i, i + 1, xs[i - 1]) for i in range(1, len(ys))], ys)


def test_closed_path_vs_contraction_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        ys = [rng.randint(0, 9) for _ in range(n)]
        xs = [rng.randint(0, 9) for _ in range(n - 1)]
        t = _weighted_path(ys, xs)
        assert closed_path_gf(ys, xs) == total_gf(t)
        assert closed_path_rooted_gf(ys, xs) == rooted_gf(t, 1)


def test_closed_star_vs_contraction_random():
    rng = random.Random(8)
    for _ in range(200):
        r = rng.randint(0, 11)
        ys = [rng.randint(0, 9) for _ in range(r)]
        xs = [rng.randint(0, 9) for _ in range(r)]
        yc = rng.randint(0, 9)
        t = build_tree(r + 1, [(1, k + 2, xs[k]) for k in range(r)], [yc, *ys])
        assert closed_star_gf(ys, yc, xs) == total_gf(t)


def test_closed_path_n7_random_weights():
    rng = random.Random(0)
    ys = [rng.randint(0, 9) for _ in range(7)]
    xs = [rng.randint(0, 9) for _ in range(6)]
    assert closed_path_gf(ys, xs) == total_gf(_weighted_path(ys, xs))


def test_count_formulas():
    assert path_count(5) == 15 and star_count(5) == 20
    assert path_count(1) == 1 == star_count(1)
    assert path_count(3) == 6 == star_count(3)
    with pytest.raises(ValueError):
        path_count(0)


# -- cost ------------------------------------------------------------------


@pytest.mark.parametrize("shape", [path_tree, star_tree])
@pytest.mark.parametrize("n", [10, 1000, 20000])
def test_operation_count_linear(shape, n):
    state = contract_all(shape(n), accumulate=True)
    assert state.ops == 4 * (n - 1)
    assert state.remaining == 1


def test_default_order_is_smallest_first():
    # on a path the smallest pendant is always the current left end
    t = build_tree(4, [(1, 2, 10), (2, 3, 100), (3, 4, 1000)], [1, 2, 3, 4])
    state = contract_all(t, accumulate=True)
    assert state.live_vertices == {4}
    assert state.N == 1 + 2 * (1 * 10 + 1) + 3 * (2 * (10 + 1) * 100 + 1)
