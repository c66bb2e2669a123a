from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flatsimplex import linalg as la
from flatsimplex.cones import HSimplex, cone_contains
from flatsimplex.corpus import gen_lattice_free_simplex, gen_simplex_h, gen_unimodular
from flatsimplex.errors import InputError, PreconditionError
from flatsimplex.oracle import brute_width
from flatsimplex.width import (layer_nonempty, pair_minimum, preprocess_hnf, vertex_pair,
                               width, width_lattice_free)

H = Fraction(1, 2)


def scaled_unit(N):
    return HSimplex([[-1, 0], [0, -1], [1, 1]], [0, 0, N])


FREE = HSimplex([[-2, 0], [0, -2], [2, 2]], [-1, -1, 3])


def spread(S, c):
    vals = [la.dot(c, v) for v in S.vertices()]
    return max(vals) - min(vals)


def test_vertex_pair_unit_simplex():
    S = scaled_unit(1)
    i = S.vertices().index((1, 0))
    j = S.vertices().index((0, 0))
    p = vertex_pair(S, i, j)
    assert [list(r) for r in p.B] == [[0], [-1]]
    assert p.a_v == (1, 1) and p.a_u == (-1, 0)
    assert p.in_m(list(p.a_v)) and p.in_m([-x for x in p.a_u])
    with pytest.raises(InputError):
        vertex_pair(S, 0, 0)


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_vertex_pair_orientation(n, seed):
    S = gen_simplex_h(n, 4, seed)
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                p = vertex_pair(S, i, j)
                w = p.direction
                assert la.dot(p.a_v, w) > 0 and -la.dot(p.a_u, w) > 0
                assert p.in_m(list(p.a_v)) and p.in_m([-x for x in p.a_u])


def test_layer_examples():
    S = scaled_unit(1)
    p = vertex_pair(S, 0, 2)   # v = (1, 0), u = (0, 0)
    c = layer_nonempty(p, 1)
    assert c is not None and la.dot(c, p.direction) == 1 and p.in_m(c)
    p2 = vertex_pair(scaled_unit(2), 0, 2)   # v - u = (2, 0)
    assert layer_nonempty(p2, 1) is None
    assert pair_minimum(p, 5)[0] == 1


@given(st.integers(0, 10 ** 6), st.data())
def test_layers_match_direction_search(seed, data):
    S = gen_simplex_h(2, 4, seed)
    i = data.draw(st.integers(0, 2))
    j = data.draw(st.sampled_from([x for x in range(3) if x != i]))
    p = vertex_pair(S, i, j)
    w = p.direction
    found = {}
    for c1 in range(-10, 11):
        for c2 in range(-10, 11):
            if p.in_m([c1, c2]):
                found.setdefault(la.dot([c1, c2], w), []).append((c1, c2))
    # a witness in the ball forces a verdict; any verdict must be a real witness
    top = sorted(found)[3] if len(found) > 3 else max(found)
    for k in [Fraction(m, 2) for m in range(1, 2 * int(top) + 2)]:
        c = layer_nonempty(p, k)
        if k in found:
            assert c is not None
        if c is not None:
            assert la.dot(c, w) == k and p.in_m(c)


def test_pair_minimum_bounded_by_s():
    S = gen_simplex_h(2, 5, 7)
    for i in range(3):
        for j in range(3):
            if i != j:
                p = vertex_pair(S, i, j)
                k, c = pair_minimum(p)
                assert k <= p.s() and la.dot(c, p.direction) == k


def test_width_examples():
    assert width(scaled_unit(1)).width == 1
    for N in (2, 3):
        r = width(scaled_unit(N))
        assert r.width == N == spread(scaled_unit(N), r.direction)
    r = width(FREE)
    assert r.width == brute_width(FREE.A, FREE.b, 5)[0] == H


def test_preprocess_hnf():
    S = HSimplex([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
    Sp, U = preprocess_hnf(S)
    assert U == [[-1, 0], [0, -1]] or abs(la.det(U)) == 1
    S2, U2 = preprocess_hnf(Sp)
    assert U2 == la.identity(2)


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_preprocess_keeps_width(n, seed):
    S = gen_simplex_h(n, 3, seed)
    Sp, U = preprocess_hnf(S)
    delta = la.minor_stats([list(r) for r in S.A], n).max_abs
    for i in range(n):
        assert 0 <= Sp.A[i][i] <= delta
    assert width(S).width == width(Sp).width


@given(st.integers(0, 10 ** 6))
def test_width_matches_brute_force_plane(seed):
    S = gen_simplex_h(2, 5, seed)
    r = width(S)
    assert r.width == brute_width(S.A, S.b, 10)[0]
    assert spread(S, r.direction) == r.width


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_width_unimodular_invariance(n, seed):
    S = gen_simplex_h(n, 3, seed)
    U = gen_unimodular(n, seed + 1)
    T = HSimplex(la.matmul([list(r) for r in S.A], U), S.b)
    assert width(S).width == width(T).width


def test_lattice_free_examples():
    r = width_lattice_free(FREE)
    assert r.width == width(FREE).width
    assert r.width <= la.minor_stats([list(x) for x in FREE.A], 2).min_abs_nonzero
    # contains integer points and is wider than delta(A) = 1
    big = scaled_unit(5)
    with pytest.raises(PreconditionError):
        width_lattice_free(big)


@given(st.integers(2, 3), st.integers(0, 10 ** 5))
def test_lattice_free_agrees(n, seed):
    S = gen_lattice_free_simplex(n, seed)
    r = width_lattice_free(S)
    assert r.width == width(S).width
    assert r.width <= la.minor_stats([list(x) for x in S.A], n).min_abs_nonzero
