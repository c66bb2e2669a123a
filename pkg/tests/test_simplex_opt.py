import pytest
from hypothesis import given, strategies as st

from flatsimplex import linalg as la
from flatsimplex.cones import VSimplex
from flatsimplex.corpus import gen_punctured
from flatsimplex.oracle import brute_punctured, conv_halfspaces
from flatsimplex.simplex_opt import (PuncturedSimplexInstance, edge_cone, lp_vertex,
                                     opposite_facet, optimize_punctured)
from flatsimplex.errors import InputError

TRI3 = VSimplex.from_points([[0, 0], [3, 0], [0, 3]])
UNIT = VSimplex.from_points([[0, 0], [1, 0], [0, 1]])


def test_lp_vertex():
    assert TRI3.points()[lp_vertex(TRI3, [1, 0])] == (3, 0)
    assert lp_vertex(TRI3, [0, 0]) == 0


def test_opposite_facet():
    assert opposite_facet(UNIT, 0) == ([1, 1], 1)
    assert opposite_facet(TRI3, 0) == ([1, 1], 3)


@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_opposite_facet_is_tight_elsewhere(n, seed):
    S = gen_punctured(n, 3, seed).S
    for i, p in enumerate(S.points()):
        a, a0 = opposite_facet(S, i)
        assert la.content(a) == 1
        assert la.dot(a, p) < a0
        assert all(la.dot(a, q) == a0 for j, q in enumerate(S.points()) if j != i)


def test_optimize_examples():
    r = optimize_punctured(PuncturedSimplexInstance(TRI3, [1, 0]))
    assert r.value == 2
    r = optimize_punctured(PuncturedSimplexInstance(TRI3, [1, 1]))
    assert r.value == 3 and r.point in [(2, 1), (1, 2)]
    assert optimize_punctured(PuncturedSimplexInstance(UNIT, [1, 0])) is None
    with pytest.raises(InputError):
        PuncturedSimplexInstance(UNIT, [1, 0, 0])


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_optimize_matches_brute_force(n, seed):
    inst = gen_punctured(n, 4 if n == 2 else 3, seed)
    r = optimize_punctured(inst)
    best = brute_punctured(inst.S.points(), inst.c)
    if best is None:
        assert r is None
        return
    assert r.value == best[1]
    assert r.point not in inst.S.points()
    assert conv_halfspaces(inst.S.points())(r.point)
    assert la.dot(inst.c, r.point) == r.value


@given(st.integers(2, 4), st.integers(0, 10 ** 6))
def test_edge_cone_determinant_bound(n, seed):
    S = gen_punctured(n, 3, seed).S
    delta = la.minor_stats([list(r) for r in S.verts], n).max_abs
    for i in range(n + 1):
        assert edge_cone(S, i).alpha <= (n + 1) * delta
