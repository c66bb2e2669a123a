from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flatsimplex import linalg as la
from flatsimplex.cones import (Cone, HSimplex, ShiftedCone, VSimplex, cone_contains,
                               normal_cone, rows_in_dual_cone, vertices)
from flatsimplex.corpus import gen_simplex_h
from flatsimplex.errors import InputError

from conftest import nonsingular

UNIT = HSimplex([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
H = Fraction(1, 2)
FREE = HSimplex([[-2, 0], [0, -2], [2, 2]], [-1, -1, 3])


def test_cone_contains_examples():
    I = Cone(la.identity(2))
    assert cone_contains(I, [1, 2])
    assert not cone_contains(I, [1, -1])
    C = Cone([[1, 1], [0, 2]])
    assert cone_contains(C, [2, 1])
    assert la.solve(C.gen, [2, 1]) == [Fraction(3, 2), H]


def test_cone_rejects_singular():
    with pytest.raises(InputError):
        Cone([[1, 2], [2, 4]])
    with pytest.raises(InputError):
        ShiftedCone([0], Cone(la.identity(2)))


@given(nonsingular(n_max=3), st.data())
def test_nonnegative_combinations_are_contained(A, data):
    n = len(A)
    t = data.draw(st.lists(st.fractions(0, 5, max_denominator=7), min_size=n, max_size=n))
    assert cone_contains(Cone(A), la.matvec(A, t))
    if any(t):
        j = data.draw(st.integers(0, n - 1))
        t[j] = -1 - t[j]
        assert not cone_contains(Cone(A), la.matvec(A, t))


def test_vertices_examples():
    assert UNIT.vertices() == [(1, 0), (0, 1), (0, 0)]
    assert sorted(vertices(FREE)) == [(H, H), (H, 1), (1, H)]
    for N in (2, 3, 7):
        S = HSimplex([[-1, 0], [0, -1], [1, 1]], [0, 0, N])
        assert S.vertices() == [(N * x, N * y) for x, y in UNIT.vertices()]


def test_hsimplex_rejects_non_simplices():
    with pytest.raises(InputError, match="singular"):
        HSimplex([[1, 0], [2, 0], [0, 1]], [1, 1, 1])
    with pytest.raises(InputError):
        HSimplex([[-1, 0], [0, -1], [1, 1]], [0, 0, 0])   # a single point
    with pytest.raises(InputError):
        HSimplex([[-1, 0], [0, -1], [-1, -1]], [0, 0, -1])   # unbounded


@given(st.integers(2, 3), st.integers(0, 10 ** 6))
def test_vertices_respect_cramer_bound(n, seed):
    S = gen_simplex_h(n, 4, seed)
    Ab = [list(a) + [b] for a, b in zip(S.A, S.b)]
    big = la.minor_stats(Ab, n).max_abs
    small = la.minor_stats([list(r) for r in S.A], n).min_abs_nonzero
    for v in S.vertices():
        assert S.contains(v)
        assert max(abs(x) for x in v) <= Fraction(big, small)
        assert len(S.tight_rows(v)) == n


def test_rows_in_dual_cone_examples():
    I = Cone(la.identity(2))
    assert not rows_in_dual_cone([[-1, 0], [0, -1]], I)
    assert rows_in_dual_cone(la.identity(2), I)
    assert rows_in_dual_cone([[1, 1]], Cone([[1, 0], [1, 1]]))


def test_normal_cone_examples():
    N = normal_cone(UNIT, (0, 0))
    assert sorted(N.generators) == [[-1, 0], [0, -1]]
    N = normal_cone(UNIT, (1, 0))
    assert sorted(N.generators) == [[0, -1], [1, 1]]
    with pytest.raises(InputError):
        normal_cone(UNIT, (H, 0))


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.data())
def test_normal_cones_cover_space(seed, data):
    S = gen_simplex_h(2, 5, seed)
    cones = [normal_cone(S, v) for v in S.vertices()]
    for _ in range(50):
        c = data.draw(st.lists(st.fractions(-5, 5, max_denominator=5), min_size=2, max_size=2))
        assert any(cone_contains(N, c) for N in cones)
        # and each c is maximized over S at a vertex whose normal cone holds it
        vals = [la.dot(c, v) for v in S.vertices()]
        best = vals.index(max(vals))
        assert cone_contains(cones[best], c)


def test_vsimplex():
    S = VSimplex.from_points([[0, 0], [3, 0], [0, 3]])
    assert S.n == 2 and S.points() == [(0, 0), (3, 0), (0, 3)]
    assert S.edge_matrix(0) == [[3, 0], [0, 3]]
    with pytest.raises(InputError):
        VSimplex.from_points([[0, 0], [1, 1], [2, 2]])
