from itertools import combinations

from hypothesis import HealthCheck, settings, strategies as st

from flatsimplex import linalg as la

settings.register_profile("default", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")


def int_matrices(rows, cols=None, lo=-5, hi=5):
    cols = rows if cols is None else cols
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


@st.composite
def nonsingular(draw, n_min=1, n_max=4, lo=-5, hi=5):
    n = draw(st.integers(n_min, n_max))
    M = draw(int_matrices(n, lo=lo, hi=hi).filter(lambda M: la.det(M) != 0))
    return M


def minors_gcd(A, k):
    """gcd of all k x k minors, straight from the definition."""
    from math import gcd
    g = 0
    m, n = la.shape(A)
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), k):
            g = gcd(g, la.det([[A[r][c] for c in cs] for r in rs]))
    return g
