"""Brute-force reference answers used to check the algorithms.

Deliberately naive and independent of the algorithmic modules: it has its
own cofactor determinants and Cramer-rule vertex solver.  Box enumeration of
linear systems is vectorised with int64 numpy arrays when every intermediate
provably fits in 62 bits, and falls back to Python integers otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, InputError

DEFAULT_BUDGET = 10 ** 7
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class Box:
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise InputError("box bounds differ in length")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise InputError("box lower bound exceeds upper bound")

    @classmethod
    def cube(cls, n: int, radius: int, center=None) -> "Box":
        center = center or [0] * n
        return cls(tuple(c - radius for c in center), tuple(c + radius for c in center))

    @property
    def volume(self) -> int:
        v = 1
        for lo, hi in zip(self.lower, self.upper):
            v *= hi - lo + 1
        return v

    def points(self):
        return product(*(range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)))


@dataclass(frozen=True)
class Halfspaces:
    """Integer system A x <= b; usable as a predicate and enumerated in bulk."""
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]

    def __init__(self, A, b):
        object.__setattr__(self, "A", tuple(tuple(int(x) for x in r) for r in A))
        object.__setattr__(self, "b", tuple(int(x) for x in b))

    def __call__(self, x) -> bool:
        return all(sum(a * xi for a, xi in zip(r, x)) <= bi for r, bi in zip(self.A, self.b))

    def __and__(self, other: "Halfspaces") -> "Halfspaces":
        return Halfspaces(self.A + other.A, self.b + other.b)


def _check_budget(box: Box, budget: int) -> None:
    if box.volume > budget:
        raise BudgetExceeded(f"box holds {box.volume} points, budget is {budget}")


def _enum_halfspaces(h: Halfspaces, box: Box) -> list[tuple[int, ...]]:
    n = len(box.lower)
    if not h.A:
        return [tuple(p) for p in box.points()]
    reach = max(max(abs(lo), abs(hi)) for lo, hi in zip(box.lower, box.upper))
    amax = max(abs(x) for r in h.A for x in r)
    bmax = max(abs(x) for x in h.b)
    if n * amax * reach + bmax >= _INT64_SAFE:
        return [tuple(p) for p in box.points() if h(p)]
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(box.lower, box.upper)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    A = np.array(h.A, dtype=np.int64)
    b = np.array(h.b, dtype=np.int64)
    mask = np.all(grid @ A.T <= b, axis=1)
    return [tuple(int(v) for v in row) for row in grid[mask]]


def enum_lattice_points(predicate, box: Box, budget: int = DEFAULT_BUDGET):
    """All integer points of the box satisfying the predicate, in lexicographic order."""
    _check_budget(box, budget)
    if isinstance(predicate, Halfspaces):
        return _enum_halfspaces(predicate, box)
    return [tuple(p) for p in box.points() if predicate(p)]


def brute_optimize(predicate, c, box: Box, budget: int = DEFAULT_BUDGET):
    """(point, value) maximizing c over the enumerated points; ties -> lexicographically least."""
    best = None
    for p in enum_lattice_points(predicate, box, budget):
        val = sum(ci * pi for ci, pi in zip(c, p))
        if best is None or val > best[1]:
            best = (p, val)
    return best


# -- independent exact helpers ------------------------------------------------------

def cofactor_det(M) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * cofactor_det(minor)
    return total


def cofactor_adjugate(M):
    """adj(M), so that adj(M) M = det(M) I."""
    n = len(M)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * cofactor_det(minor)
    return adj


def cramer_solve(M, rhs) -> list[Fraction]:
    d = cofactor_det(M)
    if d == 0:
        raise InputError("singular system")
    out = []
    for j in range(len(M)):
        Mj = [row[:j] + [r] + row[j + 1:] for row, r in zip(M, rhs)]
        out.append(Fraction(cofactor_det(Mj), d))
    return out


def simplex_vertices(A, b) -> list[list[Fraction]]:
    """Vertex i solves all rows except row i with equality."""
    A = [list(r) for r in A]
    return [cramer_solve([A[r] for r in range(len(A)) if r != i],
                         [b[r] for r in range(len(A)) if r != i]) for i in range(len(A))]


def bounding_box(points) -> Box:
    n = len(points[0])
    lo = [min(Fraction(p[k]) for p in points) for k in range(n)]
    hi = [max(Fraction(p[k]) for p in points) for k in range(n)]
    return Box(tuple(-((-x.numerator) // x.denominator) for x in lo),
               tuple(x.numerator // x.denominator for x in hi))


def simplex_box(A, b) -> Optional[Box]:
    """Integer box around the Cramer-rule vertices; None if it holds no integer point."""
    verts = simplex_vertices(A, b)
    n = len(verts[0])
    lo = [min(v[k] for v in verts) for k in range(n)]
    hi = [max(v[k] for v in verts) for k in range(n)]
    lower = tuple(-((-x.numerator) // x.denominator) for x in lo)
    upper = tuple(x.numerator // x.denominator for x in hi)
    if any(l > h for l, h in zip(lower, upper)):
        return None
    return Box(lower, upper)


def simplex_lattice_points(A, b, budget: int = DEFAULT_BUDGET):
    box = simplex_box(A, b)
    if box is None:
        return []
    return enum_lattice_points(Halfspaces(A, b), box, budget)


# -- width --------------------------------------------------------------------------

def brute_width(A, b, radius: int) -> tuple[Fraction, tuple[int, ...]]:
    """Least max-min spread of c.x over the vertices among 0 < ||c||_inf <= radius."""
    if radius < 1:
        raise InputError("radius must be at least 1")
    verts = simplex_vertices(A, b)
    den = 1
    for v in verts:
        for x in v:
            den = lcm(den, x.denominator)
    iverts = [[int(x * den) for x in v] for v in verts]
    n = len(iverts[0])
    best = None
    for c in product(range(-radius, radius + 1), repeat=n):
        if not any(c):
            continue
        vals = [sum(ci * xi for ci, xi in zip(c, v)) for v in iverts]
        spread = max(vals) - min(vals)
        if best is None or spread < best[0]:
            best = (spread, c)
    return Fraction(best[0], den), tuple(best[1])


# -- cone IP --------------------------------------------------------------------------

def shifted_cone_halfspaces(p, C) -> Halfspaces:
    """p + cone(C) as an integer system (exact on all of R^n)."""
    d = cofactor_det(C)
    if d == 0:
        raise InputError("singular cone")
    adj = cofactor_adjugate(C)
    if d < 0:
        adj = [[-x for x in row] for row in adj]
    # adj (x - p) >= 0, scaled by the common denominator L of p
    L = 1
    for x in p:
        L = lcm(L, Fraction(x).denominator)
    Lp = [int(Fraction(x) * L) for x in p]
    rows = [[-L * a for a in row] for row in adj]
    rhs = [-sum(a * q for a, q in zip(row, Lp)) for row in adj]
    return Halfspaces(rows, rhs)


def brute_cone_ip(A, b, p, C, c=None, radius: int = 30, budget: int = DEFAULT_BUDGET):
    """(feasible, point, value) over P(A, b) & (p + cone(C)) & [-radius, radius]^n."""
    n = len(C)
    region = Halfspaces(A, b) & shifted_cone_halfspaces(p, C)
    pts = enum_lattice_points(region, Box.cube(n, radius), budget)
    if not pts:
        return False, None, None
    if c is None:
        return True, pts[0], None
    best = max(pts, key=lambda x: (sum(ci * xi for ci, xi in zip(c, x)), [-v for v in x]))
    return True, best, sum(ci * xi for ci, xi in zip(c, best))


# -- punctured simplex ---------------------------------------------------------------

def conv_halfspaces(points: Sequence[Sequence[int]]) -> Halfspaces:
    """Integer facet description of the simplex with the given n+1 vertices."""
    n = len(points[0])
    M = [list(p) + [1] for p in points]        # rows (p_i, 1)
    d = cofactor_det(M)
    if d == 0:
        raise InputError("affinely dependent vertices")
    adj = cofactor_adjugate(M)
    # barycentric coordinates lambda = (x, 1) M^{-1} >= 0; multiply by |d|
    sgn = 1 if d > 0 else -1
    rows, rhs = [], []
    for i in range(n + 1):
        col = [adj[k][i] * sgn for k in range(n + 1)]
        rows.append([-x for x in col[:n]])
        rhs.append(col[n])
    return Halfspaces(rows, rhs)


def brute_punctured(points, c, budget: int = DEFAULT_BUDGET):
    """(point, value) for max c.x over lattice points of conv(points) minus the points."""
    verts = {tuple(p) for p in points}
    h = conv_halfspaces(points)
    box = bounding_box(points)
    best = None
    for x in enum_lattice_points(h, box, budget):
        if x in verts:
            continue
        val = sum(ci * xi for ci, xi in zip(c, x))
        if best is None or val > best[1]:
            best = (x, val)
    return best


def lattice_free(A, b, budget: int = DEFAULT_BUDGET) -> bool:
    return not simplex_lattice_points(A, b, budget)
