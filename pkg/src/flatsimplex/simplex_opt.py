"""max c.x over the integer points of a lattice simplex other than its vertices.

The simplex is the intersection of the edge cone at the LP-optimal vertex
with the halfspace of the opposite facet.  The objective never increases
along an edge leaving that vertex, so the cone machinery of
:mod:`flatsimplex.cone_ip` applies; vertices are excluded by stepping a
piece's apex one generator inward whenever the apex is a vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg as la
from .cone_ip import apex_feasible, lattice_apexes
from .cones import Cone, ShiftedCone, VSimplex, rows_in_dual_cone
from .decomposition import decompose
from .errors import InputError, InvariantError


@dataclass(frozen=True)
class PuncturedSimplexInstance:
    S: VSimplex
    c: tuple[int, ...]

    def __init__(self, S: VSimplex, c):
        if len(c) != S.n:
            raise InputError("objective length must match the dimension")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "c", tuple(int(x) for x in c))


@dataclass(frozen=True)
class EdgeCone:
    vertex: int
    B: la.Matrix
    alpha: int


@dataclass(frozen=True)
class PuncturedResult:
    point: tuple[int, ...]
    value: int
    alpha: int


def lp_vertex(S: VSimplex, c) -> int:
    vals = [la.dot(c, p) for p in S.points()]
    return vals.index(max(vals))


def edge_cone(S: VSimplex, i: int) -> EdgeCone:
    B = S.edge_matrix(i)
    return EdgeCone(i, B, abs(la.det(B)))


def opposite_facet(S: VSimplex, i: int) -> tuple[list[int], int]:
    """Primitive (a, a0): a.x = a0 on every vertex but i, a.p_i < a0."""
    pts = S.points()
    others = [p for j, p in enumerate(pts) if j != i]
    n = S.n
    base = others[0]
    D = [[x - y for x, y in zip(p, base)] for p in others[1:]]   # (n-1) x n
    # generalized cross product: a_k = (-1)^k det(D without column k)
    a = [(-1) ** k * la.det([[row[j] for j in range(n) if j != k] for row in D])
         for k in range(n)]
    g = la.content(a)
    if g == 0:
        raise InputError("degenerate simplex: opposite facet is not a hyperplane")
    a = [x // g for x in a]
    a0 = la.dot(a, base)
    if la.dot(a, pts[i]) > a0:
        a, a0 = [-x for x in a], -a0
    if la.dot(a, pts[i]) == a0:
        raise InputError("degenerate simplex")
    return a, a0


def optimize_punctured(inst: PuncturedSimplexInstance) -> Optional[PuncturedResult]:
    S, c = inst.S, list(inst.c)
    n = S.n
    top = lp_vertex(S, c)
    ec = edge_cone(S, top)
    a, a0 = opposite_facet(S, top)
    cone = Cone(ec.B)
    if not rows_in_dual_cone([a], cone):
        raise InvariantError("facet normal outside the dual of the edge cone")
    if any(la.dot(c, g) > 0 for g in cone.generators):
        raise InvariantError("objective increases along an edge of the LP vertex")
    delta_verts = la.minor_stats([list(r) for r in S.verts], n).max_abs
    if ec.alpha > (n + 1) * delta_verts:
        raise InvariantError("edge-cone determinant exceeds (n+1) Delta(A)")

    vertex_set = set(S.points())
    A, b = [a], [a0]
    dec = decompose(ec.B)
    best = None
    for apex, B in lattice_apexes(ShiftedCone(S.points()[top], cone), dec):
        gens = la.columns(B)
        stack, seen = [apex], set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            if not apex_feasible(A, b, x, B, check=False):
                continue
            if x in vertex_set:
                # lattice points of x + cone(B) other than x lie in some x + g + cone(B)
                stack.extend(tuple(xi + gi for xi, gi in zip(x, g)) for g in gens)
                continue
            val = la.dot(c, x)
            if best is None or val > best[0] or (val == best[0] and x < best[1]):
                best = (val, x)
    if best is None:
        return None
    return PuncturedResult(point=best[1], value=best[0], alpha=ec.alpha)
