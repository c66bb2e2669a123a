"""Lattice width and flat direction of a simplex given by n+1 inequalities.

For a pair of vertices (v, u) let M(v, u) be the nonzero integer directions c
maximized over the simplex at v and minimized at u, i.e. c in N(v) & -N(u).
On M(v, u) the width in direction c is c . (v - u), and the sets M(v, u) over
all pairs cover Z^n minus 0.  Each pair is searched layer by layer
(c . (v - u) = k, k = 1, 2, ...); a layer is a slice of two opposite
translated copies of the cone spanned by the n-1 shared facet normals, and
after a unimodular change of coordinates it becomes an (n-1)-dimensional
cone feasibility problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from . import linalg as la
from .cone_ip import ConeIpInstance, solve as cone_ip_solve
from .cones import Cone, HSimplex, ShiftedCone, cone_contains
from .decomposition import decompose
from .errors import InputError, InvariantError, PreconditionError


@dataclass(frozen=True)
class VertexPair:
    v_index: int
    u_index: int
    v: tuple[Fraction, ...]
    u: tuple[Fraction, ...]
    common_rows: tuple[int, ...]
    B: tuple[tuple[int, ...], ...]   # n x (n-1), columns are the shared facet normals
    a_v: tuple[int, ...]             # tight at v only
    a_u: tuple[int, ...]             # tight at u only

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def direction(self) -> tuple[Fraction, ...]:
        return tuple(x - y for x, y in zip(self.v, self.u))

    def normal_cone_v(self) -> Cone:
        return Cone([list(row) + [a] for row, a in zip(self.B, self.a_v)])

    def normal_cone_u(self) -> Cone:
        return Cone([list(row) + [a] for row, a in zip(self.B, self.a_u)])

    def in_m(self, c) -> bool:
        """c in N(v) & -N(u), c != 0."""
        if not any(c):
            return False
        return (cone_contains(self.normal_cone_v(), c)
                and cone_contains(self.normal_cone_u(), [-x for x in c]))

    def s(self) -> Fraction:
        w = self.direction
        return min(la.dot(self.a_v, w), -la.dot(self.a_u, w))


@dataclass(frozen=True)
class LayerInstance:
    k: Fraction
    p_v: tuple[Fraction, ...]
    p_u: tuple[Fraction, ...]
    direction: tuple[Fraction, ...]
    d: int


@dataclass(frozen=True)
class WidthResult:
    width: Fraction
    direction: tuple[int, ...]
    pair: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    pair_indices: tuple[int, int]


def vertex_pair(S: HSimplex, i: int, j: int) -> VertexPair:
    n = S.n
    if i == j or not (0 <= i <= n and 0 <= j <= n):
        raise InputError("vertex_pair needs two distinct vertex indices")
    verts = S.vertices()
    v, u = verts[i], verts[j]
    common = tuple(r for r in range(n + 1) if r not in (i, j))
    B = tuple(tuple(S.A[r][row] for r in common) for row in range(n))
    a_v, a_u = S.A[j], S.A[i]
    w = [x - y for x, y in zip(v, u)]
    for r in common:
        if la.dot(S.A[r], v) != S.b[r] or la.dot(S.A[r], u) != S.b[r]:
            raise InvariantError("shared facet is not tight at both vertices")
    if not (la.dot(a_v, w) > 0 and -la.dot(a_u, w) > 0):
        raise InvariantError("distinguishing facets have the wrong orientation")
    return VertexPair(i, j, tuple(v), tuple(u), common, B, tuple(a_v), tuple(a_u))


def layer_points(pair: VertexPair, k) -> LayerInstance:
    """p_v(k), p_u(k): where the rays along a_v and -a_u cross c . (v - u) = k."""
    k = Fraction(k)
    w = pair.direction
    tv = k / la.dot(pair.a_v, w)
    tu = k / -la.dot(pair.a_u, w)
    p_v = tuple(a * tv for a in pair.a_v)
    p_u = tuple(-a * tu for a in pair.a_u)
    return LayerInstance(k, p_v, p_u, w, _primitive(w)[1])


def _primitive(w):
    """(g, d, mu): primitive integer g with w = (d/mu) g."""
    mu = 1
    for x in w:
        mu = lcm(mu, Fraction(x).denominator)
    wi = [int(Fraction(x) * mu) for x in w]
    d = la.content(wi)
    return [x // d for x in wi], d, mu


class _PairSearch:
    """Per-pair data reused across layers: coordinate change and the decomposed cone."""

    def __init__(self, pair: VertexPair):
        self.pair = pair
        n = pair.n
        g, d, mu = _primitive(pair.direction)
        self.g, self.d, self.mu = g, d, mu
        self.unit = Fraction(d, mu)      # value of one primitive layer
        self.V = la.unimodular_completion(g)
        self.Q = la.integer_inverse(self.V)
        self.av_g = la.dot(pair.a_v, g)
        self.au_g = -la.dot(pair.a_u, g)
        if n > 1:
            QB = la.matmul(self.Q, [list(r) for r in pair.B])
            if any(QB[0]):
                raise InvariantError("shared normals are not orthogonal to the edge")
            self.Bp = QB[1:]
            self.R, _ = la.adjugate_scaled(self.Bp)
            self.dec = decompose(self.Bp)
            self.cone = Cone(self.Bp)

    def probe(self, kg: int) -> Optional[list[int]]:
        """Some c in M(v, u) with c . g = kg, or None."""
        pair = self.pair
        p_v = [Fraction(a * kg, self.av_g) for a in pair.a_v]
        p_u = [Fraction(-a * kg, self.au_g) for a in pair.a_u]
        qv, qu = la.matvec(self.Q, p_v), la.matvec(self.Q, p_u)
        if qv[0] != kg or qu[0] != kg:
            raise InvariantError("layer points left the layer")
        if pair.n == 1:
            z = [kg]
        else:
            r = [la.floor_q(x) for x in la.matvec(self.R, qu[1:])]
            inst = ConeIpInstance(self.R, r, ShiftedCone(qv[1:], self.cone))
            res = cone_ip_solve(inst, self.dec)
            if not res.feasible:
                return None
            z = [kg] + list(res.point)
        c = la.matvec(self.V, z)
        if la.dot(c, self.g) != kg or not pair.in_m(c):
            raise InvariantError("layer witness is not in M(v, u) & H(k)")
        return c

    def search(self, limit: Fraction, strict_below: Optional[Fraction] = None):
        kmax = la.floor_q(Fraction(limit) / self.unit)
        for kg in range(1, kmax + 1):
            val = kg * self.unit
            if strict_below is not None and val >= strict_below:
                return None
            c = self.probe(kg)
            if c is not None:
                return val, c
        return None


def layer_nonempty(pair: VertexPair, k) -> Optional[list[int]]:
    """Some integer c in M(v, u) with c . (v - u) = k, or None."""
    k = Fraction(k)
    if k <= 0:
        raise InputError("layer index must be positive")
    g, d, mu = _primitive(pair.direction)
    kg = k * mu / d
    if kg.denominator != 1:
        return None   # c . g is an integer, so d must divide mu k
    return _PairSearch(pair).probe(int(kg))


def pair_minimum(pair: VertexPair, cutoff=None):
    """(k*, c): least layer value c . (v - u) <= min(cutoff, s) with a witness."""
    s = pair.s()
    if cutoff is not None and Fraction(cutoff) <= 0:
        raise InputError("cutoff must be positive")
    limit = s if cutoff is None else min(Fraction(cutoff), s)
    return _PairSearch(pair).search(limit)


def preprocess_hnf(S: HSimplex):
    """(S', U) with S' = P(A U, b), A U in column Hermite form; x = U x'."""
    res = la.hnf([list(r) for r in S.A])
    return HSimplex(res.H, S.b), res.U


def _search_pairs(S: HSimplex, cutoff=None):
    n = S.n
    best = None
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                continue
            pair = vertex_pair(S, i, j)
            limit = pair.s()
            if cutoff is not None:
                limit = min(limit, Fraction(cutoff))
            found = _PairSearch(pair).search(limit, None if best is None else best[0])
            if found is not None:
                best = (found[0], found[1], (i, j))
    return best


def _finish(S: HSimplex, Sp: HSimplex, U, best) -> WidthResult:
    value, cp, (i, j) = best
    c = la.matvec(la.transpose(la.integer_inverse(U)), cp)
    verts = S.vertices()
    vals = [la.dot(c, x) for x in verts]
    if max(vals) - min(vals) != value:
        raise InvariantError("flat direction does not realise the reported width")
    return WidthResult(width=value, direction=tuple(c),
                       pair=(verts[i], verts[j]), pair_indices=(i, j))


def width(S: HSimplex) -> WidthResult:
    Sp, U = preprocess_hnf(S)
    best = _search_pairs(Sp)
    if best is None:
        raise InvariantError("no vertex pair produced a direction")
    return _finish(S, Sp, U, best)


def width_lattice_free(S: HSimplex) -> WidthResult:
    """Width of a simplex without integer points, searching layers up to delta(A) only."""
    from .linalg import minor_stats
    delta = minor_stats([list(r) for r in S.A], S.n).min_abs_nonzero
    Sp, U = preprocess_hnf(S)
    best = _search_pairs(Sp, cutoff=delta)
    if best is None:
        raise PreconditionError(f"no direction of width <= delta(A) = {delta}; "
                                "the simplex must contain an integer point")
    return _finish(S, Sp, U, best)
