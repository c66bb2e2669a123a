"""Simplicial cones, shifted cones and simplices in H- and V-form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import InputError


def _freeze(M):
    return tuple(tuple(row) for row in M)


@dataclass(frozen=True)
class Cone:
    """cone(gen): all nonnegative combinations of the columns of ``gen``."""
    gen: tuple[tuple[int, ...], ...]

    def __init__(self, gen):
        n, m = la.shape(gen)
        if n == 0 or n != m:
            raise InputError(f"cone generator matrix must be square, got {n}x{m}")
        if la.det(gen) == 0:
            raise InputError("cone generators are linearly dependent")
        object.__setattr__(self, "gen", _freeze(gen))

    @property
    def dim(self) -> int:
        return len(self.gen)

    @property
    def matrix(self):
        return la.copy(self.gen)

    @property
    def generators(self):
        return la.columns(self.gen)


@dataclass(frozen=True)
class ShiftedCone:
    """apex + cone."""
    apex: tuple[Fraction, ...]
    cone: Cone

    def __init__(self, apex, cone: Cone):
        if len(apex) != cone.dim:
            raise InputError("apex and cone dimensions differ")
        object.__setattr__(self, "apex", tuple(Fraction(x) for x in apex))
        object.__setattr__(self, "cone", cone)


def cone_coordinates(C: Cone, x) -> list[Fraction]:
    """The unique t with gen t = x."""
    return la.solve(C.gen, x)


def cone_contains(C: Cone, x) -> bool:
    if len(x) != C.dim:
        raise InputError("point and cone dimensions differ")
    return all(t >= 0 for t in cone_coordinates(C, x))


def rows_in_dual_cone(A, C: Cone) -> bool:
    """Every row a of A satisfies a . g >= 0 for every generator g of C."""
    gens = C.generators
    return all(la.dot(row, g) >= 0 for row in A for g in gens)


@dataclass(frozen=True)
class HSimplex:
    """P(A, b) = {x : A x <= b} with A of shape (n+1) x n, validated as a simplex.

    Vertex ``i`` is the point where every row except row ``i`` is tight, so
    row ``i`` is the facet opposite vertex ``i``.
    """
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]

    def __init__(self, A, b):
        m, n = la.shape(A)
        if n < 1 or m != n + 1:
            raise InputError(f"an n-simplex needs n+1 rows in n variables, got {m}x{n}")
        if len(b) != m:
            raise InputError("right-hand side length differs from the row count")
        if any(len(row) != n for row in A):
            raise InputError("ragged constraint matrix")
        object.__setattr__(self, "A", _freeze(A))
        object.__setattr__(self, "b", tuple(int(x) for x in b))
        object.__setattr__(self, "_verts", tuple(self._compute_vertices()))

    @property
    def n(self) -> int:
        return len(self.A[0])

    def _compute_vertices(self):
        A, b = self.A, self.b
        subsystems = []
        for i in range(len(A)):
            rows = [r for r in range(len(A)) if r != i]
            if la.det([A[r] for r in rows]) == 0:
                raise InputError("not a simplex: rows "
                                 + ",".join(str(r + 1) for r in rows) + " singular")
            subsystems.append(rows)
        verts = []
        for i, rows in enumerate(subsystems):
            x = la.solve([A[r] for r in rows], [b[r] for r in rows])
            if la.dot(A[i], x) >= b[i]:
                raise InputError(f"not a full-dimensional simplex: vertex opposite "
                                 f"row {i + 1} violates or touches that row")
            verts.append(tuple(x))
        return verts

    def vertices(self) -> list[tuple[Fraction, ...]]:
        return list(self._verts)

    def contains(self, x) -> bool:
        return all(la.dot(a, x) <= bi for a, bi in zip(self.A, self.b))

    def tight_rows(self, x) -> list[int]:
        return [j for j, (a, bj) in enumerate(zip(self.A, self.b)) if la.dot(a, x) == bj]


@dataclass(frozen=True)
class VSimplex:
    """conv of n+1 affinely independent integer points (the columns of ``verts``)."""
    verts: tuple[tuple[int, ...], ...]

    def __init__(self, verts):
        n, m = la.shape(verts)
        if n < 1 or m != n + 1:
            raise InputError(f"an n-simplex needs n+1 vertices in dimension n, got {m} in {n}")
        object.__setattr__(self, "verts", _freeze(verts))
        if la.det(self.edge_matrix(0)) == 0:
            raise InputError("vertices are affinely dependent")

    @classmethod
    def from_points(cls, points):
        return cls(la.from_columns([list(p) for p in points]))

    @property
    def n(self) -> int:
        return len(self.verts)

    def points(self) -> list[tuple[int, ...]]:
        return [tuple(c) for c in la.columns(self.verts)]

    def edge_matrix(self, i: int):
        """Columns p_j - p_i for j != i, in vertex order."""
        pts = la.columns(self.verts)
        base = pts[i]
        return la.from_columns([[x - y for x, y in zip(p, base)]
                                for j, p in enumerate(pts) if j != i])


def vertices(S: HSimplex):
    return S.vertices()


def normal_cone(S: HSimplex, v) -> Cone:
    """cone of the outward normals of the rows tight at vertex v."""
    if not S.contains(v):
        raise InputError(f"{la.fmt_vector(v)} is not in the simplex")
    J = S.tight_rows(v)
    if len(J) != S.n:
        raise InputError(f"{la.fmt_vector(v)} is not a vertex ({len(J)} tight rows)")
    return Cone(la.from_columns([list(S.A[j]) for j in J]))
