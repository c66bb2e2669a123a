"""Integer feasibility / optimization over P(A, b) cut by a shifted simplicial cone.

Every row a of A must satisfy a . g >= 0 on the generators g of the cone, so
constraints only get harder to meet when moving into the cone.  After a
unimodular decomposition, the integer points of each piece form
``x + cone(B)`` for an integer apex x, and the piece meets P(A, b) iff its
apex does.  For optimization the objective must satisfy c . g <= 0 on every
generator, which makes each feasible apex the optimum of its piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .cones import Cone, ShiftedCone, rows_in_dual_cone
from .decomposition import UnimodularDecomposition, decompose
from .errors import InputError, InvariantError, PreconditionError


@dataclass(frozen=True)
class ConeIpInstance:
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]
    shifted: ShiftedCone
    c: Optional[tuple[int, ...]] = None

    def __init__(self, A, b, shifted: ShiftedCone, c=None):
        n = shifted.cone.dim
        if any(len(row) != n for row in A):
            raise InputError("constraint rows must match the cone dimension")
        if len(b) != len(A):
            raise InputError("right-hand side length differs from the row count")
        if c is not None and len(c) != n:
            raise InputError("objective length must match the cone dimension")
        object.__setattr__(self, "A", tuple(tuple(int(x) for x in row) for row in A))
        object.__setattr__(self, "b", tuple(int(x) for x in b))
        object.__setattr__(self, "shifted", shifted)
        object.__setattr__(self, "c", None if c is None else tuple(int(x) for x in c))

    @property
    def n(self) -> int:
        return self.shifted.cone.dim

    def validate(self) -> None:
        cone = self.shifted.cone
        if not rows_in_dual_cone(self.A, cone):
            raise PreconditionError("some constraint row a has a . g < 0 for a cone generator g")
        if self.c is not None:
            if any(la.dot(self.c, g) > 0 for g in cone.generators):
                raise PreconditionError("objective increases along a cone generator; "
                                        "the apex argument needs c . g <= 0")


@dataclass(frozen=True)
class ConeIpResult:
    feasible: bool
    point: Optional[tuple[int, ...]] = None
    value: Optional[int] = None

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def lattice_apexes(shifted: ShiftedCone,
                   decomposition: Optional[UnimodularDecomposition] = None):
    """(x_i, B_i) with (p + cone(C)) & Z^n = union of (x_i + cone(B_i)) & Z^n."""
    dec = decomposition or decompose(shifted.cone.matrix)
    p = list(shifted.apex)
    out = []
    for piece in dec.pieces:
        B = piece.gen
        Binv = la.integer_inverse(B)
        coords = la.matvec(Binv, p)
        s = [la.ceil_q(t) for t in coords]
        x = la.matvec(B, s)
        # s - coords >= 0 puts x in p + cone(B); s_j - 1 - coords_j < 0 makes
        # x - g_j fall outside, so x is the least lattice point of the piece
        if any(sj < t or sj - 1 >= t for sj, t in zip(s, coords)):
            raise InvariantError("apex rounding failed")
        out.append((tuple(x), B))
    return out


def apex_feasible(A, b, x, B, check: bool = True) -> bool:
    """Decide whether P(A, b) meets x + cone(B) in an integer point (B unimodular)."""
    if check and not rows_in_dual_cone(A, Cone(B)):
        raise PreconditionError("constraint row outside the dual cone of the piece")
    return all(la.dot(a, x) <= bi for a, bi in zip(A, b))


def solve(instance: ConeIpInstance,
          decomposition: Optional[UnimodularDecomposition] = None) -> ConeIpResult:
    instance.validate()
    best = None
    c = instance.c
    for x, B in lattice_apexes(instance.shifted, decomposition):
        # piece generators are nonnegative combinations of the root generators,
        # so the row condition carries over without re-checking it
        if not apex_feasible(instance.A, instance.b, x, B, check=False):
            continue
        if c is None:
            return ConeIpResult(True, x, None)
        val = la.dot(c, x)
        if best is None or val > best[0] or (val == best[0] and x < best[1]):
            best = (val, x)
    if best is None:
        return ConeIpResult(False)
    return ConeIpResult(True, best[1], best[0])


def in_region(instance: ConeIpInstance, x) -> bool:
    """Exact membership of x in P(A, b) & (p + cone(C))."""
    if not all(la.dot(a, x) <= bi for a, bi in zip(instance.A, instance.b)):
        return False
    sh = instance.shifted
    diff = [Fraction(xi) - pi for xi, pi in zip(x, sh.apex)]
    return all(t >= 0 for t in la.solve(sh.cone.gen, diff))


def integral_halfspaces_for_cone(shifted: ShiftedCone):
    """Integer (R, r) with {x in Z^n : R x <= r} = (p - cone(C)) & Z^n."""
    R, _ = la.adjugate_scaled(shifted.cone.gen)
    # C^{-1}(p - x) >= 0  <=>  R x <= R p, and R x is integral on Z^n
    r = [la.floor_q(v) for v in la.matvec(R, list(shifted.apex))]
    return R, r
