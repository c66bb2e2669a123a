"""Non-strict unimodular decomposition of simplicial integer cones.

Each step replaces one generator of the current cone by an integer vector
inside it, which lowers |det|.  Even determinants are halved in one step.
An odd step maps every piece to an even determinant below the old one, so
at most 2*log2(Delta) steps are needed and each step fans out into at most
n children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .errors import InputError, InvariantError


@dataclass(frozen=True)
class DecompositionPiece:
    gen: la.Matrix                 # unimodular
    coeff_num: la.Matrix           # gen = root @ coeff_num / denom, entries >= 0
    denom: int                     # |det root|
    depth: int                     # number of steps on the path from the root

    @property
    def coeffs(self) -> list[list[Fraction]]:
        return [[Fraction(x, self.denom) for x in row] for row in self.coeff_num]

    def max_coeff(self) -> Fraction:
        return Fraction(max(x for row in self.coeff_num for x in row), self.denom)


@dataclass(frozen=True)
class SplitRecord:
    """One column replacement: det(child) should equal y_j * det(parent) in absolute value."""
    parent_det: int
    column: int
    y_num: int
    y_den: int
    child_det: int

    @property
    def y(self) -> Fraction:
        return Fraction(self.y_num, self.y_den)


@dataclass
class UnimodularDecomposition:
    root: la.Matrix
    pieces: list[DecompositionPiece]
    steps: int
    splits: list[SplitRecord] = field(default_factory=list)

    @property
    def delta(self) -> int:
        return abs(la.det(self.root))


# -- congruences A x = 0 (mod S_nn) ---------------------------------------------

def congruence_solution(A, t, snf_result: Optional[la.SnfResult] = None) -> list[int]:
    """x = Q^{-1} S^{-1} S_nn t mod S_nn, a solution of A x = 0 (mod S_nn), 0 <= x < S_nn."""
    r = snf_result or la.snf(A)
    n = len(A)
    mod = r.largest
    scale = []
    for i, s in enumerate(r.diagonal):
        if mod % s:
            raise InvariantError("Smith diagonal is not a divisibility chain")
        scale.append(mod // s)   # S^{-1} S_nn is integral
    y = [scale[i] * t[i] for i in range(n)]
    return [v % mod for v in la.matvec(r.q_inverse, y)]


# -- single splits ---------------------------------------------------------------

def split(A, y) -> list[tuple[int, la.Matrix]]:
    """Replace column j by b = A y for each j with y_j > 0."""
    y = [Fraction(v) for v in y]
    if any(v < 0 for v in y):
        raise InputError("split vector must be nonnegative")
    if all(v == 0 for v in y):
        raise InputError("split vector must be nonzero")
    b = la.to_int_vector(la.matvec(A, y))
    d = abs(la.det(A))
    out = []
    for j, yj in enumerate(y):
        if yj > 0:
            child = la.replace_column(A, j, b)
            if abs(la.det(child)) != yj * d:
                raise InvariantError("determinant law violated in split")
            out.append((j, child))
    return out


def _even_moves(A, r: la.SnfResult) -> tuple[int, list[tuple[int, list[int]]]]:
    """(S_nn, moves); each move (j, y) means y / S_nn replaces column j."""
    mod = r.largest
    if mod % 2:
        raise InvariantError("even determinant with odd last invariant factor")
    q = [row[-1] for row in r.q_inverse]
    if all(v % 2 == 0 for v in q):
        raise InvariantError("column of a unimodular matrix has no odd entry")
    half = mod // 2
    y = [(half * v) % mod for v in q]
    return mod, [(j, y) for j in range(len(A)) if y[j] > 0]


def _odd_moves(A, r: la.SnfResult) -> tuple[int, list[tuple[int, list[int]]]]:
    mod = r.largest
    n = len(A)
    x = None
    for k in [n - 1] + list(range(n - 1)):
        t = [int(i == k) for i in range(n)]
        x = congruence_solution(A, t, r)
        if any(x):
            break
    if not any(x):
        raise InvariantError("A x = 0 (mod S_nn) has no nonzero solution")
    cols = []
    for k in range(n):
        g, _, w = la.ext_gcd(mod, x[k])
        lam = -w   # lam * x_k = -gcd (mod S_nn)
        cols.append([(lam * xi) % mod for xi in x])
    # column k of C is cols[k] / S_nn
    for k in range(n):
        for i in range(n):
            if not 0 <= cols[k][i] <= cols[i][i]:
                raise InvariantError("odd step coefficients violate 0 <= C_ik <= C_ii")
    return mod, [(i, cols[i]) for i in range(n) if cols[i][i] > 0]


def _child(A, j, y, mod):
    num = la.matvec(A, y)
    if any(v % mod for v in num):
        raise InvariantError("split vector is not a lattice point")
    return la.replace_column(A, j, [v // mod for v in num])


def _apply(A, moves):
    mod, ms = moves
    return [_child(A, j, y, mod) for j, y in ms]


def even_step(A) -> list[la.Matrix]:
    d = abs(la.det(A))
    if d == 0 or d % 2:
        raise InputError("even_step needs an even nonzero determinant")
    return _apply(A, _even_moves(A, la.snf(A)))


def odd_step(A) -> list[la.Matrix]:
    d = abs(la.det(A))
    if d < 3 or d % 2 == 0:
        raise InputError("odd_step needs an odd determinant > 1")
    return _apply(A, _odd_moves(A, la.snf(A)))


# -- full recursion ----------------------------------------------------------------

def _canonical(gen):
    # sort columns so that permuted duplicates collide
    cols = sorted(zip(*gen))
    return tuple(cols), [list(r) for r in zip(*cols)]


def decompose(A) -> UnimodularDecomposition:
    """Unimodular decomposition of cone(A); pieces carry gen = A @ coeffs."""
    n = la._require_square(A)
    delta = abs(la.det(A))
    if delta == 0:
        raise InputError("cannot decompose a singular cone")
    root = la.copy(A)
    adj, _ = la.adjugate_scaled(root)     # delta * root^{-1}
    frontier = [(root, delta)]
    seen = {_canonical(root)[0]}
    pieces, splits = [], []
    depth = 0
    while frontier:
        nxt = []
        for M, d in frontier:
            if d == 1:
                pieces.append(DecompositionPiece(gen=M, coeff_num=la.matmul(adj, M),
                                                 denom=delta, depth=depth))
                continue
            r = la.snf(M)
            mod, moves = _even_moves(M, r) if d % 2 == 0 else _odd_moves(M, r)
            if not moves or len(moves) > n:
                raise InvariantError("decomposition step produced no children or too many")
            for j, y in moves:
                child = _child(M, j, y, mod)
                cd = abs(la.det(child))
                splits.append(SplitRecord(parent_det=d, column=j, y_num=y[j], y_den=mod,
                                          child_det=cd))
                if cd * mod != y[j] * d:
                    raise InvariantError("determinant law violated during decomposition")
                if d % 2 == 1 and cd % 2:
                    raise InvariantError("odd step produced an odd determinant")
                if cd >= d:
                    raise InvariantError("decomposition step did not lower the determinant")
                key, g = _canonical(child)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((g, cd))
        if nxt:
            depth += 1
        frontier = nxt
    dec = UnimodularDecomposition(root=root, pieces=pieces, steps=depth, splits=splits)
    check_bounds(dec)
    return dec


def log2_floor_delta_sq(delta: int) -> int:
    """floor(2 * log2(delta)) computed exactly."""
    return (delta * delta).bit_length() - 1


def check_bounds(dec: UnimodularDecomposition) -> None:
    """Raise InvariantError if any proven bound of the decomposition fails."""
    delta = dec.delta
    n = len(dec.root)
    cap = log2_floor_delta_sq(delta)
    if dec.steps > cap:
        raise InvariantError(f"depth {dec.steps} exceeds 2*log2({delta})")
    if len(dec.pieces) > n ** cap:
        raise InvariantError(f"{len(dec.pieces)} pieces exceed n^(2*log2({delta}))")
    for p in dec.pieces:
        if abs(la.det(p.gen)) != 1:
            raise InvariantError("non-unimodular piece")
        if p.denom != delta:
            raise InvariantError("certificate denominator differs from |det root|")
        if la.matmul(dec.root, p.coeff_num) != [[delta * x for x in row] for row in p.gen]:
            raise InvariantError("coefficient certificate does not reproduce the piece")
        if any(x < 0 for row in p.coeff_num for x in row):
            raise InvariantError("negative coefficient certificate")
        if p.max_coeff() > delta * delta:
            raise InvariantError("coefficient certificate exceeds Delta^2")
        if p.depth >= 1 and not coeff_bound_ok(p.max_coeff(), p.depth):
            raise InvariantError("coefficient certificate exceeds 2^(k-1)")


def coeff_bound_ok(m: Fraction, k: int) -> bool:
    """||t|| <= 1 after one step and ||t|| < 2^(k-1) after k >= 2 steps."""
    if k == 1:
        return m <= 1
    return m < 2 ** (k - 1)
