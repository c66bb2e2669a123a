"""Exact dense integer/rational linear algebra.

Matrices are plain ``list[list[int]]`` (row-major); rational data uses
:class:`fractions.Fraction`.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from .errors import InputError, InvariantError

Matrix = list[list[int]]


# -- small helpers -----------------------------------------------------------

def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy(M):
    return [list(row) for row in M]


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * xi for a, xi in zip(row, x)) for row in A]


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def columns(M):
    return transpose(M)


def from_columns(cols):
    return transpose(cols)


def replace_column(M, j, col):
    out = copy(M)
    for i, v in enumerate(col):
        out[i][j] = v
    return out


def content(v: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_integral(v) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def to_int_vector(v) -> list[int]:
    if not is_integral(v):
        raise InputError(f"vector {fmt_vector(v)} is not integral")
    return [int(Fraction(x)) for x in v]


def floor_q(q) -> int:
    q = Fraction(q)
    return q.numerator // q.denominator


def ceil_q(q) -> int:
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def fmt_vector(v) -> str:
    return "(" + " ".join(str(x) for x in v) + ")"


def _require_square(M) -> int:
    n, m = shape(M)
    if n != m:
        raise InputError(f"expected a square matrix, got {n}x{m}")
    return n


# -- determinants and inverses -----------------------------------------------

def det(M) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = _require_square(M)
    if n == 0:
        return 1
    a = copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def inverse_rational(M) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = _require_square(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise InputError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv_p = Fraction(1) / a[k][k]
        a[k] = [x * inv_p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def integer_inverse(M) -> Matrix:
    """Inverse of a unimodular matrix, as an integer matrix."""
    inv = inverse_rational(M)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise InputError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def solve(M, rhs) -> list[Fraction]:
    """Unique rational solution of M x = rhs (M square, nonsingular)."""
    n = _require_square(M)
    if len(rhs) != n:
        raise InputError("dimension mismatch in solve")
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise InputError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = Fraction(a[i][k]) / a[k][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = a[k][n] - sum(a[k][j] * x[j] for j in range(k + 1, n))
        x[k] = Fraction(s) / a[k][k]
    return x


def adjugate_scaled(M) -> tuple[Matrix, int]:
    """Return (R, d) with R = |det M| * M^{-1} integral and d = |det M| > 0."""
    d = abs(det(M))
    if d == 0:
        raise InputError("matrix is singular")
    inv = inverse_rational(M)
    return [[int(x * d) for x in row] for row in inv], d


# -- gcd ---------------------------------------------------------------------

def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, w) with u*a + w*b = g = gcd(a, b) >= 0."""
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# -- Smith normal form ---------------------------------------------------------

@dataclass(frozen=True)
class SnfResult:
    """A = P S Q with P, Q unimodular; ``q_inverse`` is Q^{-1}."""
    P: Matrix
    S: Matrix
    Q: Matrix
    q_inverse: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(len(self.S))]

    @property
    def largest(self) -> int:
        """The last invariant factor S_{n,n}."""
        return self.S[-1][-1]


class _SnfState:
    # Tracks S = L A R together with P = L^{-1} and Qi = R (so Q = R^{-1}).
    def __init__(self, A):
        n = len(A)
        self.n = n
        self.S = copy(A)
        self.P = identity(n)
        self.R = identity(n)
        self.Q = identity(n)

    def row_add(self, dst, src, q):
        # row[dst] += q * row[src]
        if q == 0:
            return
        S = self.S
        S[dst] = [x + q * y for x, y in zip(S[dst], S[src])]
        for row in self.P:
            row[src] -= q * row[dst]

    def row_swap(self, i, j):
        if i == j:
            return
        self.S[i], self.S[j] = self.S[j], self.S[i]
        for row in self.P:
            row[i], row[j] = row[j], row[i]

    def row_negate(self, i):
        self.S[i] = [-x for x in self.S[i]]
        for row in self.P:
            row[i] = -row[i]

    def col_add(self, dst, src, q):
        # col[dst] += q * col[src]
        if q == 0:
            return
        for row in self.S:
            row[dst] += q * row[src]
        for row in self.R:
            row[dst] += q * row[src]
        self.Q[src] = [x - q * y for x, y in zip(self.Q[src], self.Q[dst])]

    def col_swap(self, i, j):
        if i == j:
            return
        for row in self.S:
            row[i], row[j] = row[j], row[i]
        for row in self.R:
            row[i], row[j] = row[j], row[i]
        self.Q[i], self.Q[j] = self.Q[j], self.Q[i]


def snf(A) -> SnfResult:
    """Smith normal form of a nonsingular square integer matrix."""
    n = _require_square(A)
    if det(A) == 0:
        raise InputError("snf requires a nonsingular matrix")
    st = _SnfState(A)
    S = st.S
    for t in range(n):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            st.row_swap(t, best[0])
            st.col_swap(t, best[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, n):
                if S[i][t]:
                    st.row_add(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    st.col_add(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n)
                        if S[i][j] % p), None)
            if bad is None:
                break
            st.row_add(t, bad[0], 1)
        if S[t][t] < 0:
            st.row_negate(t)
    return SnfResult(P=st.P, S=st.S, Q=st.Q, q_inverse=st.R)


# -- Hermite normal form -------------------------------------------------------

@dataclass(frozen=True)
class HnfResult:
    """H = A U, lower echelon form under column operations, U unimodular."""
    H: Matrix
    U: Matrix
    pivot_rows: tuple[int, ...]


def hnf(A) -> HnfResult:
    """Column-style Hermite normal form of a full-column-rank integer matrix.

    Rows are scanned top to bottom; each row that is independent of the rows
    above it gets a positive pivot, zeros to its right and entries reduced
    into ``[0, pivot)`` to its left.  When the leading n rows are nonsingular
    the result is lower triangular there.
    """
    m, n = shape(A)
    H = copy(A)
    U = identity(n)

    def col_combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + c col_j, b col_i + d col_j)
        for M in (H, U):
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + c * y, b * x + d * y

    pivots = []
    col = 0
    for i in range(m):
        if col == n:
            break
        row = H[i]
        for j in range(col + 1, n):
            if row[j] != 0:
                a, b = row[col], row[j]
                g, x, y = ext_gcd(a, b)
                # [[x, -b/g], [y, a/g]] has determinant 1
                col_combine(col, j, x, -(b // g), y, a // g)
        if row[col] == 0:
            continue
        if row[col] < 0:
            for M in (H, U):
                for r in M:
                    r[col] = -r[col]
        piv = row[col]
        for j in range(col):
            q = row[j] // piv
            if q:
                for M in (H, U):
                    for r in M:
                        r[j] -= q * r[col]
        pivots.append(i)
        col += 1
    if col < n:
        raise InputError("hnf requires a matrix of full column rank")
    return HnfResult(H=H, U=U, pivot_rows=tuple(pivots))


def unimodular_completion(g: Sequence[int]) -> Matrix:
    """Unimodular V with g^T V = (1, 0, ..., 0) for a primitive integer g."""
    n = len(g)
    if content(g) != 1:
        raise InputError(f"vector {fmt_vector(g)} is not primitive")
    res = hnf([list(g)] + identity(n))
    if res.H[0][0] != 1 or any(res.H[0][1:]):
        raise InvariantError("column reduction of a primitive vector failed")
    return res.U


# -- minors ----------------------------------------------------------------------

@dataclass(frozen=True)
class MinorStats:
    k: int
    max_abs: int
    min_abs_nonzero: Optional[int]
    gcd: int


def minor_stats(A, k: int) -> MinorStats:
    """Exhaustive statistics over all k x k minors (exponential in size)."""
    m, n = shape(A)
    if not 1 <= k <= min(m, n):
        raise InputError(f"minor order {k} out of range for a {m}x{n} matrix")
    mx, mn, g = 0, None, 0
    for rows in combinations(range(m), k):
        sub_rows = [A[i] for i in rows]
        for cols in combinations(range(n), k):
            d = abs(det([[r[j] for j in cols] for r in sub_rows]))
            mx = max(mx, d)
            g = gcd(g, d)
            if d and (mn is None or d < mn):
                mn = d
    return MinorStats(k=k, max_abs=mx, min_abs_nonzero=mn, gcd=g)
