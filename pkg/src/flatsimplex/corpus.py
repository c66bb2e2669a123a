"""Seeded instance generators.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014): state advances by
0x9E3779B97F4A7C15 and is mixed with the multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB (shifts 30, 27, 31).  Bounded integers use rejection
sampling on the top bits, so a seed yields the same corpus on every platform
and in any language that reproduces these steps.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .cone_ip import ConeIpInstance
from .cones import Cone, HSimplex, ShiftedCone, VSimplex
from .errors import InputError
from .oracle import lattice_free
from .simplex_opt import PuncturedSimplexInstance

_MASK = (1 << 64) - 1

DEFAULT_TRIES = 100_000
MIX_DEPTH = 6


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        bits = max(1, (n - 1).bit_length())
        while True:
            r = self.next_u64() >> (64 - bits)
            if r < n:
                return r

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def _factor(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def gen_unimodular(n: int, seed: int, depth: int = MIX_DEPTH) -> la.Matrix:
    """Product of ``depth`` random elementary operations x_i += +-x_j."""
    rng = SplitMix64(seed)
    U = la.identity(n)
    if n == 1:
        return [[rng.choice([1, -1])]]
    for _ in range(depth):
        i = rng.below(n)
        j = (i + 1 + rng.below(n - 1)) % n
        s = rng.choice([1, -1])
        U[i] = [x + s * y for x, y in zip(U[i], U[j])]
    return U


def gen_cone(n: int, target_det: int, seed: int, max_entry: int | None = None,
             depth: int = MIX_DEPTH, tries: int = DEFAULT_TRIES) -> la.Matrix:
    """Integer n x n matrix with |det| = target_det.

    By default: a lower-triangular matrix whose diagonal is a random ordered
    factorization of target_det (entries below the diagonal reduced modulo the
    diagonal), mixed by ``depth`` random row and ``depth`` random column
    operations x_i += +-x_j.  Each operation at most doubles the largest
    entry, so every entry is below target_det * 4^depth.
    With ``max_entry`` the matrix is instead rejection-sampled from
    [-max_entry, max_entry]^(n x n).
    """
    if n < 1 or target_det < 1:
        raise InputError("gen_cone needs n >= 1 and target_det >= 1")
    rng = SplitMix64(seed)
    if max_entry is not None:
        for _ in range(tries):
            M = [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(n)]
            if abs(la.det(M)) == target_det:
                return M
        raise InputError("sampling budget exhausted in gen_cone")
    diag = [1] * n
    for p in _factor(target_det):
        diag[rng.below(n)] *= p
    L = [[0] * n for _ in range(n)]
    for i in range(n):
        L[i][i] = diag[i]
        for j in range(i):
            L[i][j] = rng.below(diag[i])
    if n == 1:
        return L
    for _ in range(depth):
        i = rng.below(n)
        j = (i + 1 + rng.below(n - 1)) % n
        s = rng.choice([1, -1])
        L[i] = [x + s * y for x, y in zip(L[i], L[j])]
        i = rng.below(n)
        j = (i + 1 + rng.below(n - 1)) % n
        s = rng.choice([1, -1])
        for row in L:
            row[i] += s * row[j]
    return L


def _try_simplex(rng: SplitMix64, n: int, bound: int):
    A = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n + 1)]
    b = [rng.randint(-bound, bound) for _ in range(n + 1)]
    try:
        return HSimplex(A, b)
    except InputError:
        return None


def gen_simplex_h(n: int, coord_bound: int, seed: int, tries: int = DEFAULT_TRIES) -> HSimplex:
    """Random simplex with all entries of A and b in [-coord_bound, coord_bound]."""
    rng = SplitMix64(seed)
    for _ in range(tries):
        S = _try_simplex(rng, n, coord_bound)
        if S is not None:
            return S
    raise InputError("sampling budget exhausted in gen_simplex_h")


FIXED_LATTICE_FREE = [
    HSimplex([[-2, 0], [0, -2], [2, 2]], [-1, -1, 3]),
]


def gen_lattice_free_simplex(n: int, seed: int, coord_bound: int = 3,
                             tries: int = DEFAULT_TRIES) -> HSimplex:
    """Random simplex certified free of integer points by enumeration."""
    rng = SplitMix64(seed)
    for _ in range(tries):
        S = _try_simplex(rng, n, coord_bound)
        if S is not None and lattice_free(S.A, S.b):
            return S
    raise InputError("sampling budget exhausted in gen_lattice_free_simplex")


def gen_vsimplex(n: int, coord_bound: int, seed: int, tries: int = DEFAULT_TRIES) -> VSimplex:
    """Random lattice simplex with vertex coordinates in [-coord_bound, coord_bound]."""
    rng = SplitMix64(seed)
    for _ in range(tries):
        pts = [[rng.randint(-coord_bound, coord_bound) for _ in range(n)] for _ in range(n + 1)]
        try:
            return VSimplex.from_points(pts)
        except InputError:
            continue
    raise InputError("sampling budget exhausted in gen_vsimplex")


def gen_objective(n: int, bound: int, seed: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.randint(-bound, bound) for _ in range(n)]


def gen_cone_ip(n: int, seed: int, max_det: int = 8, max_entry: int = 5,
                rows: int = 2, tries: int = DEFAULT_TRIES) -> ConeIpInstance:
    """Cone IP instance satisfying the row and objective sign conditions.

    C has entries in [-max_entry, max_entry] and |det C| in [1, max_det];
    the apex has small rational entries.  Rows a with a . g >= 0 and an
    objective c with c . g <= 0 on every generator g are random nonnegative
    (resp. nonpositive) combinations of the dual cone generators.
    """
    rng = SplitMix64(seed)
    top = max_det if n > 1 else min(max_det, max_entry)
    C = gen_cone(n, rng.randint(1, top), rng.next_u64(), max_entry=max_entry, tries=tries)
    gens = la.columns(C)
    p = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]

    dual, _ = la.adjugate_scaled(C)   # rows span the dual cone

    def sample(sign):
        lam = [0] * n
        while not any(lam):
            lam = [rng.randint(0, 3) for _ in range(n)]
        v = [sign * sum(l * row[k] for l, row in zip(lam, dual)) for k in range(n)]
        g = la.content(v)
        return [x // g for x in v]

    A = [sample(1) for _ in range(rows)]
    # right-hand sides near a . p so that both verdicts occur
    b = [la.floor_q(la.dot(a, p)) + rng.randint(-2, 6) for a in A]
    c = sample(-1) if rng.below(4) else None
    return ConeIpInstance(A, b, ShiftedCone(p, Cone(C)), c)


def gen_punctured(n: int, coord_bound: int, seed: int, obj_bound: int = 5) -> PuncturedSimplexInstance:
    rng = SplitMix64(seed)
    S = gen_vsimplex(n, coord_bound, rng.next_u64())
    return PuncturedSimplexInstance(S, gen_objective(n, obj_bound, rng.next_u64()))
