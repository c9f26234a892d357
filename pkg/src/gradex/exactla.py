"""Exact scalar fields (Q and prime fields) and dense linear algebra.

Scalars are plain ``Fraction`` values over Q and least residues (ints in
[0, p)) over F_p; matrices are lists of rows.  Everything is exact, no
floating point anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product


class FieldError(ValueError):
    pass


class DimensionError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ScalarField:
    p: int  # 0 means Q

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def is_rational(self):
        return self.p == 0

    @property
    def is_finite(self):
        return self.p != 0

    def of(self, x):
        if self.p == 0:
            return Fraction(x)
        return int(Fraction(x)) % self.p if isinstance(x, (int, Fraction)) else \
            int(Fraction(str(x))) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p == 0 else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        if self.p == 0:
            raise FieldError("Q cannot be enumerated")
        return range(self.p)

    def __repr__(self):
        return "Q" if self.p == 0 else f"F{self.p}"


QQ = ScalarField(0)


def GF(p):
    return ScalarField(p)


# ---------------------------------------------------------------------------
# vectors and matrices (lists of rows over a field)
# ---------------------------------------------------------------------------

def zeros(field, n, m):
    return [[field.zero] * m for _ in range(n)]


def eye(field, n):
    M = zeros(field, n, n)
    for i in range(n):
        M[i][i] = field.one
    return M


def mat_mul(field, A, B):
    if A and B and len(A[0]) != len(B):
        raise DimensionError("matrix product shape mismatch")
    n = len(A)
    k = len(B)
    m = len(B[0]) if B else 0
    return [[_dot(field, A[i], [B[t][j] for t in range(k)]) for j in range(m)]
            for i in range(n)]


def _dot(field, u, v):
    s = field.zero
    for a, b in zip(u, v):
        s = field.add(s, field.mul(a, b))
    return s


def mat_vec_mul(field, A, v):
    if A and len(A[0]) != len(v):
        raise DimensionError("matrix-vector shape mismatch")
    return [_dot(field, row, v) for row in A]


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, a) for a in v]


def is_zero_vec(v):
    return all(a == 0 for a in v)


def rref(field, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    n = len(R)
    m = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if R[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = field.inv(R[r][c])
        R[r] = [field.mul(inv, x) for x in R[r]]
        for i in range(n):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [field.sub(R[i][j], field.mul(f, R[r][j])) for j in range(m)]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return R, pivots


def rank(field, A):
    return len(rref(field, A)[1])


def kernel_basis(field, A):
    """Basis of the right kernel, from the reduced echelon form."""
    m = len(A[0]) if A else 0
    R, pivots = rref(field, A)
    pivset = set(pivots)
    free = [c for c in range(m) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * m
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(R[r][fc])
        basis.append(v)
    return basis


def solve_linear(field, A, b):
    """A particular solution of A x = b, or None."""
    n = len(A)
    if len(b) != n:
        raise DimensionError("rhs length mismatch")
    m = len(A[0]) if A else 0
    aug = [A[i][:] + [b[i]] for i in range(n)] if n else []
    R, pivots = rref(field, aug)
    if m in pivots:
        return None
    x = [field.zero] * m
    for r, pc in enumerate(pivots):
        x[pc] = R[r][m]
    return x


def det(field, A):
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("determinant of non-square matrix")
    M = [row[:] for row in A]
    d = field.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if M[i][c] != 0:
                pr = i
                break
        if pr is None:
            return field.zero
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            d = field.neg(d)
        d = field.mul(d, M[c][c])
        inv = field.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = field.mul(inv, M[i][c])
                M[i] = [field.sub(M[i][j], field.mul(f, M[c][j])) for j in range(n)]
    return d


def mat_inverse(field, A):
    n = len(A)
    aug = [A[i][:] + eye(field, n)[i] for i in range(n)]
    R, pivots = rref(field, aug)
    if pivots != list(range(n)):
        return None
    return [R[i][n:] for i in range(n)]


def in_span(field, vectors, v):
    """Is v in the span of the given vectors?"""
    if not vectors:
        return is_zero_vec(v)
    A = [[vec[i] for vec in vectors] for i in range(len(v))]
    return solve_linear(field, A, v) is not None


def span_basis(field, vectors):
    """Canonical (rref) basis of the span of the given vectors."""
    if not vectors:
        return []
    R, pivots = rref(field, [list(v) for v in vectors])
    return [R[i] for i in range(len(pivots))]


def coords_in_basis(field, basis, v):
    """Coordinates of v in the given basis, or None."""
    if not basis:
        return [] if is_zero_vec(v) else None
    A = [[b[i] for b in basis] for i in range(len(v))]
    return solve_linear(field, A, v)


# ---------------------------------------------------------------------------
# invertible member of an affine matrix space
# ---------------------------------------------------------------------------

DEFAULT_SEED = 20230817


@dataclass
class IntertwinerResult:
    status: str  # "found" | "proven_none" | "budget_exhausted"
    matrix: list | None
    samples_used: int = 0


def _space_member(field, particular, basis, ts, n):
    M = [row[:] for row in particular]
    for t, K in zip(ts, basis):
        for i in range(n):
            for j in range(n):
                M[i][j] = field.add(M[i][j], field.mul(field.of(t), K[i][j]))
    return M


def invertible_intertwiner(field, particular, basis, n, seed=DEFAULT_SEED,
                           budget=2000, exhaustive_limit=2 ** 16):
    """Search the affine space {particular + sum t_i basis_i} of n x n
    matrices for an invertible member.

    Over a finite field the space is searched exhaustively when it has at
    most ``exhaustive_limit`` members.  Over Q the determinant polynomial
    is evaluated at integer points from an expanding range; for spaces of
    dimension <= 3 an exhaustive grid test proves identical vanishing.
    """
    k = len(basis)
    if k == 0:
        if n == 0 or det(field, particular) != 0:
            return IntertwinerResult("found", particular, 1)
        return IntertwinerResult("proven_none", None, 1)
    if field.is_finite:
        size = field.p ** k
        if size <= exhaustive_limit:
            count = 0
            for ts in product(field.elements(), repeat=k):
                count += 1
                M = _space_member(field, particular, basis, ts, n)
                if det(field, M) != 0:
                    return IntertwinerResult("found", M, count)
            return IntertwinerResult("proven_none", None, count)
        rng = random.Random(seed)
        for i in range(budget):
            ts = [rng.randrange(field.p) for _ in range(k)]
            M = _space_member(field, particular, basis, ts, n)
            if det(field, M) != 0:
                return IntertwinerResult("found", M, i + 1)
        return IntertwinerResult("budget_exhausted", None, budget)
    # rational case: the determinant is a polynomial of degree <= n in
    # each of the k parameters, so a grid with n+1 points per parameter
    # decides identical vanishing.
    if k <= 3 and (n + 1) ** k <= budget:
        count = 0
        for ts in product(range(n + 1), repeat=k):
            count += 1
            M = _space_member(field, particular, basis, ts, n)
            if det(field, M) != 0:
                return IntertwinerResult("found", M, count)
        return IntertwinerResult("proven_none", None, count)
    rng = random.Random(seed)
    for i in range(budget):
        bound = 2 + i // 50
        ts = [rng.randint(-bound, bound) for _ in range(k)]
        M = _space_member(field, particular, basis, ts, n)
        if det(field, M) != 0:
            return IntertwinerResult("found", M, i + 1)
    return IntertwinerResult("budget_exhausted", None, budget)
