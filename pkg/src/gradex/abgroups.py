"""Finitely generated abelian groups in invariant-factor coordinates.

Groups are stored as Z^r x Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k
and every d_i >= 2.  Elements carry free coordinates first, torsion
coordinates last, the latter reduced to [0, d_i).  Homomorphisms are
integer matrices acting on coordinate columns; kernel, image and
torsion analysis all run through the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer matrix utilities (arbitrary precision)
# ---------------------------------------------------------------------------

def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m = len(A), len(B[0])
    k = len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A))]


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V = D, U and V unimodular, D diagonal
    with d_1 | d_2 | ... and all diagonal entries nonnegative."""
    if not A:
        return [], [], []
    n, m = len(A), len(A[0])
    D = [row[:] for row in A]
    U = _identity(n)
    V = _identity(m)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        for j in range(m):
            D[dst][j] += c * D[src][j]
        for j in range(n):
            U[dst][j] += c * U[src][j]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(n, m):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if D[i][j] != 0:
                    if piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, n):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if D[t][t] < 0:
            negate_row(t)
        # divisibility: D[t][t] must divide every later entry
        fixed = True
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if D[i][j] % D[t][t] != 0:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1
    return U, D, V


def snf_diagonal(A):
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel_basis(A):
    """Basis (list of columns) of the integer kernel of A."""
    if not A or not A[0]:
        m = len(A[0]) if A else 0
        return [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    U, D, V = smith_normal_form(A)
    n, m = len(A), len(A[0])
    r = sum(1 for i in range(min(n, m)) if D[i][i] != 0)
    basis = []
    for j in range(r, m):
        basis.append([V[i][j] for i in range(m)])
    return basis


def integer_solve(A, b):
    """One integer solution x of A x = b, or None."""
    if not A:
        return [] if all(x == 0 for x in b) else None
    U, D, V = smith_normal_form(A)
    n, m = len(A), len(A[0])
    c = mat_vec(U, b)
    y = [0] * m
    for i in range(n):
        d = D[i][i] if i < min(n, m) else 0
        if i < m and d != 0:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        else:
            if c[i] != 0:
                return None
    return mat_vec(V, y)


def lattice_column_basis(cols, n):
    """Basis of the lattice in Z^n spanned by the given columns."""
    if not cols:
        return []
    A = [[col[i] for col in cols] for i in range(n)]
    U, D, V = smith_normal_form(A)
    # columns of A*V with nonzero diagonal span the lattice in triangular form
    AV = mat_mul(A, V)
    r = sum(1 for i in range(min(n, len(cols))) if D[i][i] != 0)
    return [[AV[i][j] for i in range(n)] for j in range(r)]


# ---------------------------------------------------------------------------
# groups, elements, homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FGAbelianGroup:
    free_rank: int
    torsion_factors: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise GroupError("free rank must be nonnegative")
        object.__setattr__(self, "torsion_factors", tuple(self.torsion_factors))
        for d in self.torsion_factors:
            if d < 2:
                raise GroupError(f"torsion factor {d} < 2")
        for a, b in zip(self.torsion_factors, self.torsion_factors[1:]):
            if b % a != 0:
                raise GroupError(f"torsion factors {a}, {b} break divisibility")

    @property
    def dim(self):
        return self.free_rank + len(self.torsion_factors)

    @property
    def is_torsionfree(self):
        return not self.torsion_factors

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        if not self.is_finite:
            return None
        n = 1
        for d in self.torsion_factors:
            n *= d
        return n

    def element(self, coords):
        return GroupElement(self, tuple(coords))

    @property
    def zero(self):
        return self.element((0,) * self.dim)

    def elements(self):
        """All elements, lexicographically; only for finite groups."""
        if not self.is_finite:
            raise GroupError("infinite group cannot be enumerated")
        for coords in product(*(range(d) for d in self.torsion_factors)):
            yield self.element(coords)

    def relation_columns(self):
        """Columns generating the relation lattice in Z^dim."""
        cols = []
        for i, d in enumerate(self.torsion_factors):
            col = [0] * self.dim
            col[self.free_rank + i] = d
            cols.append(col)
        return cols

    def reduce(self, coords):
        coords = list(coords)
        for i, d in enumerate(self.torsion_factors):
            coords[self.free_rank + i] %= d
        return tuple(coords)

    def identity_hom(self):
        return GroupHom(self, self, _identity(self.dim))

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion_factors]
        return " x ".join(parts) if parts else "0"

    @staticmethod
    def from_presentation(n_generators, relation_cols):
        """Z^n modulo the lattice spanned by the given columns, plus the
        projection matrix from Z^n coordinates to canonical coordinates."""
        return _quotient_group(n_generators, relation_cols)


ZERO_GROUP = FGAbelianGroup(0, ())


def Z(n=1):
    return FGAbelianGroup(n, ())


def Zmod(*ds):
    return FGAbelianGroup(0, tuple(ds))


@dataclass(frozen=True)
class GroupElement:
    group: FGAbelianGroup
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.group.dim:
            raise GroupError("coordinate length mismatch")
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __add__(self, other):
        if other.group != self.group:
            raise GroupError("elements of different groups")
        return GroupElement(self.group,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n):
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    @property
    def is_zero(self):
        return all(a == 0 for a in self.coords)

    def has_infinite_order(self):
        return any(self.coords[i] != 0 for i in range(self.group.free_rank))

    def __repr__(self):
        return f"{self.coords}"


def _invariant_data(diag, n):
    """From an SNF diagonal over n generators: indices of free and torsion
    coordinates together with the kept factors."""
    free_idx, tors_idx, factors = [], [], []
    for i in range(n):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            free_idx.append(i)
        elif d >= 2:
            tors_idx.append(i)
            factors.append(d)
    return free_idx, tors_idx, factors


def _quotient_group(n, relation_cols):
    """Z^n / <relation_cols>; returns (group, projection matrix, lift matrix).

    projection: Z^n coords -> canonical coords of the quotient.
    lift: canonical generator j -> a representative in Z^n.
    """
    if not relation_cols:
        return FGAbelianGroup(n, ()), _identity(n), _identity(n)
    A = [[col[i] for col in relation_cols] for i in range(n)]
    U, D, V = smith_normal_form(A)
    diag = [D[i][i] for i in range(min(n, len(relation_cols)))]
    free_idx, tors_idx, factors = _invariant_data(diag, n)
    keep = free_idx + tors_idx
    group = FGAbelianGroup(len(free_idx), tuple(factors))
    proj = [U[i][:] for i in keep]
    Uinv = _matrix_inverse_unimodular(U)
    lift = [[Uinv[i][j] for j in keep] for i in range(n)]
    return group, proj, lift


def _matrix_inverse_unimodular(U):
    """Inverse of a unimodular integer matrix."""
    n = len(U)
    Uk, D, V = smith_normal_form(U)
    # U is unimodular, so D is the identity and U^{-1} = V * Uk
    for i in range(n):
        if D[i][i] != 1:
            raise GroupError("matrix is not unimodular")
    return mat_mul(V, Uk)


@dataclass(frozen=True)
class GroupHom:
    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: tuple  # rows of integers, target.dim x source.dim

    def __post_init__(self):
        mat = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if len(mat) != self.target.dim or any(len(r) != self.source.dim for r in mat):
            raise GroupError("hom matrix has wrong shape")
        # well-definedness: source relations must land in the target lattice
        for col in self.source.relation_columns():
            img = mat_vec([list(r) for r in mat], col)
            if not self.target_lattice_contains(img):
                raise GroupError("hom does not respect torsion relations")

    def target_lattice_contains(self, v):
        rel = self.target.relation_columns()
        if not rel:
            return all(x == 0 for x in v)
        A = [[col[i] for col in rel] for i in range(self.target.dim)]
        return integer_solve(A, v) is not None

    def __call__(self, x: GroupElement) -> GroupElement:
        if x.group != self.source:
            raise GroupError("element not in the source group")
        return self.target.element(mat_vec([list(r) for r in self.matrix], list(x.coords)))

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self o other."""
        if other.target != self.source:
            raise GroupError("homs do not compose")
        M = mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return GroupHom(other.source, self.target, M)

    def preimage(self, y: GroupElement):
        """Some x with self(x) = y, or None."""
        if y.group != self.target:
            raise GroupError("element not in the target group")
        rel = self.target.relation_columns()
        cols = [[self.matrix[i][j] for i in range(self.target.dim)]
                for j in range(self.source.dim)] + rel
        A = [[col[i] for col in cols] for i in range(self.target.dim)]
        sol = integer_solve(A, list(y.coords))
        if sol is None:
            return None
        return self.source.element(sol[:self.source.dim])


def zero_hom(source, target):
    return GroupHom(source, target,
                    [[0] * source.dim for _ in range(target.dim)])


def projection_to_zero(source):
    return GroupHom(source, ZERO_GROUP, [[] for _ in range(0)] or [])


def kernel_data(h: GroupHom):
    """(K, incl, torsionfree, finite, order) for the kernel of h.

    K is in invariant-factor form; incl is a monomorphism K -> source whose
    image is exactly ker(h)."""
    n = h.source.dim
    m = h.target.dim
    M = [list(r) for r in h.matrix]
    rel_H = h.target.relation_columns()
    # preimage lattice P = {x : M x in L_H}, via the kernel of [M | B_H]
    W = [[M[i][j] for j in range(n)] + [col[i] for col in rel_H] for i in range(m)]
    if m == 0:
        pre_cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    else:
        ker = integer_kernel_basis(W)
        pre_cols = [v[:n] for v in ker]
    P = lattice_column_basis(pre_cols + h.source.relation_columns(), n)
    s = len(P)
    if s == 0:
        K = ZERO_GROUP
        incl = GroupHom(K, h.source, [[] for _ in range(n)])
        return K, incl, True, True, 1
    B = [[P[j][i] for j in range(s)] for i in range(n)]  # n x s basis matrix
    # express the source relations in the basis B
    rel_G = h.source.relation_columns()
    C_cols = []
    for col in rel_G:
        x = integer_solve(B, col)
        if x is None:
            raise GroupError("internal: relation outside preimage lattice")
        C_cols.append(x)
    if not C_cols:
        diag = []
        Bp = B
    else:
        C = [[col[i] for col in C_cols] for i in range(s)]
        U2, D2, _ = smith_normal_form(C)
        diag = [D2[i][i] for i in range(min(s, len(C_cols)))]
        U2inv = _matrix_inverse_unimodular(U2)
        Bp = mat_mul(B, U2inv)
    free_idx, tors_idx, factors = _invariant_data(diag, s)
    K = FGAbelianGroup(len(free_idx), tuple(factors))
    keep = free_idx + tors_idx
    incl_matrix = [[Bp[i][j] for j in keep] for i in range(n)]
    incl = GroupHom(K, h.source, incl_matrix)
    return K, incl, K.is_torsionfree, K.is_finite, K.order


def image_index_data(h: GroupHom):
    """Invariant factors of target / image(h); all 1 means epimorphism."""
    m = h.target.dim
    cols = [[h.matrix[i][j] for i in range(m)] for j in range(h.source.dim)]
    cols += h.target.relation_columns()
    if m == 0:
        return []
    if not cols:
        return [0] * m
    A = [[col[i] for col in cols] for i in range(m)]
    diag = snf_diagonal(A)
    diag = diag + [0] * (m - len(diag))
    return diag[:m]


def hom_props(h: GroupHom):
    """(epi, mono, iso) flags."""
    diag = image_index_data(h)
    epi = all(d == 1 for d in diag)
    K, _, _, _, order = kernel_data(h)
    mono = (K.dim == 0)
    return epi, mono, epi and mono


def fiber_filter(psi: GroupHom, degrees, h: GroupElement):
    """The listed degrees g with psi(g) = h, in canonical order."""
    epi, _, _ = hom_props(psi)
    if not epi:
        raise GroupError("fiber_filter requires an epimorphism")
    hits = [g for g in degrees if psi(g) == h]
    return sorted(hits, key=lambda g: g.coords)
