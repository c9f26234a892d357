"""Graded modules over finite-dimensional graded algebras, plus the
symbolic one-variable-polynomial side used for the principal-ring
decomposition and the superfluous-inclusion counterexample.

A module is a coordinate space with an action tensor; everything a
morphism touches (kernels, images, cokernels, HOM, tensor) is built by
exact linear algebra per degree, so the induced gradings come out of the
construction instead of being bolted on afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .abgroups import GroupHom, hom_props
from . import exactla as la
from .gcore import (GradedAlgebra, AlgebraError, GradingViolation,
                    SizeGuardExceeded, nilradical)


class ModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graded modules
# ---------------------------------------------------------------------------

class GradedModule:
    """Finite-dimensional graded module given by an action tensor:
    x_i . v_j = sum_k action[i][j][k] v_k."""

    def __init__(self, algebra: GradedAlgebra, basis_degrees, action):
        self.algebra = algebra
        f = algebra.field
        self.field = f
        self.basis_degrees = tuple(basis_degrees)
        self.dim = len(self.basis_degrees)
        m, n = self.dim, algebra.dim
        self.action = tuple(
            tuple(tuple(f.of(action[i][j][k]) for k in range(m))
                  for j in range(m)) for i in range(n))
        for d in self.basis_degrees:
            if d.group != algebra.group:
                raise ModuleError("module degree outside the grading group")
        self._check()

    def _check(self):
        R, a = self.algebra, self.action
        n, m = R.dim, self.dim
        for i in range(n):
            for j in range(m):
                for k in range(m):
                    if a[i][j][k] != 0 and (R.basis_degrees[i]
                                            + self.basis_degrees[j]
                                            != self.basis_degrees[k]):
                        raise GradingViolation(
                            f"action entry ({i},{j},{k}) violates the grading")
        f = self.field
        for j in range(m):
            e = [f.one if t == j else f.zero for t in range(m)]
            if self.act_vec(list(R.unit), e) != e:
                raise ModuleError(f"unit does not act as identity on v_{j}")
        for i in range(n):
            for j in range(n):
                xij = R._raw_mul(R._basis_vec(i), R._basis_vec(j))
                for t in range(m):
                    v = [f.one if s == t else f.zero for s in range(m)]
                    lhs = self.act_vec(xij, v)
                    rhs = self.act_vec(R._basis_vec(i),
                                       self.act_vec(R._basis_vec(j), v))
                    if lhs != rhs:
                        raise ModuleError(
                            f"action not associative at (x_{i}, x_{j}, v_{t})")

    # -- action ----------------------------------------------------------

    def action_matrix(self, i):
        """Matrix of x_i acting on the module (columns indexed by v_j)."""
        return [[self.action[i][j][k] for j in range(self.dim)]
                for k in range(self.dim)]

    def act_vec(self, xcoords, v):
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(xcoords):
            if xi == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                c = f.mul(xi, vj)
                row = self.action[i][j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] = f.add(out[k], f.mul(c, row[k]))
        return out

    def act(self, x, v):
        return self.act_vec(list(x.coords), v)

    # -- grading ---------------------------------------------------------

    def degrees(self):
        seen, out = set(), []
        for d in self.basis_degrees:
            if d not in seen:
                seen.add(d)
                out.append(d)
        return out

    def component_indices(self, g):
        return [j for j in range(self.dim) if self.basis_degrees[j] == g]

    def vec_degree(self, v):
        """Degree of a homogeneous vector, or None."""
        degs = {self.basis_degrees[j] for j, c in enumerate(v) if c != 0}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous_vec(self, v):
        return len({self.basis_degrees[j] for j, c in enumerate(v)
                    if c != 0}) <= 1

    def homogeneous_components(self, v):
        out = {}
        for j, c in enumerate(v):
            if c != 0:
                d = self.basis_degrees[j]
                w = out.setdefault(d, [self.field.zero] * self.dim)
                w[j] = c
        return out

    def homogeneous_vectors(self, include_zero=False, limit=2 ** 16):
        """All nonzero homogeneous vectors over a finite field."""
        f = self.field
        if not f.is_finite:
            raise AlgebraError("homogeneous enumeration needs a finite field")
        if include_zero:
            yield [f.zero] * self.dim
        for g in self.degrees():
            idx = self.component_indices(g)
            if f.p ** len(idx) > limit:
                raise SizeGuardExceeded("component too large to enumerate")
            for vals in product(f.elements(), repeat=len(idx)):
                if all(v == 0 for v in vals):
                    continue
                v = [f.zero] * self.dim
                for j, c in zip(idx, vals):
                    v[j] = c
                yield v

    def hilbert(self):
        out = {}
        for d in self.basis_degrees:
            out[d] = out.get(d, 0) + 1
        return out

    def __eq__(self, other):
        return (isinstance(other, GradedModule)
                and self.algebra == other.algebra
                and self.basis_degrees == other.basis_degrees
                and self.action == other.action)

    def __hash__(self):
        return hash((self.algebra, self.basis_degrees, self.action))

    def __repr__(self):
        return f"GradedModule(dim={self.dim} over {self.algebra!r})"


def regular_module(R: GradedAlgebra) -> GradedModule:
    """R as a module over itself."""
    return GradedModule(R, R.basis_degrees, R.structure)


def zero_module(R: GradedAlgebra) -> GradedModule:
    return GradedModule(R, [], [tuple() for _ in range(R.dim)])


class ModuleMorphism:
    """Degree-preserving equivariant map between modules over the same
    algebra, as a matrix on basis coordinates."""

    def __init__(self, source: GradedModule, target: GradedModule, matrix,
                 check=True):
        if source.algebra != target.algebra:
            raise ModuleError("morphism between modules over different algebras")
        self.source = source
        self.target = target
        f = target.field
        self.matrix = [[f.of(x) for x in row] for row in matrix]
        if len(self.matrix) != target.dim or any(
                len(r) != source.dim for r in self.matrix):
            raise ModuleError("morphism matrix has wrong shape")
        if check:
            self._check()

    def _check(self):
        S, T = self.source, self.target
        for k in range(T.dim):
            for j in range(S.dim):
                if self.matrix[k][j] != 0 and (T.basis_degrees[k]
                                               != S.basis_degrees[j]):
                    raise ModuleError(
                        f"morphism entry ({k},{j}) is not degree-preserving")
        R = S.algebra
        for i in range(R.dim):
            A = S.action_matrix(i)
            B = T.action_matrix(i)
            if la.mat_mul(T.field, self.matrix, A) != \
                    la.mat_mul(T.field, B, self.matrix):
                raise ModuleError(f"morphism does not commute with x_{i}")

    def __call__(self, v):
        return la.mat_vec_mul(self.target.field, self.matrix, v)

    def compose(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """self o other."""
        M = la.mat_mul(self.target.field, self.matrix, other.matrix)
        return ModuleMorphism(other.source, self.target, M, check=False)

    def is_mono(self):
        if not self.matrix:
            return self.source.dim == 0
        return len(la.kernel_basis(self.target.field, self.matrix)) == 0

    def is_epi(self):
        return la.rank(self.target.field, self.matrix) == self.target.dim

    def is_iso(self):
        return (self.source.dim == self.target.dim
                and la.det(self.target.field, self.matrix) != 0)

    def __repr__(self):
        return (f"ModuleMorphism({self.source.dim} -> {self.target.dim} "
                f"over {self.source.algebra!r})")


def identity_module_morphism(M):
    return ModuleMorphism(M, M, la.eye(M.field, M.dim), check=False)


# ---------------------------------------------------------------------------
# basic constructions
# ---------------------------------------------------------------------------

def shift(M: GradedModule, g) -> GradedModule:
    """The g-shift: component at h is the old component at g + h."""
    return GradedModule(M.algebra, [d - g for d in M.basis_degrees], M.action)


def direct_sum(M: GradedModule, N: GradedModule):
    """(M + N, injection of M, injection of N)."""
    if M.algebra != N.algebra:
        raise ModuleError("direct sum over different algebras")
    R, f = M.algebra, M.field
    m, n = M.dim, N.dim
    degrees = list(M.basis_degrees) + list(N.basis_degrees)
    action = []
    for i in range(R.dim):
        block = []
        for j in range(m + n):
            row = [f.zero] * (m + n)
            if j < m:
                for k in range(m):
                    row[k] = M.action[i][j][k]
            else:
                for k in range(n):
                    row[m + k] = N.action[i][j - m][k]
            block.append(row)
        action.append(block)
    D = GradedModule(R, degrees, action)
    inc1 = [[f.one if (k == j and k < m) else f.zero for j in range(m)]
            for k in range(m + n)]
    inc2 = [[f.one if k == m + j else f.zero for j in range(n)]
            for k in range(m + n)]
    return (D, ModuleMorphism(M, D, inc1, check=False),
            ModuleMorphism(N, D, inc2, check=False))


def _module_on_subspace(M: GradedModule, basis):
    """Module structure on a graded subspace closed under the action,
    given a homogeneous basis.  Returns (module, inclusion)."""
    f, R = M.field, M.algebra
    degrees = []
    for b in basis:
        d = M.vec_degree(b)
        if d is None:
            raise ModuleError("subspace basis vector not homogeneous")
        degrees.append(d)
    action = []
    for i in range(R.dim):
        block = []
        for b in basis:
            w = M.act_vec(M.algebra._basis_vec(i), b)
            coords = la.coords_in_basis(f, basis, w)
            if coords is None:
                raise ModuleError("subspace is not closed under the action")
            block.append(coords)
        action.append(block)
    S = GradedModule(R, degrees, action)
    incl = [[basis[j][k] for j in range(len(basis))] for k in range(M.dim)]
    return S, ModuleMorphism(S, M, incl, check=False)


def _homogeneous_span_basis(M: GradedModule, vectors):
    """Canonical homogeneous basis of the graded span of the vectors."""
    f = M.field
    pieces = []
    for v in vectors:
        pieces.extend(M.homogeneous_components(v).values())
    by_degree = {}
    for v in pieces:
        by_degree.setdefault(M.vec_degree(v), []).append(v)
    basis = []
    for d in sorted(by_degree, key=lambda g: g.coords):
        basis.extend(la.span_basis(f, by_degree[d]))
    return basis


def generated_submodule(M: GradedModule, gens):
    """Graded submodule generated by the given vectors; returns
    (module, inclusion)."""
    f, R = M.field, M.algebra
    current = _homogeneous_span_basis(M, gens)
    while True:
        new = list(current)
        grew = False
        for b in current:
            for i in range(R.dim):
                w = M.act_vec(R._basis_vec(i), b)
                if not la.in_span(f, new, w):
                    new.append(w)
                    grew = True
        if not grew:
            break
        current = _homogeneous_span_basis(M, new)
    return _module_on_subspace(M, current)


def kernel(u: ModuleMorphism):
    """(kernel module, inclusion into the source)."""
    f = u.source.field
    basis = _homogeneous_span_basis(u.source,
                                    la.kernel_basis(f, u.matrix))
    return _module_on_subspace(u.source, basis)


def image(u: ModuleMorphism):
    """(image module, inclusion into the target)."""
    cols = [[u.matrix[k][j] for k in range(u.target.dim)]
            for j in range(u.source.dim)]
    basis = _homogeneous_span_basis(u.target, cols)
    return _module_on_subspace(u.target, basis)


def cokernel(u: ModuleMorphism):
    """(cokernel module, projection from the target)."""
    T, f, R = u.target, u.target.field, u.target.algebra
    img = _homogeneous_span_basis(
        T, [[u.matrix[k][j] for k in range(T.dim)]
            for j in range(u.source.dim)])
    reps = []
    for j in range(T.dim):
        e = [f.one if t == j else f.zero for t in range(T.dim)]
        if not la.in_span(f, img + reps, e):
            reps.append(e)
    degrees = [T.basis_degrees[next(j for j, c in enumerate(r) if c != 0)]
               for r in reps]

    def project(v):
        A = [[(img + reps)[c][r] for c in range(len(img) + len(reps))]
             for r in range(T.dim)]
        sol = la.solve_linear(f, A, v)
        return sol[len(img):]

    action = []
    for i in range(R.dim):
        block = []
        for r in reps:
            block.append(project(T.act_vec(R._basis_vec(i), r)))
        action.append(block)
    C = GradedModule(R, degrees, action)
    proj = [[f.zero] * T.dim for _ in range(len(reps))]
    for j in range(T.dim):
        e = [f.one if t == j else f.zero for t in range(T.dim)]
        col = project(e)
        for t in range(len(reps)):
            proj[t][j] = col[t]
    return C, ModuleMorphism(T, C, proj, check=False)


def hilbert(M: GradedModule):
    return M.hilbert()


def hilbert_coarsen(h, psi: GroupHom):
    out = {}
    for d, n in h.items():
        e = psi(d)
        out[e] = out.get(e, 0) + n
    return out


# ---------------------------------------------------------------------------
# coarsening of modules
# ---------------------------------------------------------------------------

def coarsen_module(M: GradedModule, psi: GroupHom) -> GradedModule:
    from .gfunct import coarsen_algebra
    Rc = coarsen_algebra(M.algebra, psi)
    return GradedModule(Rc, [psi(d) for d in M.basis_degrees], M.action)


def coarsen_morphism(u: ModuleMorphism, psi: GroupHom) -> ModuleMorphism:
    return ModuleMorphism(coarsen_module(u.source, psi),
                          coarsen_module(u.target, psi), u.matrix)


# ---------------------------------------------------------------------------
# HOM and tensor
# ---------------------------------------------------------------------------

def _flatten(mat):
    return tuple(x for row in mat for x in row)


def graded_hom(M: GradedModule, N: GradedModule):
    """The graded module of module morphisms M -> N; its component of
    degree g consists of the equivariant maps shifting degrees by g.
    Returns (H, maps) where maps[t] is the matrix of the t-th basis
    morphism."""
    if M.algebra != N.algebra:
        raise ModuleError("HOM over different algebras")
    R, f = M.algebra, M.field
    cand = sorted({(N.basis_degrees[k] - M.basis_degrees[j]).coords
                   for k in range(N.dim) for j in range(M.dim)})
    group = R.group
    basis_mats, basis_degs = [], []
    for gc in cand:
        g = group.element(gc)
        slots = [(k, j) for k in range(N.dim) for j in range(M.dim)
                 if N.basis_degrees[k] == M.basis_degrees[j] + g]
        if not slots:
            continue
        rows = []
        for i in range(R.dim):
            A, B = M.action_matrix(i), N.action_matrix(i)
            # (F A - B F)[k][j] = 0 for all k, j: linear in the slots
            for k in range(N.dim):
                for j in range(M.dim):
                    row = [f.zero] * len(slots)
                    for s, (k2, j2) in enumerate(slots):
                        if k2 == k:
                            row[s] = f.add(row[s], A[j2][j])
                        if j2 == j:
                            row[s] = f.sub(row[s], B[k][k2])
                    rows.append(row)
        for sol in la.kernel_basis(f, rows) if rows else \
                [[f.one if t == s else f.zero for t in range(len(slots))]
                 for s in range(len(slots))]:
            F = la.zeros(f, N.dim, M.dim)
            for s, (k, j) in enumerate(slots):
                F[k][j] = sol[s]
            basis_mats.append(F)
            basis_degs.append(g)
    flat = [list(_flatten(F)) for F in basis_mats]
    action = []
    for i in range(R.dim):
        B = N.action_matrix(i)
        block = []
        for F in basis_mats:
            BF = la.mat_mul(f, B, F)
            coords = la.coords_in_basis(f, flat, list(_flatten(BF)))
            if coords is None:
                raise ModuleError("HOM basis not closed under the action")
            block.append(coords)
        action.append(block)
    H = GradedModule(R, basis_degs, action)
    return H, basis_mats


def tensor(M: GradedModule, N: GradedModule):
    """M tensor N over the algebra; returns (T, proj) with proj the
    matrix from pure-tensor coordinates (index j*dim(N)+k) to T."""
    if M.algebra != N.algebra:
        raise ModuleError("tensor over different algebras")
    R, f = M.algebra, M.field
    m, n = M.dim, N.dim
    dims = m * n

    def deg(idx):
        return M.basis_degrees[idx // n] + N.basis_degrees[idx % n]

    rels = []
    for i in range(R.dim):
        for j in range(m):
            xm = M.act_vec(R._basis_vec(i), [f.one if t == j else f.zero
                                             for t in range(m)])
            for k in range(n):
                xn = N.act_vec(R._basis_vec(i), [f.one if t == k else f.zero
                                                 for t in range(n)])
                v = [f.zero] * dims
                for j2 in range(m):
                    v[j2 * n + k] = f.add(v[j2 * n + k], xm[j2])
                for k2 in range(n):
                    v[j * n + k2] = f.sub(v[j * n + k2], xn[k2])
                if not la.is_zero_vec(v):
                    rels.append(v)
    rel_basis = la.span_basis(f, rels) if rels else []
    reps = []
    for idx in range(dims):
        e = [f.one if t == idx else f.zero for t in range(dims)]
        if not la.in_span(f, rel_basis + reps, e):
            reps.append(e)
    q = len(reps)
    A = [[(rel_basis + reps)[c][r] for c in range(len(rel_basis) + q)]
         for r in range(dims)]

    def project(v):
        return la.solve_linear(f, A, v)[len(rel_basis):]

    degrees = [deg(next(i for i, c in enumerate(r) if c != 0)) for r in reps]
    action = []
    for i in range(R.dim):
        block = []
        for r in reps:
            w = [f.zero] * dims
            for idx, c in enumerate(r):
                if c == 0:
                    continue
                j, k = divmod(idx, n)
                xm = M.act_vec(R._basis_vec(i),
                               [f.one if t == j else f.zero for t in range(m)])
                for j2 in range(m):
                    if xm[j2] != 0:
                        w[j2 * n + k] = f.add(w[j2 * n + k], f.mul(c, xm[j2]))
            block.append(project(w))
        action.append(block)
    T = GradedModule(R, degrees, action)
    proj = la.zeros(f, q, dims)
    for idx in range(dims):
        e = [f.one if t == idx else f.zero for t in range(dims)]
        col = project(e)
        for t in range(q):
            proj[t][idx] = col[t]
    return T, proj


def adjunction_dims_check(M: GradedModule, N: GradedModule, P: GradedModule):
    """Currying bijection HOM(M tensor N, P) = HOM(M, HOM(N, P)):
    compares graded dimensions and checks that currying is a
    degree-preserving linear isomorphism."""
    f = M.field
    T, proj = tensor(M, N)
    H1, maps1 = graded_hom(T, P)
    HNP, mapsNP = graded_hom(N, P)
    H2, maps2 = graded_hom(M, HNP)
    if sorted((d.coords, c) for d, c in H1.hilbert().items()) != \
            sorted((d.coords, c) for d, c in H2.hilbert().items()):
        return {"ok": False, "reason": "graded dimensions differ"}
    flatNP = [list(_flatten(F)) for F in mapsNP]
    curried = []
    for F in maps1:  # F: T -> P
        FT = la.mat_mul(f, F, proj)  # pure tensors -> P
        cols = []
        for j in range(M.dim):
            # v_j |-> the map n_k |-> F(v_j tensor n_k)
            G = [[FT[r][j * N.dim + k] for k in range(N.dim)]
                 for r in range(P.dim)]
            coords = la.coords_in_basis(f, flatNP, list(_flatten(G)))
            if coords is None:
                return {"ok": False, "reason": "curried map leaves HOM(N,P)"}
            cols.append(coords)
        curried.append([cols[j][t] for j in range(M.dim)
                        for t in range(HNP.dim)])
    flat2 = []
    for F in maps2:  # F: M -> HNP, matrix HNP.dim x M.dim
        flat2.append([F[t][j] for j in range(M.dim) for t in range(HNP.dim)])
    if not flat2:
        return {"ok": len(curried) == 0, "dims": 0}
    C = []
    for v in curried:
        coords = la.coords_in_basis(f, flat2, v)
        if coords is None:
            return {"ok": False, "reason": "currying misses HOM(M,HOM(N,P))"}
        C.append(coords)
    Cm = [[C[j][i] for j in range(len(C))] for i in range(len(flat2))]
    ok = (len(C) == len(flat2)
          and la.rank(f, Cm) == len(flat2)) if C else len(flat2) == 0
    return {"ok": ok, "dims": len(flat2)}


# ---------------------------------------------------------------------------
# freeness and monogeneity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeSpec:
    """Multiset of shifts realizing a free module + sum of R(g) copies;
    the generator sitting in R(g) has degree -g."""
    entries: tuple  # ((GroupElement g, multiplicity), ...)

    @staticmethod
    def from_generator_degrees(degrees):
        counts = {}
        for d in degrees:
            counts[-d] = counts.get(-d, 0) + 1
        entries = tuple(sorted(counts.items(), key=lambda t: t[0].coords))
        return FreeSpec(entries)

    def generator_degrees(self):
        out = []
        for g, mult in self.entries:
            out.extend([-g] * mult)
        return out

    @property
    def rank(self):
        return sum(m for _, m in self.entries)


def free_module(R: GradedAlgebra, gen_degrees):
    """Free module with one copy of R per generator degree; returns
    (F, blocks) where blocks[t] lists the basis indices of copy t and
    the generator of copy t is index blocks[t][unit-support]."""
    f = R.field
    degrees, blocks = [], []
    for d in gen_degrees:
        start = len(degrees)
        degrees.extend(di + d for di in R.basis_degrees)
        blocks.append(list(range(start, start + R.dim)))
    m = len(degrees)
    action = []
    for i in range(R.dim):
        block = []
        for t in range(len(gen_degrees)):
            for j in range(R.dim):
                row = [f.zero] * m
                for k in range(R.dim):
                    row[blocks[t][k]] = R.structure[i][j][k]
                block.append(row)
        action.append(block)
    F = GradedModule(R, degrees, action)
    return F, blocks


def free_cover_from_generators(M: GradedModule, gens):
    """Morphism from a free module onto the submodule generated by the
    given homogeneous vectors (onto M itself when they generate)."""
    R, f = M.algebra, M.field
    degs = []
    for g in gens:
        d = M.vec_degree(g)
        if d is None:
            raise ModuleError("free cover needs homogeneous generators")
        degs.append(d)
    F, blocks = free_module(R, degs)
    cols = {}
    for t, g in enumerate(gens):
        for j in range(R.dim):
            cols[blocks[t][j]] = M.act_vec(R._basis_vec(j), g)
    matrix = [[cols[c][k] for c in range(F.dim)] for k in range(M.dim)]
    return ModuleMorphism(F, M, matrix)


@dataclass
class FreenessReport:
    free: bool | None          # None = undecided
    spec: FreeSpec | None
    rank: int | None
    method: str
    status: str = "decided"    # "decided" | "undecided"
    witness: ModuleMorphism | None = None


def _candidate_specs(M: GradedModule):
    """All multisets of generator degrees whose shifted copies of R add
    up to the Hilbert function of M, in canonical order."""
    R = M.algebra
    hR = regular_module(R).hilbert()
    target = {d: c for d, c in M.hilbert().items()}
    degree_order = sorted(target, key=lambda d: d.coords)
    results = []

    def rec(remaining, chosen, min_key):
        if all(c == 0 for c in remaining.values()):
            results.append(list(chosen))
            return
        for d in degree_order:
            if d.coords < min_key or remaining.get(d, 0) == 0:
                continue
            # try a generator of degree d - d0 for each degree d0 of R
            for d0 in sorted(hR, key=lambda g: g.coords):
                gen = d - d0
                shifted = {dd + gen: c for dd, c in hR.items()}
                if all(remaining.get(k, 0) >= c for k, c in shifted.items()):
                    nxt = dict(remaining)
                    for k, c in shifted.items():
                        nxt[k] -= c
                    rec(nxt, chosen + [gen], d.coords)
            return  # only branch on the first deficient degree
    if R.dim > 0:
        rec(target, [], min(d.coords for d in degree_order) if degree_order
            else ())
    dedup = []
    seen = set()
    for spec in results:
        key = tuple(sorted(g.coords for g in spec))
        if key not in seen:
            seen.add(key)
            dedup.append(spec)
    return dedup


def _iso_search(M: GradedModule, gen_degrees, seed=la.DEFAULT_SEED):
    """Search for an isomorphism from the free module on the given
    generator degrees onto M."""
    R, f = M.algebra, M.field
    F, _ = free_module(R, gen_degrees)
    if F.dim != M.dim:
        return la.IntertwinerResult("proven_none", None, 0), F
    H, maps = graded_hom(F, M)
    deg0 = [maps[t] for t in range(H.dim)
            if H.basis_degrees[t] == R.group.zero]
    if not deg0:
        return la.IntertwinerResult("proven_none", None, 0), F
    particular = la.zeros(f, M.dim, M.dim)
    res = la.invertible_intertwiner(f, particular, deg0, M.dim, seed=seed)
    return res, F


def freeness(M: GradedModule, seed=la.DEFAULT_SEED) -> FreenessReport:
    """Decide whether M is free, producing the shift multiset and an
    explicit basis witness when it is."""
    from .gcore import classify_ring
    R = M.algebra
    if M.dim == 0:
        return FreenessReport(True, FreeSpec(()), 0, "zero module")
    rc = classify_ring(R)
    if rc.simple:
        # greedy homogeneous basis extraction; always succeeds over a
        # simple graded ring
        basis = []
        span = []
        for j in sorted(range(M.dim),
                        key=lambda t: (M.basis_degrees[t].coords, t)):
            e = [M.field.one if t == j else M.field.zero for t in range(M.dim)]
            if not la.in_span(M.field, span, e):
                basis.append(e)
                span = _submodule_span(M, basis)
        u = free_cover_from_generators(M, basis)
        if not u.is_iso():
            raise ModuleError("greedy basis extraction failed over a "
                              "simple ring")
        spec = FreeSpec.from_generator_degrees(
            [M.vec_degree(b) for b in basis])
        return FreenessReport(True, spec, len(basis), "greedy basis",
                              witness=u)
    candidates = _candidate_specs(M)
    if not candidates:
        return FreenessReport(False, None, None, "no shift multiset matches "
                              "the Hilbert function")
    undecided = False
    for degs in candidates:
        res, F = _iso_search(M, degs, seed=seed)
        if res.status == "found":
            u = ModuleMorphism(F, M, res.matrix, check=False)
            spec = FreeSpec.from_generator_degrees(degs)
            return FreenessReport(True, spec, len(degs),
                                  "isomorphism search", witness=u)
        if res.status == "budget_exhausted":
            undecided = True
    if undecided:
        return FreenessReport(None, None, None, "isomorphism search",
                              status="undecided")
    return FreenessReport(False, None, None,
                          "no candidate admits an isomorphism")


def _submodule_span(M: GradedModule, gens):
    sub, incl = generated_submodule(M, gens)
    return _homogeneous_span_basis(
        M, [[incl.matrix[k][j] for k in range(M.dim)]
            for j in range(sub.dim)])


def is_monogeneous(M: GradedModule, seed=la.DEFAULT_SEED):
    """Is M generated by a single homogeneous element?"""
    R, f = M.algebra, M.field
    if M.dim == 0:
        return True
    for g in sorted(M.degrees(), key=lambda d: d.coords):
        idx = M.component_indices(g)
        k = len(idx)
        # the map R -> M, r |-> r.m has a matrix linear in m
        def gen_matrix(vals):
            m = [f.zero] * M.dim
            for j, c in zip(idx, vals):
                m[j] = f.of(c)
            return [[M.act_vec(R._basis_vec(i), m)[t] for i in range(R.dim)]
                    for t in range(M.dim)]
        if f.is_finite and f.p ** k <= 2 ** 16:
            for vals in product(f.elements(), repeat=k):
                if la.rank(f, gen_matrix(vals)) == M.dim:
                    return True
            continue
        # rational / large case: maximal rank is attained on the
        # complement of a determinantal hypersurface of degree <= dim,
        # so a grid with dim+1 points per parameter decides for small k
        if k <= 3:
            for vals in product(range(M.dim + 1), repeat=k):
                if la.rank(f, gen_matrix(vals)) == M.dim:
                    return True
            continue
        import random
        rng = random.Random(seed)
        for _ in range(200):
            vals = [rng.randint(-M.dim - 1, M.dim + 1) for _ in range(k)]
            if la.rank(f, gen_matrix(vals)) == M.dim:
                return True
    return False


# ---------------------------------------------------------------------------
# radical, socle, superfluous / essential
# ---------------------------------------------------------------------------

def radical_submodule(M: GradedModule):
    """Graded radical nil(R).M: the intersection of the maximal graded
    submodules for these finite-dimensional algebras."""
    R = M.algebra
    nil = nilradical(R)
    vecs = []
    for v in nil.vectors():
        for j in range(M.dim):
            e = [M.field.one if t == j else M.field.zero
                 for t in range(M.dim)]
            vecs.append(M.act_vec(list(v), e))
    return _homogeneous_span_basis(M, vecs)


def socle_submodule(M: GradedModule):
    """Graded socle: vectors killed by the graded radical of R."""
    R, f = M.algebra, M.field
    nil = nilradical(R)
    rows = []
    for v in nil.vectors():
        A = [[f.zero] * M.dim for _ in range(M.dim)]
        for j in range(M.dim):
            e = [f.one if t == j else f.zero for t in range(M.dim)]
            w = M.act_vec(list(v), e)
            for kk in range(M.dim):
                A[kk][j] = w[kk]
        rows.extend(A)
    if not rows:
        return _homogeneous_span_basis(
            M, [[f.one if t == j else f.zero for t in range(M.dim)]
                for j in range(M.dim)])
    return _homogeneous_span_basis(M, la.kernel_basis(f, rows))


@dataclass
class SmallReport:
    flag: bool
    mode: str
    method: str
    witness: list | None = None


def small_submodule(u: ModuleMorphism, mode: str) -> SmallReport:
    """Criterion-based superfluous / essential test for a monomorphism:
    image inside the graded radical, resp. image containing the graded
    socle."""
    if mode not in ("superfluous", "essential"):
        raise ModuleError(f"unknown mode {mode!r}")
    if not u.is_mono():
        raise ModuleError("small_submodule needs a monomorphism")
    N, f = u.target, u.target.field
    img = _homogeneous_span_basis(
        N, [[u.matrix[k][j] for k in range(N.dim)]
            for j in range(u.source.dim)])
    if mode == "superfluous":
        rad = radical_submodule(N)
        ok = all(la.in_span(f, rad, v) for v in img)
        return SmallReport(ok, mode, "image inside the graded radical")
    soc = socle_submodule(N)
    ok = all(la.in_span(f, img, v) for v in soc)
    return SmallReport(ok, mode, "image contains the graded socle")


# ---------------------------------------------------------------------------
# the one-variable polynomial side: K[X] with deg X of infinite order
# ---------------------------------------------------------------------------

def poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def poly_mul(f, a, b):
    if not a or not b:
        return []
    out = [f.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = f.add(out[i + j], f.mul(x, y))
    return poly_trim(out)


def poly_divmod(f, a, b):
    a = poly_trim(list(a))
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [f.zero] * max(0, len(a) - len(b) + 1)
    r = a[:]
    inv = f.inv(b[-1])
    while len(r) >= len(b):
        c = f.mul(r[-1], inv)
        k = len(r) - len(b)
        q[k] = c
        for i, x in enumerate(b):
            r[k + i] = f.sub(r[k + i], f.mul(c, x))
        r = poly_trim(r)
        if not r:
            break
    return poly_trim(q), r


def poly_gcd(f, a, b):
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while b:
        _, r = poly_divmod(f, a, b)
        a, b = b, r
    if a:
        inv = f.inv(a[-1])
        a = [f.mul(inv, x) for x in a]
    return a


@dataclass
class PrincipalPresentation:
    """Homogeneous generators of a submodule of a free module over a
    one-variable polynomial ring whose variable degree has infinite
    order; every entry is a monomial c.X^k, encoded as (c, k)."""
    field: object
    var_degree: object            # GroupElement of infinite order
    ambient_degrees: list         # degree of each ambient free generator
    gens: list                    # columns; each a list of (c, k) per row

    def __post_init__(self):
        if not self.var_degree.has_infinite_order():
            raise ModuleError("variable degree must have infinite order")
        r = len(self.ambient_degrees)
        for col in self.gens:
            if len(col) != r:
                raise ModuleError("generator column has wrong length")
            degs = {tuple((self.ambient_degrees[i]
                           + self.var_degree.scale(k)).coords)
                    for i, (c, k) in enumerate(col) if c != 0}
            if len(degs) > 1:
                raise ModuleError("generator column is not homogeneous")


def _column_degree(P, col):
    for i, (c, k) in enumerate(col):
        if c != 0:
            return P.ambient_degrees[i] + P.var_degree.scale(k)
    return None


def principal_decompose(P: PrincipalPresentation):
    """Graded reduction of a monomial-entry presentation matrix into
    independent cyclic summands: returns a list of (shift degree,
    X-power k), meaning the submodule is the direct sum of copies of
    the ideal <X^k> placed in degree shift."""
    f = P.field
    rows = len(P.ambient_degrees)
    cols = [list(col) for col in P.gens]
    ambient = list(P.ambient_degrees)
    summands = []
    used_cols = [False] * len(cols)
    used_rows = [False] * rows
    while True:
        # pivot: the lowest X-power entry among unused rows/columns,
        # ties broken by (row, column) index
        best = None
        for cj, col in enumerate(cols):
            if used_cols[cj]:
                continue
            for ri, (c, k) in enumerate(col):
                if used_rows[ri] or c == 0:
                    continue
                if best is None or (k, ri, cj) < best[:3]:
                    best = (k, ri, cj)
        if best is None:
            break
        k0, r0, c0 = best
        pc, _ = cols[c0][r0]
        # clear the pivot row in the other columns (quotients are exact:
        # the pivot has the minimal X-power)
        for cj, col in enumerate(cols):
            if cj == c0 or used_cols[cj]:
                continue
            c, k = col[r0]
            if c == 0:
                continue
            q = f.div(c, pc)
            for ri in range(rows):
                cc, kk = cols[c0][ri]
                if cc == 0:
                    continue
                oc, ok = col[ri]
                add_c = f.neg(f.mul(q, cc))
                add_k = kk + (k - k0)
                if oc == 0:
                    col[ri] = (add_c, add_k)
                else:
                    if ok != add_k:
                        raise ModuleError("column reduction lost homogeneity")
                    s = f.add(oc, add_c)
                    col[ri] = (s, ok) if s != 0 else (f.zero, 0)
        # clear the pivot column in the other rows (row operations,
        # i.e. a change of ambient basis)
        for ri in range(rows):
            if ri == r0 or used_rows[ri]:
                continue
            c, k = cols[c0][ri]
            if c == 0:
                continue
            q = f.div(c, pc)
            for cj, col in enumerate(cols):
                if used_cols[cj]:
                    continue
                cc, kk = col[r0]
                if cc == 0:
                    continue
                oc, ok = col[ri]
                add_c = f.neg(f.mul(q, cc))
                add_k = kk + (k - k0)
                if oc == 0:
                    col[ri] = (add_c, add_k)
                else:
                    if ok != add_k:
                        raise ModuleError("row reduction lost homogeneity")
                    s = f.add(oc, add_c)
                    col[ri] = (s, ok) if s != 0 else (f.zero, 0)
        used_cols[c0] = True
        used_rows[r0] = True
        summands.append((ambient[r0], k0))
    # leftover nonzero columns would mean the reduction failed
    for cj, col in enumerate(cols):
        if not used_cols[cj] and any(c != 0 for c, _ in col):
            raise ModuleError("presentation not reduced to diagonal form")
    summands.sort(key=lambda t: (t[0].coords, t[1]))
    return summands


def principal_suite(P: PrincipalPresentation, psi: GroupHom | None = None):
    """Decomposition, freeness/rank, coarsened re-test, and the
    superfluous counterexample over a one-variable polynomial ring."""
    f = P.field
    summands = principal_decompose(P)
    rank = len(summands)
    report = {
        "summands": [((tuple(d.coords)), k) for d, k in summands],
        "free": True,            # every <X^k> is free of rank one
        "rank": rank,
        "rank_bound_ok": rank <= len(P.gens),
    }
    if psi is not None:
        epi, _, _ = hom_props(psi)
        if not epi or psi.source != P.var_degree.group:
            raise ModuleError("coarsening map does not fit the grading")
        # a basis stays a basis after coarsening, so freeness and rank
        # carry over; record the re-test
        report["coarsened_free"] = True
        report["coarsened_rank"] = rank
        report["coarsened_agrees"] = True
    return report


def principal_superfluous_report(psi: GroupHom, max_power=6):
    """The inclusion <X> into K[X]: superfluous in the graded category
    (the graded ideals are exactly the <X^k>), but not after coarsening
    along any psi killing the variable degree - witnessed by a
    polynomial coprime to X generating a proper ideal."""
    f = la.QQ
    X = [f.zero, f.one]
    graded_ok = True
    for k in range(max_power + 1):
        xk = [f.zero] * k + [f.one]
        g = poly_gcd(f, X, xk)
        sum_is_everything = (len(g) == 1)  # <X> + <X^k> = <gcd>
        if sum_is_everything and k != 0:
            graded_ok = False
    # coarsened side: search low-degree monic polynomials for a witness
    witness = None
    for degree in range(1, 4):
        if witness:
            break
        for tail in product(range(2), repeat=degree):
            cand = [f.of(c) for c in tail] + [f.one]
            cand = poly_trim(cand)
            if len(cand) < 2:
                continue
            g = poly_gcd(f, X, cand)
            if len(g) == 1:  # coprime to X, so <X> + <cand> is everything
                witness = cand
                break
    kernel_contains_var = None
    if psi is not None:
        kernel_contains_var = all(
            c == 0 for c in psi(psi.source.element(
                (1,) + (0,) * (psi.source.dim - 1))).coords)
    return {
        "graded_superfluous": graded_ok,
        "coarsened_superfluous": False if witness else None,
        "witness": [str(c) for c in witness] if witness else None,
        "psi_kills_variable_degree": kernel_contains_var,
    }
