"""Homological machinery over finite-dimensional graded algebras:
graded duals, projective / injective / flat tests, free resolutions and
betti tables, the explicit Schanuel isomorphism, and dimension reports
that survive coarsening.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroups import GroupHom, hom_props, kernel_data
from . import exactla as la
from .gcore import GradedAlgebra
from . import gmod as gm
from .gmod import (GradedModule, ModuleMorphism, FreeSpec, regular_module,
                   free_module, free_cover_from_generators, direct_sum,
                   kernel, cokernel, radical_submodule, ModuleError,
                   hilbert_coarsen, coarsen_module)


# ---------------------------------------------------------------------------
# graded dual
# ---------------------------------------------------------------------------

def dual(M: GradedModule) -> GradedModule:
    """Scalar dual with degrees negated; (x.f)(v) = f(x.v), so the
    action tensor has its last two indices swapped.  dual(dual(M)) is M
    on the nose, the evaluation map being the identity matrix."""
    R = M.algebra
    action = [[[M.action[i][k][j] for k in range(M.dim)]
               for j in range(M.dim)] for i in range(R.dim)]
    return GradedModule(R, [-d for d in M.basis_degrees], action)


def dual_morphism(u: ModuleMorphism) -> ModuleMorphism:
    """Transpose: dual(target) -> dual(source)."""
    T = [[u.matrix[k][j] for k in range(u.target.dim)]
         for j in range(u.source.dim)]
    return ModuleMorphism(dual(u.target), dual(u.source), T)


def injective_cogenerator(R: GradedAlgebra) -> GradedModule:
    """E = dual(R): injective, and a cogenerator on the
    finite-dimensional modules."""
    return dual(regular_module(R))


def duality_involution_check(M: GradedModule):
    """dual(dual(M)) equals M and the evaluation map is the identity."""
    DD = dual(dual(M))
    return DD == M


def mono_epi_duality_check(u: ModuleMorphism):
    """u is mono iff dual(u) is epi, and vice versa."""
    du = dual_morphism(u)
    return u.is_mono() == du.is_epi() and u.is_epi() == du.is_mono()


# ---------------------------------------------------------------------------
# lifting, splitting, projectivity
# ---------------------------------------------------------------------------

def lift_through_epi(p: ModuleMorphism, v: ModuleMorphism):
    """A morphism t with p o t = v (same target), or None.  Sought in
    the degree-zero part of the graded Hom space."""
    if p.target.dim != v.target.dim or p.target != v.target:
        raise ModuleError("lift needs a common target")
    f = p.target.field
    H, maps = gm.graded_hom(v.source, p.source)
    zero = p.source.algebra.group.zero
    deg0 = [maps[t] for t in range(H.dim) if H.basis_degrees[t] == zero]
    if not deg0 and v.source.dim > 0:
        return None
    # solve sum c_t (p o h_t) = v entrywise
    rows, rhs = [], []
    composites = [la.mat_mul(f, p.matrix, h) for h in deg0]
    for k in range(v.target.dim):
        for j in range(v.source.dim):
            rows.append([c[k][j] for c in composites])
            rhs.append(v.matrix[k][j])
    sol = la.solve_linear(f, rows, rhs) if rows else []
    if sol is None:
        return None
    t = la.zeros(f, p.source.dim, v.source.dim)
    for c, h in zip(sol, deg0):
        for k in range(p.source.dim):
            for j in range(v.source.dim):
                t[k][j] = f.add(t[k][j], f.mul(c, h[k][j]))
    return ModuleMorphism(v.source, p.source, t)


def minimal_generators(M: GradedModule):
    """Homogeneous lifts of a basis of M modulo its graded radical,
    chosen in degree order then index order."""
    f = M.field
    rad = radical_submodule(M)
    chosen = []
    span = list(rad)
    for j in sorted(range(M.dim), key=lambda t: (M.basis_degrees[t].coords, t)):
        e = [f.one if t == j else f.zero for t in range(M.dim)]
        if not la.in_span(f, span, e):
            chosen.append(e)
            # redundancy is modulo the submodule generated so far, not
            # just its linear span: a generator may span several basis
            # vectors through unit multiples
            span = rad + gm._submodule_span(M, chosen)
    return chosen


def minimal_cover(M: GradedModule) -> ModuleMorphism:
    return free_cover_from_generators(M, minimal_generators(M))


def is_projective(M: GradedModule) -> bool:
    """Does the free cover split?"""
    if M.dim == 0:
        return True
    p = minimal_cover(M)
    return lift_through_epi(p, gm.identity_module_morphism(M)) is not None


def is_injective(M: GradedModule) -> bool:
    return is_projective(dual(M))


def is_flat(M: GradedModule) -> bool:
    """For finitely generated modules over these finite-dimensional
    algebras, flat coincides with projective; the Lambek cross-check
    below keeps this shortcut honest."""
    return is_projective(M)


def lambek_check(M: GradedModule):
    """is_flat(M) must equal is_injective(HOM(M, E)) with E = dual(R)."""
    E = injective_cogenerator(M.algebra)
    H, _ = gm.graded_hom(M, E)
    return is_flat(M) == is_injective(H)


def cogenerator_faithfulness_check(M: GradedModule):
    """HOM(-, E) kills no nonzero module."""
    E = injective_cogenerator(M.algebra)
    H, _ = gm.graded_hom(M, E)
    return (M.dim == 0) == (H.dim == 0)


# ---------------------------------------------------------------------------
# free resolutions
# ---------------------------------------------------------------------------

@dataclass
class FreeResolution:
    target: GradedModule
    covers: list            # covers[i]: F_i ->> K_i  (K_0 = target)
    incls: list             # incls[i]: K_{i+1} -> F_i
    cutoff: int
    minimal: bool
    terminated: bool        # the last kernel is zero

    @property
    def length(self):
        return len(self.covers)

    def step_spec(self, i) -> FreeSpec:
        F = self.covers[i].source
        # the cover places one block of algebra.dim basis vectors per
        # generator, each shifted by the generator degree
        R = self.target.algebra
        degs = [F.basis_degrees[t] - R.basis_degrees[0]
                for t in range(0, F.dim, max(R.dim, 1))]
        return FreeSpec.from_generator_degrees(degs)

    def step_matrix(self, i):
        """Matrix F_i -> F_{i-1} (or F_0 -> target for i = 0)."""
        if i == 0:
            return self.covers[0].matrix
        comp = self.incls[i - 1].compose(self.covers[i])
        return comp.matrix

    def betti(self):
        out = []
        for i in range(self.length):
            spec = self.step_spec(i)
            table = {}
            for d in spec.generator_degrees():
                key = tuple(d.coords)
                table[key] = table.get(key, 0) + 1
            out.append(table)
        return out

    def verify(self):
        """Composites vanish and ranks account for every kernel."""
        f = self.target.field
        for i in range(1, self.length):
            prev = self.step_matrix(i - 1)
            cur = self.step_matrix(i)
            prod = la.mat_mul(f, prev, cur)
            if any(x != 0 for row in prod for x in row):
                return False
        for i in range(self.length):
            Fi = self.covers[i].source
            Ki = self.covers[i].target
            ker_dim = (self.incls[i].source.dim if i < len(self.incls)
                       else Fi.dim - Ki.dim)
            if la.rank(f, self.covers[i].matrix) != Ki.dim:
                return False
            if i < len(self.incls) and Fi.dim - Ki.dim != ker_dim:
                return False
        if self.minimal:
            for i in range(1, self.length):
                Fprev = self.covers[i - 1].source
                rad = radical_submodule(Fprev)
                cols = self.step_matrix(i)
                for j in range(self.covers[i].source.dim):
                    col = [cols[k][j] for k in range(Fprev.dim)]
                    if not la.in_span(f, rad, col):
                        return False
        return True


def resolution(M: GradedModule, cutoff=8, minimal=True) -> FreeResolution:
    if cutoff > 32:
        raise ModuleError("resolution cutoff limited to 32")
    covers, incls = [], []
    K = M
    terminated = M.dim == 0
    for _ in range(cutoff + 1):
        if K.dim == 0:
            terminated = True
            break
        if minimal:
            p = minimal_cover(K)
        else:
            gens = [[K.field.one if t == j else K.field.zero
                     for t in range(K.dim)] for j in range(K.dim)]
            p = free_cover_from_generators(K, gens)
        covers.append(p)
        Knext, incl = kernel(p)
        incls.append(incl)
        K = Knext
    terminated = terminated or K.dim == 0
    return FreeResolution(M, covers, incls, cutoff, minimal, terminated)


# ---------------------------------------------------------------------------
# Schanuel
# ---------------------------------------------------------------------------

def _coords_in_inclusion(incl: ModuleMorphism, v):
    """Coordinates of an ambient vector in the source of an inclusion."""
    f = incl.target.field
    cols = [[incl.matrix[k][j] for k in range(incl.target.dim)]
            for j in range(incl.source.dim)]
    return la.coords_in_basis(f, cols, v)


def _schanuel_base(M, coverA, inclA, coverB, inclB):
    """One-step Schanuel: from two epimorphisms alpha: P0 ->> M and
    beta: Q0 ->> M with kernels K, L, build the fibre product and the
    isomorphism K + Q0 = L + P0.  Returns (theta, lhs_data, rhs_data)
    where the data triples are (module, first injection, second
    injection)."""
    f = M.field
    P0, Q0 = coverA.source, coverB.source
    K, L = inclA.source, inclB.source
    D, jP, jQ = direct_sum(P0, Q0)
    fib_matrix = [[f.zero] * D.dim for _ in range(M.dim)]
    for k in range(M.dim):
        for j in range(P0.dim):
            fib_matrix[k][j] = coverA.matrix[k][j]
        for j in range(Q0.dim):
            fib_matrix[k][P0.dim + j] = f.neg(coverB.matrix[k][j])
    diff = ModuleMorphism(D, M, fib_matrix)
    Rmod, rincl = kernel(diff)

    # sections of the two projections, via lifts through the epis
    tQ = lift_through_epi(coverA, coverB)   # tQ: Q0 -> P0, alpha tQ = beta
    tP = lift_through_epi(coverB, coverA)   # tP: P0 -> Q0, beta tP = alpha
    if tQ is None or tP is None:
        raise ModuleError("free cover failed to lift through an epimorphism")

    def into_R(vecD):
        c = _coords_in_inclusion(rincl, vecD)
        if c is None:
            raise ModuleError("vector escapes the fibre product")
        return c

    lhsD, jK, jQ0 = direct_sum(K, Q0)
    cols = []
    for j in range(K.dim):
        e = [f.one if t == j else f.zero for t in range(K.dim)]
        vecP = la.mat_vec_mul(f, inclA.matrix, e)
        cols.append(into_R(la.mat_vec_mul(f, jP.matrix, vecP)))
    for j in range(Q0.dim):
        e = [f.one if t == j else f.zero for t in range(Q0.dim)]
        vecP = la.mat_vec_mul(f, tQ.matrix, e)
        vecD = la.vec_add(f, la.mat_vec_mul(f, jP.matrix, vecP),
                          la.mat_vec_mul(f, jQ.matrix, e))
        cols.append(into_R(vecD))
    psi1 = ModuleMorphism(lhsD, Rmod,
                          [[cols[j][k] for j in range(lhsD.dim)]
                           for k in range(Rmod.dim)])

    rhsD, jL, jP0 = direct_sum(L, P0)
    cols = []
    for j in range(L.dim):
        e = [f.one if t == j else f.zero for t in range(L.dim)]
        vecQ = la.mat_vec_mul(f, inclB.matrix, e)
        cols.append(into_R(la.mat_vec_mul(f, jQ.matrix, vecQ)))
    for j in range(P0.dim):
        e = [f.one if t == j else f.zero for t in range(P0.dim)]
        vecQ = la.mat_vec_mul(f, tP.matrix, e)
        vecD = la.vec_add(f, la.mat_vec_mul(f, jP.matrix, e),
                          la.mat_vec_mul(f, jQ.matrix, vecQ))
        cols.append(into_R(vecD))
    psi2 = ModuleMorphism(rhsD, Rmod,
                          [[cols[j][k] for j in range(rhsD.dim)]
                           for k in range(Rmod.dim)])
    if not psi1.is_iso() or not psi2.is_iso():
        raise ModuleError("fibre-product comparison maps are not invertible")
    inv2 = la.mat_inverse(f, psi2.matrix)
    theta = ModuleMorphism(lhsD, rhsD, la.mat_mul(f, inv2, psi1.matrix))
    return theta, (lhsD, jK, jQ0), (rhsD, jL, jP0)


def schanuel_glue(res1: FreeResolution, res2: FreeResolution, n: int):
    """Explicit isomorphism K + Q_{n-1} + P_{n-2} + ... =
    L + P_{n-1} + Q_{n-2} + ... between the n-th kernels of two free
    resolutions of the same module, built by fibre products exactly as
    in the inductive proof.  Returns (iso, verified)."""
    if res1.target != res2.target:
        raise ModuleError("resolutions do not resolve the same module")
    if res1.length < n or res2.length < n:
        raise ModuleError("resolutions shorter than the glue length")
    coversA = res1.covers[:n]
    inclsA = res1.incls[:n]
    coversB = res2.covers[:n]
    inclsB = res2.incls[:n]
    iso = _schanuel_rec(res1.target, coversA, inclsA, coversB, inclsB)
    lhs_h = sorted((tuple(d.coords), c)
                   for d, c in iso.source.hilbert().items())
    rhs_h = sorted((tuple(d.coords), c)
                   for d, c in iso.target.hilbert().items())
    verified = iso.is_iso() and lhs_h == rhs_h
    return iso, verified


def _schanuel_rec(M, coversA, inclsA, coversB, inclsB):
    f = M.field
    theta, (lhs, jK1, jQ0), (rhs, jL1, jP0) = _schanuel_base(
        M, coversA[0], inclsA[0], coversB[0], inclsB[0])
    if len(coversA) == 1:
        return theta
    # padded resolutions of M' = K1 + Q0:
    #   P1 + Q0 ->> K1 + Q0        with kernel K2 inside P1
    #   Q1 + P0 ->> L1 + P0 -theta^{-1}-> K1 + Q0   with kernel L2
    P1 = coversA[1].source
    Q0 = coversB[0].source
    FA, jP1, jQ0f = direct_sum(P1, Q0)
    augA_matrix = [[f.zero] * FA.dim for _ in range(lhs.dim)]
    c1 = la.mat_mul(f, jK1.matrix, coversA[1].matrix)
    for k in range(lhs.dim):
        for j in range(P1.dim):
            augA_matrix[k][j] = c1[k][j]
        for j in range(Q0.dim):
            augA_matrix[k][P1.dim + j] = jQ0.matrix[k][j]
    augA = ModuleMorphism(FA, lhs, augA_matrix)
    inclA2 = ModuleMorphism(inclsA[1].source, FA,
                            la.mat_mul(f, jP1.matrix, inclsA[1].matrix))

    Q1 = coversB[1].source
    P0 = coversA[0].source
    FB, jQ1, jP0f = direct_sum(Q1, P0)
    augB_matrix = [[f.zero] * FB.dim for _ in range(rhs.dim)]
    e1 = la.mat_mul(f, jL1.matrix, coversB[1].matrix)
    for k in range(rhs.dim):
        for j in range(Q1.dim):
            augB_matrix[k][j] = e1[k][j]
        for j in range(P0.dim):
            augB_matrix[k][Q1.dim + j] = jP0.matrix[k][j]
    inv_theta = la.mat_inverse(f, theta.matrix)
    augB = ModuleMorphism(FB, lhs,
                          la.mat_mul(f, inv_theta, augB_matrix))
    inclB2 = ModuleMorphism(inclsB[1].source, FB,
                            la.mat_mul(f, jQ1.matrix, inclsB[1].matrix))

    return _schanuel_rec(lhs,
                         [augA] + coversA[2:], [inclA2] + inclsA[2:],
                         [augB] + coversB[2:], [inclB2] + inclsB[2:])


# ---------------------------------------------------------------------------
# dimension reports
# ---------------------------------------------------------------------------

@dataclass
class DimensionReport:
    kind: str               # "projective" | "injective" | "flat"
    value: int | None       # None encodes the lower bound ">= cutoff"
    cutoff: int

    @property
    def display(self):
        return str(self.value) if self.value is not None else \
            f">={self.cutoff}"

    def __eq__(self, other):
        return (isinstance(other, DimensionReport)
                and self.kind == other.kind and self.value == other.value
                and self.cutoff == other.cutoff)


def dimension(M: GradedModule, kind="projective", cutoff=8) -> DimensionReport:
    """Projective / flat dimension by resolving and testing kernels;
    injective dimension through the dual."""
    if kind == "injective":
        rep = dimension(dual(M), "projective", cutoff)
        return DimensionReport("injective", rep.value, cutoff)
    if kind not in ("projective", "flat"):
        raise ModuleError(f"unknown dimension kind {kind!r}")
    test = is_projective if kind == "projective" else is_flat
    K = M
    for n in range(cutoff + 1):
        if test(K):
            return DimensionReport(kind, n, cutoff)
        p = minimal_cover(K)
        K, _ = kernel(p)
    return DimensionReport(kind, None, cutoff)


def injective_dimension_direct(M: GradedModule, cutoff=8) -> DimensionReport:
    """Cross-check: build the injective resolution with copies of
    dual(free) directly instead of dualizing."""
    K = M
    f = M.field
    for n in range(cutoff + 1):
        if is_injective(K):
            return DimensionReport("injective", n, cutoff)
        p = minimal_cover(dual(K))
        # dualize: K = dual(dual(K)) embeds into dual(F), an injective
        emb = ModuleMorphism(K, dual(p.source),
                             [[p.matrix[k][j] for k in range(p.target.dim)]
                              for j in range(p.source.dim)])
        K, _ = cokernel(emb)
    return DimensionReport("injective", None, cutoff)


def lambek_dimension_check(M: GradedModule, cutoff=8):
    """id(HOM(M, E)) <= fd(M), compared as cutoff-bounded reports."""
    E = injective_cogenerator(M.algebra)
    H, _ = gm.graded_hom(M, E)
    idh = dimension(H, "injective", cutoff)
    fdm = dimension(M, "flat", cutoff)
    if fdm.value is None:
        return True
    return idh.value is not None and idh.value <= fdm.value


def coarsen_dimension_compare(M: GradedModule, psi: GroupHom, cutoff=6):
    """pd / fd (and id when ker(psi) is finite) must agree between M
    and its coarsening, along with the pushed-forward betti tables."""
    epi, _, _ = hom_props(psi)
    if not epi:
        raise ModuleError("dimension comparison needs an epimorphism")
    Mc = coarsen_module(M, psi)
    report = {}
    for kind in ("projective", "flat"):
        a = dimension(M, kind, cutoff)
        b = dimension(Mc, kind, cutoff)
        report[kind] = {"fine": a.display, "coarse": b.display,
                        "equal": a.value == b.value}
    _, _, _, finite, _ = kernel_data(psi)
    if finite:
        a = dimension(M, "injective", cutoff)
        b = dimension(Mc, "injective", cutoff)
        report["injective"] = {"fine": a.display, "coarse": b.display,
                               "equal": a.value == b.value}
    else:
        report["injective"] = {
            "skipped": "kernel of the coarsening map is infinite"}
    res = resolution(M, cutoff)
    resc = resolution(Mc, cutoff)
    fine_betti = []
    for i, table in enumerate(res.betti()):
        pushed = {}
        for key, c in table.items():
            e = tuple(psi(M.algebra.group.element(key)).coords)
            pushed[e] = pushed.get(e, 0) + c
        fine_betti.append(pushed)
    coarse_betti = resc.betti()
    report["betti_equal"] = fine_betti == coarse_betti
    report["betti"] = coarse_betti
    report["ok"] = (report["betti_equal"]
                    and all(v.get("equal", True) for v in report.values()
                            if isinstance(v, dict)))
    return report
