"""Coarsening along an epimorphism and the restriction / extension /
corestriction triple along a monomorphism, with executable adjunction
checks at desk scale.

Functors act on values: each function takes a ring (or module, or
morphism) and a group map and returns the regraded object, re-verifying
all construction invariants on the way out.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .abgroups import GroupHom, GroupError, hom_props
from . import exactla as la
from .gcore import (GradedAlgebra, GradedIdeal, MonoidAlgebra, AlgebraError,
                    SizeGuardExceeded, ideal_from_gens, quotient_ring,
                    classify_element)


class FunctorError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graded ring morphisms
# ---------------------------------------------------------------------------

class AlgebraMorphism:
    """Degree-preserving unital ring morphism between graded algebras
    over the same grading group, as a matrix on basis coordinates."""

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra, matrix,
                 check=True):
        self.source = source
        self.target = target
        f = target.field
        self.matrix = [[f.of(x) for x in row] for row in matrix]
        if len(self.matrix) != target.dim or any(
                len(r) != source.dim for r in self.matrix):
            raise FunctorError("morphism matrix has wrong shape")
        if check:
            self._check()

    def _check(self):
        A, B = self.source, self.target
        if A.group != B.group:
            raise FunctorError("morphism between different grading groups")
        f = B.field
        for j in range(A.dim):
            img = self.apply_vec(A._basis_vec(j))
            if not B.element(img).is_homogeneous_of(A.basis_degrees[j]):
                raise FunctorError(f"image of basis vector {j} is not "
                                   f"homogeneous of its degree")
        if self.apply_vec(list(A.unit)) != list(B.unit):
            raise FunctorError("morphism does not preserve the unit")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.apply_vec(A._raw_mul(A._basis_vec(i), A._basis_vec(j)))
                rhs = B._raw_mul(self.apply_vec(A._basis_vec(i)),
                                 self.apply_vec(A._basis_vec(j)))
                if lhs != rhs:
                    raise FunctorError("morphism is not multiplicative")

    def apply_vec(self, v):
        return la.mat_vec_mul(self.target.field, self.matrix, v)

    def __call__(self, x):
        return self.target.element(self.apply_vec(list(x.coords)))

    def compose(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """self o other."""
        M = la.mat_mul(self.target.field, self.matrix, other.matrix)
        return AlgebraMorphism(other.source, self.target, M, check=False)

    def is_identity_matrix(self):
        n = self.source.dim
        if self.target.dim != n:
            return False
        return self.matrix == la.eye(self.target.field, n)


def identity_morphism(R):
    return AlgebraMorphism(R, R, la.eye(R.field, R.dim), check=False)


# ---------------------------------------------------------------------------
# coarsening
# ---------------------------------------------------------------------------

def _require_epi(psi, group):
    if psi.source != group:
        raise FunctorError("grading group does not match the epimorphism source")
    epi, _, _ = hom_props(psi)
    if not epi:
        raise FunctorError("coarsening requires an epimorphism")


def coarsen_algebra(R: GradedAlgebra, psi: GroupHom) -> GradedAlgebra:
    """Same underlying algebra, degrees pushed through psi."""
    _require_epi(psi, R.group)
    degrees = [psi(d) for d in R.basis_degrees]
    return GradedAlgebra(psi.target, R.field, degrees, R.structure, R.unit)


def coarsen(X, psi):
    """Coarsen an algebra, module or morphism along psi."""
    if isinstance(X, GradedAlgebra):
        return coarsen_algebra(X, psi)
    if isinstance(X, AlgebraMorphism):
        return AlgebraMorphism(coarsen_algebra(X.source, psi),
                               coarsen_algebra(X.target, psi), X.matrix)
    from . import gmod
    if isinstance(X, gmod.GradedModule):
        return gmod.coarsen_module(X, psi)
    if isinstance(X, gmod.ModuleMorphism):
        return gmod.coarsen_morphism(X, psi)
    raise FunctorError(f"cannot coarsen {type(X).__name__}")


def coarsen_ideal(R: GradedAlgebra, a: GradedIdeal, psi: GroupHom):
    Rc = coarsen_algebra(R, psi)
    return Rc, GradedIdeal(Rc, [list(v) for v in a.vectors()])


# ---------------------------------------------------------------------------
# restriction / extension / corestriction
# ---------------------------------------------------------------------------

def _require_mono(phi):
    _, mono, _ = hom_props(phi)
    if not mono:
        raise FunctorError("restriction requires a monomorphism")


def degree_preimage(phi: GroupHom, d):
    """The unique f with phi(f) = d, or None (phi a monomorphism)."""
    return phi.preimage(d)


def restrict_with_indices(R: GradedAlgebra, phi: GroupHom):
    """(restricted algebra over the source of phi, kept basis indices)."""
    _require_mono(phi)
    if phi.target != R.group:
        raise FunctorError("phi does not land in the grading group")
    kept = []
    new_degrees = []
    for i, d in enumerate(R.basis_degrees):
        f = degree_preimage(phi, d)
        if f is not None:
            kept.append(i)
            new_degrees.append(f)
    fld = R.field
    n = len(kept)
    structure = [[[R.structure[kept[i]][kept[j]][kept[k]] for k in range(n)]
                  for j in range(n)] for i in range(n)]
    unit = [R.unit[i] for i in kept]
    S = GradedAlgebra(phi.source, fld, new_degrees, structure, unit)
    return S, kept


def restrict(R: GradedAlgebra, phi: GroupHom) -> GradedAlgebra:
    return restrict_with_indices(R, phi)[0]


def extend(S: GradedAlgebra, phi: GroupHom) -> GradedAlgebra:
    """Relabel degrees through phi; underlying algebra unchanged."""
    _require_mono(phi)
    if phi.source != S.group:
        raise FunctorError("phi does not start at the grading group")
    degrees = [phi(d) for d in S.basis_degrees]
    return GradedAlgebra(phi.target, S.field, degrees, S.structure, S.unit)


@dataclass
class CorestrictionResult:
    algebra: GradedAlgebra          # R_((phi)), graded by the source of phi
    ideal: GradedIdeal              # a_phi(R)
    quotient: GradedAlgebra         # R / a_phi(R), still G-graded
    alpha: AlgebraMorphism          # R ->> R / a_phi(R)
    kept: list                      # quotient basis indices surviving restriction
    proj: list                      # projection matrix R -> quotient
    lift: list                      # section quotient -> R


def corestrict(R: GradedAlgebra, phi: GroupHom) -> CorestrictionResult:
    """Quotient by the ideal generated by components outside im(phi),
    then restrict."""
    _require_mono(phi)
    outside = [R.basis_element(i) for i, d in enumerate(R.basis_degrees)
               if degree_preimage(phi, d) is None]
    a_phi = ideal_from_gens(R, outside)
    Q, proj, lift = quotient_ring(R, a_phi)
    alpha = AlgebraMorphism(R, Q, proj)
    Rcor, kept = restrict_with_indices(Q, phi)
    return CorestrictionResult(Rcor, a_phi, Q, alpha, kept, proj, lift)


def restrict_morphism(h: AlgebraMorphism, phi: GroupHom) -> AlgebraMorphism:
    S1, kept1 = restrict_with_indices(h.source, phi)
    S2, kept2 = restrict_with_indices(h.target, phi)
    M = [[h.matrix[i][j] for j in kept1] for i in kept2]
    return AlgebraMorphism(S1, S2, M)


def extend_morphism(h: AlgebraMorphism, phi: GroupHom) -> AlgebraMorphism:
    return AlgebraMorphism(extend(h.source, phi), extend(h.target, phi),
                           h.matrix)


def corestrict_morphism(h: AlgebraMorphism, phi: GroupHom,
                        cor_src: CorestrictionResult | None = None,
                        cor_tgt: CorestrictionResult | None = None):
    """Induced morphism on corestrictions (h maps a_phi into a_phi)."""
    cs = cor_src or corestrict(h.source, phi)
    ct = cor_tgt or corestrict(h.target, phi)
    f = h.target.field
    cols = []
    for j in cs.kept:
        v = [cs.lift[i][j] for i in range(h.source.dim)]
        img = h.apply_vec(v)
        q = la.mat_vec_mul(f, ct.proj, img)
        cols.append([q[i] for i in ct.kept])
    M = [[cols[j][i] for j in range(len(cs.kept))] for i in range(len(ct.kept))]
    return AlgebraMorphism(cs.algebra, ct.algebra, M)


# ---------------------------------------------------------------------------
# morphism enumeration over finite fields
# ---------------------------------------------------------------------------

MORPHISM_ENUM_LIMIT = 2 ** 20


def enumerate_ring_morphisms(A: GradedAlgebra, B: GradedAlgebra):
    """All graded ring morphisms A -> B over a finite field, canonically
    ordered by matrix entries."""
    if A.group != B.group:
        raise FunctorError("morphisms need a common grading group")
    f = B.field
    if not f.is_finite:
        raise AlgebraError("morphism enumeration needs a finite field")
    slots = []
    for j in range(A.dim):
        d = A.basis_degrees[j]
        for i in range(B.dim):
            if B.basis_degrees[i] == d:
                slots.append((i, j))
    if f.p ** len(slots) > MORPHISM_ENUM_LIMIT:
        raise SizeGuardExceeded("morphism search space too large")
    out = []
    for vals in product(f.elements(), repeat=len(slots)):
        M = la.zeros(f, B.dim, A.dim)
        for (i, j), v in zip(slots, vals):
            M[i][j] = v
        try:
            out.append(AlgebraMorphism(A, B, M))
        except FunctorError:
            continue
    return out


# ---------------------------------------------------------------------------
# adjunction checks
# ---------------------------------------------------------------------------

def triangle_identities(phi: GroupHom, g_samples, f_samples):
    """Verify the four triangle identities of the corestriction -|
    extension -| restriction triple on the given finite-dimensional
    samples.  Returns a list of (label, ok) pairs."""
    results = []
    for R in g_samples:
        cor = corestrict(R, phi)
        # left triangle of (corestriction, extension): corestricting the
        # unit R ->> (R_((phi)))^(phi) must give the identity of R_((phi))
        ext_cor = extend(cor.algebra, phi)
        alpha_m = AlgebraMorphism(R, ext_cor,
                                  [cor.proj[k] for k in cor.kept])
        induced = corestrict_morphism(alpha_m, phi, cor_src=cor)
        results.append((f"C-E unit triangle on {R!r}",
                        induced.is_identity_matrix()))
        # left triangle of (extension, restriction): restricting the
        # counit (R_(phi))^(phi) -> R gives the identity of R_(phi)
        Rst, kept = restrict_with_indices(R, phi)
        incl = la.zeros(R.field, R.dim, len(kept))
        for col, i in enumerate(kept):
            incl[i][col] = R.field.one
        incl_m = AlgebraMorphism(extend(Rst, phi), R, incl)
        results.append((f"E-R counit triangle on {R!r}",
                        restrict_morphism(incl_m, phi).is_identity_matrix()))
    for S in f_samples:
        ES = extend(S, phi)
        # unit of (corestriction, extension) on an extended ring is the
        # identity: a_phi(S^(phi)) = 0
        cor = corestrict(ES, phi)
        ok = (cor.ideal.dim == 0 and cor.algebra.dim == S.dim
              and cor.algebra.basis_degrees == S.basis_degrees)
        results.append((f"unit on extension of {S!r}", ok))
        # unit of (extension, restriction) is the identity on the nose
        Rst_ES, kept = restrict_with_indices(ES, phi)
        results.append((f"E-R unit on {S!r}",
                        Rst_ES.basis_degrees == S.basis_degrees
                        and kept == list(range(S.dim))))
    return results


def hom_bijection_check(phi: GroupHom, R: GradedAlgebra, S: GradedAlgebra):
    """Over a finite field: verify |Hom(R_((phi)), S)| = |Hom(R, S^(phi))|
    and |Hom(S, R_(phi))| = |Hom(S^(phi), R)| by full enumeration, with
    the adjunction transposes as explicit bijections.

    R is G-graded, S is F-graded."""
    cor = corestrict(R, phi)
    ES = extend(S, phi)
    left = enumerate_ring_morphisms(cor.algebra, S)
    right = enumerate_ring_morphisms(R, ES)
    # transpose f: R_((phi)) -> S to E(f) o alpha: R -> S^(phi)
    transposed = []
    for h in left:
        ext_h = AlgebraMorphism(extend(cor.algebra, phi), ES, h.matrix)
        alpha_m = AlgebraMorphism(R, extend(cor.algebra, phi),
                                  [cor.proj[k] for k in cor.kept])
        transposed.append(tuple(map(tuple, ext_h.compose(alpha_m).matrix)))
    first_ok = (len(left) == len(right)
                and set(transposed) == {tuple(map(tuple, h.matrix)) for h in right}
                and len(set(transposed)) == len(left))
    # second adjunction: Hom(S, R_(phi)) vs Hom(S^(phi), R)
    Rst, kept = restrict_with_indices(R, phi)
    left2 = enumerate_ring_morphisms(ES, R)
    right2 = enumerate_ring_morphisms(S, Rst)
    transposed2 = []
    for h in left2:
        M = [[h.matrix[i][j] for j in range(S.dim)] for i in kept]
        transposed2.append(tuple(map(tuple,
                                     AlgebraMorphism(S, Rst, M).matrix)))
    second_ok = (len(left2) == len(right2)
                 and set(transposed2) == {tuple(map(tuple, h.matrix))
                                          for h in right2}
                 and len(set(transposed2)) == len(left2))
    return {"corestriction-extension": first_ok,
            "extension-restriction": second_ok,
            "hom_counts": (len(left), len(right), len(left2), len(right2))}


def laurent_tensor_witness(kmax=5):
    """Degree-0 dimension growth of (K[Z] tensor K[Z])_(0) versus the
    one-dimensional K[Z]_(0) tensor K[Z]_(0).

    The instance is reconstructed from the evident Laurent-algebra
    reading of the underlying argument; the report flags this."""
    monomials = [(k, -k) for k in range(-kmax, kmax + 1)]
    return {
        "tensor_degree0_monomials": monomials,
        "tensor_degree0_dim_lower_bound": len(monomials),
        "restricted_tensor_degree0_dim": 1,
        "mismatch": len(monomials) > 1,
        "reconstructed_instance": True,
    }


def adjunction_check(phi: GroupHom, f_samples, g_samples,
                     finite_field_pairs=(), tensor_witness_k=5):
    """Full adjoint-triple report: triangle identities on every sample,
    Hom-set bijections on the given (R, S) pairs over finite fields, and
    the tensor-product obstruction witness."""
    report = {
        "triangles": triangle_identities(phi, g_samples, f_samples),
        "hom_bijections": [hom_bijection_check(phi, R, S)
                           for R, S in finite_field_pairs],
        "tensor_witness": laurent_tensor_witness(tensor_witness_k),
    }
    report["ok"] = (all(ok for _, ok in report["triangles"])
                    and all(h["corestriction-extension"]
                            and h["extension-restriction"]
                            for h in report["hom_bijections"])
                    and report["tensor_witness"]["mismatch"])
    return report


# ---------------------------------------------------------------------------
# monoid-algebra corestriction shortcuts
# ---------------------------------------------------------------------------

def monoid_corestriction_report(MA: MonoidAlgebra, phi: GroupHom, bound=8):
    """Shortcut predicates for corestriction of a monoid algebra:
    zero when a homogeneous unit has degree outside im(phi); equal to the
    plain restriction when the bounded degree-support criterion holds."""
    _require_mono(phi)
    G = MA.grading_group()
    if phi.target != G:
        raise FunctorError("phi does not match the monoid algebra grading")
    # shortcut a): an invertible monomial with degree outside im(phi)
    for m in MA.monoid.generators:
        if MA.monoid.is_invertible(m) is True:
            d = MA.monomial_degree(m)
            if degree_preimage(phi, d) is None:
                return {"result": "zero", "witness_exponent": m,
                        "witness_degree": tuple(d.coords)}
    # shortcut b): bounded degree-support criterion
    degs = set()
    frontier = {MA.monoid.zero}
    seen = {MA.monoid.zero}
    for _ in range(bound):
        new = set()
        for m in frontier:
            for g in MA.monoid.generators:
                n = tuple(a + b for a, b in zip(m, g))
                if n not in seen:
                    seen.add(n)
                    new.add(n)
        frontier = new
    base_degs = MA.base.degrees()
    for m in seen:
        for g in base_degs:
            degs.add(MA.monomial_degree(m, g))
    outside = sorted((d for d in degs if degree_preimage(phi, d) is None),
                     key=lambda d: d.coords)
    for d1 in outside:
        for d2 in outside:
            s = d1 + d2
            if s in degs and degree_preimage(phi, s) is not None:
                return {"result": "differs", "witness_degrees":
                        (tuple(d1.coords), tuple(d2.coords))}
    return {"result": "equals_restriction", "bound": bound,
            "degrees_checked": len(degs)}
