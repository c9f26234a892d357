import pytest

import gradex.gcore as gc
import gradex.gmod as gm
import gradex.oracles as orc
import gradex.samples as S
from gradex.exactla import GF


def quotient_by_x(R):
    M = gm.regular_module(R)
    gen = [0] * R.dim
    gen[1] = 1
    _, incl = gm.generated_submodule(M, [gen])
    return gm.cokernel(incl)


class TestExhaustiveClassify:
    def test_dual_numbers_f2(self):
        R = S.dual_numbers(GF(2))
        table = {r["element"]: r for r in orc.exhaustive_classify(R)}
        assert len(table) == 4
        assert table[(0, 1)] == {"element": (0, 1), "unit": False,
                                 "regular": False, "nilpotent": True}
        assert table[(1, 0)]["unit"] and not table[(1, 0)]["nilpotent"]
        assert table[(1, 1)]["unit"]  # 1 + x is invertible
        assert table[(0, 0)]["nilpotent"]

    def test_group_algebra_f2_z2(self):
        R = S.group_algebra(2, 2)
        table = {r["element"]: r for r in orc.exhaustive_classify(R)}
        assert table[(0, 1)]["unit"]
        assert table[(1, 1)]["nilpotent"] and not table[(1, 1)]["unit"]

    def test_unit_count_of_truncated_f3(self):
        R = S.truncated_polynomial_algebra(GF(3), 2)
        units = sum(r["unit"] for r in orc.exhaustive_classify(R))
        assert units == 6  # (a + bx) invertible iff a != 0


class TestRingClassConcordance:
    def test_spot_checks(self):
        flags = orc.oracle_ring_class(S.group_algebra(2, 2))
        assert flags == {"simple": True, "entire": True, "reduced": True}
        flags = orc.oracle_ring_class(S.dual_numbers(GF(2)))
        assert flags == {"simple": False, "entire": False, "reduced": False}

    def test_full_corpus(self):
        for R in S.finite_corpus():
            rc = gc.classify_ring(R)
            flags = orc.oracle_ring_class(R)
            assert rc.simple == flags["simple"], R
            assert rc.entire == flags["entire"], R
            assert rc.reduced == flags["reduced"], R


class TestSubmoduleEnumeration:
    def test_chain_ring(self):
        # graded submodules of F2[X]/(X^4) are exactly the <X^k>
        R = S.truncated_polynomial_algebra(GF(2), 4)
        subs = orc.enumerate_graded_substructures(gm.regular_module(R))
        assert len(subs) == 5
        dims = sorted(len(s) for s in subs)
        assert dims == [0, 1, 2, 3, 4]

    def test_group_algebra_is_gr_simple(self):
        R = S.group_algebra(2, 2)
        subs = orc.enumerate_graded_substructures(gm.regular_module(R))
        assert len(subs) == 2  # only 0 and the whole module

    def test_radical_and_socle_appear(self):
        import gradex.exactla as la
        R = S.truncated_polynomial_algebra(GF(2), 3)
        M = gm.regular_module(R)
        subs = orc.enumerate_graded_substructures(M)
        rad = gm.radical_submodule(M)
        soc = gm.socle_submodule(M)
        for target in (rad, soc):
            canon = tuple(tuple(r) for r in orc._eliminate(M.field,
                                                           list(target)))
            assert any(tuple(tuple(r) for r in orc._eliminate(
                M.field, [list(v) for v in s])) == canon for s in subs)


class TestMorphismEnumeration:
    def test_endomorphisms_of_quotient(self):
        R = S.dual_numbers(GF(2))
        K, _ = quotient_by_x(R)
        assert len(orc.enumerate_morphisms(K, K)) == 2  # 0 and identity

    def test_hom_counts_match_graded_hom(self):
        R = S.truncated_polynomial_algebra(GF(2), 3)
        M = gm.regular_module(R)
        K, _ = quotient_by_x(R)
        for A, B in [(M, M), (M, K), (K, M), (K, K)]:
            H, _ = gm.graded_hom(A, B)
            deg0 = sum(1 for d in H.basis_degrees
                       if d == R.group.zero)
            assert len(orc.enumerate_morphisms(A, B)) == 2 ** deg0, (A, B)

    def test_guard(self):
        R = S.truncated_polynomial_algebra(GF(5), 2)
        F, _ = gm.free_module(R, [R.group.zero] * 5)
        with pytest.raises(gc.SizeGuardExceeded):
            orc.enumerate_morphisms(F, F)


class TestSmallSubmoduleOracle:
    def test_concordance_on_chain_ring(self):
        R = S.truncated_polynomial_algebra(GF(2), 4)
        M = gm.regular_module(R)
        for j in range(1, 4):
            gen = [0] * 4
            gen[j] = 1
            _, incl = gm.generated_submodule(M, [gen])
            for mode in ("superfluous", "essential"):
                flag, witness = orc.oracle_small_submodule(incl, mode)
                rep = gm.small_submodule(incl, mode)
                assert flag == rep.flag, (j, mode)
                if not flag:
                    assert witness is not None

    def test_negative_cases(self):
        R = S.truncated_polynomial_algebra(GF(2), 3)
        M = gm.regular_module(R)
        ident = gm.identity_module_morphism(M)
        flag, witness = orc.oracle_small_submodule(ident, "superfluous")
        assert flag is False and witness is not None
        Z = gm.zero_module(R)
        zmap = gm.ModuleMorphism(Z, M, [[] for _ in range(M.dim)])
        flag, witness = orc.oracle_small_submodule(zmap, "essential")
        assert flag is False and witness is not None

    def test_concordance_over_f3(self):
        R = S.truncated_polynomial_algebra(GF(3), 2)
        M = gm.regular_module(R)
        gen = [0, 1]
        _, incl = gm.generated_submodule(M, [gen])
        for mode in ("superfluous", "essential"):
            flag, _ = orc.oracle_small_submodule(incl, mode)
            assert flag == gm.small_submodule(incl, mode).flag
