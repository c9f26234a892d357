import pytest
from hypothesis import given, settings, strategies as st

import gradex.abgroups as ag
from gradex.exactla import QQ, det


small_matrices = st.lists(
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
    min_size=1, max_size=4).filter(
        lambda rows: len({len(r) for r in rows}) == 1)


class TestSmithNormalForm:
    @given(small_matrices)
    @settings(max_examples=150, deadline=None)
    def test_factorization_and_divisibility(self, A):
        U, D, V = ag.smith_normal_form(A)
        assert ag.mat_mul(ag.mat_mul(U, A), V) == D
        diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
        for i in range(len(diag) - 1):
            if diag[i + 1] != 0:
                assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
        assert all(d >= 0 for d in diag)
        for i in range(len(D)):
            for j in range(len(D[0])):
                if i != j:
                    assert D[i][j] == 0

    def test_worked_examples(self):
        _, D, _ = ag.smith_normal_form([[2, 4], [6, 8]])
        assert [D[0][0], D[1][1]] == [2, 4]
        _, D, _ = ag.smith_normal_form([[2, 0], [0, 3]])
        assert [D[0][0], D[1][1]] == [1, 6]
        _, D, _ = ag.smith_normal_form([[0]])
        assert D == [[0]]

    @given(small_matrices)
    @settings(max_examples=80, deadline=None)
    def test_unimodular_transforms(self, A):
        U, D, V = ag.smith_normal_form(A)
        assert abs(det(QQ, U)) == 1
        assert abs(det(QQ, V)) == 1


class TestGroups:
    def test_invariant_factor_normalization(self):
        G, proj, lift = ag.FGAbelianGroup.from_presentation(
            2, [(2, 0), (0, 3)])
        assert G.free_rank == 0 and G.torsion_factors == (6,)
        # the canonical form must be a divisibility chain with factors >= 2
        for i in range(1, len(G.torsion_factors)):
            assert G.torsion_factors[i] % G.torsion_factors[i - 1] == 0

    def test_element_reduction(self):
        G = ag.Zmod(4)
        e = G.element((7,))
        assert e.coords == (3,)
        assert (e + e).coords == (2,)
        assert (-e).coords == (1,)

    def test_mixed_group_order(self):
        G = ag.FGAbelianGroup(1, (2, 4))
        assert G.order is None  # infinite
        H = ag.Zmod(2, 4)
        assert H.order == 8
        assert len(list(H.elements())) == 8

    def test_infinite_order(self):
        G = ag.FGAbelianGroup(1, (2,))
        assert G.element((1, 0)).has_infinite_order()
        assert not G.element((0, 1)).has_infinite_order()


class TestHoms:
    def test_well_definedness_rejected(self):
        with pytest.raises(ag.GroupError):
            ag.GroupHom(ag.Zmod(2), ag.Z(1), [[1]])

    def test_kernel_examples(self):
        K, incl, tf, finite, order = ag.kernel_data(
            ag.GroupHom(ag.Z(1), ag.Zmod(2), [[1]]))
        assert K.free_rank == 1 and K.torsion_factors == ()
        assert tf and not finite
        K, _, tf, finite, order = ag.kernel_data(
            ag.GroupHom(ag.Zmod(4), ag.Zmod(2), [[1]]))
        assert K.torsion_factors == (2,) and finite and order == 2
        assert not tf
        K, incl, tf, _, _ = ag.kernel_data(
            ag.GroupHom(ag.Z(2), ag.Z(1), [[1, 0]]))
        assert K.free_rank == 1 and tf
        # inclusion actually lands in the kernel
        h = ag.GroupHom(ag.Z(2), ag.Z(1), [[1, 0]])
        for c in [(1,), (2,), (-1,)]:
            img = h(incl(K.element(c)))
            assert img.is_zero

    def test_hom_props(self):
        epi, mono, iso = ag.hom_props(ag.GroupHom(ag.Z(1), ag.Zmod(2), [[1]]))
        assert epi and not mono and not iso
        epi, mono, iso = ag.hom_props(ag.GroupHom(ag.Z(1), ag.Z(1), [[2]]))
        assert not epi and mono and not iso
        epi, mono, iso = ag.hom_props(ag.GroupHom(ag.Z(1), ag.Z(1), [[-1]]))
        assert epi and mono and iso

    def test_preimage_under_mono(self):
        phi = ag.GroupHom(ag.Z(1), ag.Z(1), [[2]])
        assert phi.preimage(ag.Z(1).element((4,))).coords == (2,)
        assert phi.preimage(ag.Z(1).element((3,))) is None

    def test_fiber_filter(self):
        psi = ag.GroupHom(ag.Z(1), ag.Zmod(2), [[1]])
        degs = [ag.Z(1).element((k,)) for k in range(-2, 3)]
        fib = ag.fiber_filter(psi, degs, ag.Zmod(2).element((1,)))
        assert [d.coords for d in fib] == [(-1,), (1,)]
        with pytest.raises(ag.GroupError):
            ag.fiber_filter(ag.GroupHom(ag.Z(1), ag.Z(1), [[2]]), degs,
                            ag.Z(1).element((0,)))

    def test_compose(self):
        psi = ag.GroupHom(ag.Z(1), ag.Zmod(4), [[1]])
        pi = ag.GroupHom(ag.Zmod(4), ag.Zmod(2), [[1]])
        comp = pi.compose(psi)
        assert comp(ag.Z(1).element((3,))).coords == (1,)
