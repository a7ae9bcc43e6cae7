import itertools
import random
from fractions import Fraction

import pytest

from trialg.catalog import a3_st, a3_t, c3, o3
from trialg.linalg import Matrix, unit_vector
from trialg.superlie import (
    GradedConjugation,
    GradedSuperAlgebra,
    L0Element,
    bracket_from_conjugation,
    check_generation,
    check_ideal_property,
    check_super_jacobi,
    lie_of,
    osp_model,
    sigma1,
    sigma2,
    sigma_osp,
    sl_model,
    superalgebra_isomorphism_on_grading,
    superalgebra_simplicity,
    check_transitivity,
    verify_conjugation,
)
from trialg.superlie import _block_map_sigma
from trialg.trisystem import SimplicityKind, left_op


ROUND_TRIP_SYSTEMS = [o3(), a3_t(2, 2), a3_t(1, 2), c3(1), a3_st(1, 1)]


def abelian(dims):
    return GradedSuperAlgebra("abelian", dims, {})


class TestSuperJacobi:
    def test_abelian_passes(self):
        assert check_super_jacobi(abelian({-1: 2, 0: 1, 1: 2})).passed

    def test_lie_of_passes(self):
        assert check_super_jacobi(lie_of(a3_t(2, 2)).algebra).passed

    def test_corrupted_constant_fails(self):
        g = lie_of(a3_t(2, 2)).algebra
        structure = {k: dict(v) for k, v in g.structure.items()}
        key = ((0, 0), (-1, 0))
        entry = dict(structure.get(key, {}))
        entry[(-1, 1)] = entry.get((-1, 1), Fraction(0)) + 1
        structure[key] = entry
        bad = GradedSuperAlgebra("bad", dict(g.components), structure, g.labels)
        report = check_super_jacobi(bad)
        assert not report.passed


class TestLieOf:
    def test_degenerate_input(self):
        lie = lie_of(a3_t(1, 1))
        assert lie.algebra.components == {-1: 1, 0: 0, 1: 1}
        assert lie.algebra.is_abelian()

    def test_l0_dimension_for_psl22(self):
        lie = lie_of(a3_t(2, 2))
        assert lie.algebra.components == {-1: 4, 0: 6, 1: 4}

    def test_phi_phi_brackets_vanish(self):
        g = lie_of(a3_t(2, 2)).algebra
        n = g.components[1]
        for i, j in itertools.product(range(n), repeat=2):
            assert g.bracket_basis((1, i), (1, j)) == {}
            assert g.bracket_basis((-1, i), (-1, j)) == {}

    def test_degree_zero_bracket_matches_displayed_relation(self):
        # [L_{x,y}, L_{x',y'}] = L_{[x,y,x'],y'} - L_{x',[y,x,y']} as action pairs
        system = a3_t(2, 2)
        rng = random.Random(41)
        for _ in range(6):
            i, j, k, l = (rng.randrange(4) for _ in range(4))
            x, y = unit_vector(4, i), unit_vector(4, j)
            xp, yp = unit_vector(4, k), unit_vector(4, l)
            a1, b1 = left_op(system, x, y), -left_op(system, y, x)
            a2, b2 = left_op(system, xp, yp), -left_op(system, yp, xp)
            comm_a = a1 * a2 - a2 * a1
            comm_b = b1 * b2 - b2 * b1
            t1 = system.bracket(x, y, xp)
            t2 = system.bracket(y, x, yp)
            want_a = left_op(system, t1, yp) - left_op(system, xp, t2)
            want_b = -left_op(system, yp, t1) + left_op(system, t2, xp)
            assert comm_a == want_a and comm_b == want_b

    def test_mixed_bracket_is_minus_left_pair(self):
        system = a3_t(1, 2)
        lie = lie_of(system)
        g = lie.algebra
        for i in range(2):
            for j in range(2):
                coords = lie.l0_coords[(i, j)]
                want = {(0, t): -c for t, c in enumerate(coords) if c}
                assert g.bracket_basis((-1, i), (1, j)) == want
                assert g.bracket_basis((1, j), (-1, i)) == want

    @pytest.mark.parametrize("system", ROUND_TRIP_SYSTEMS, ids=lambda s: s.name)
    def test_all_structural_checks(self, system):
        lie = lie_of(system)
        g = lie.algebra
        assert check_super_jacobi(g).passed
        assert verify_conjugation(g, lie.sigma).passed
        assert check_transitivity(g)
        assert check_generation(g)
        assert check_ideal_property(g)

    @pytest.mark.parametrize("system", ROUND_TRIP_SYSTEMS, ids=lambda s: s.name)
    def test_round_trip_exact(self, system):
        lie = lie_of(system)
        recovered = bracket_from_conjugation(lie.algebra, lie.sigma)
        assert recovered.tensor == system.tensor


class TestVerifyConjugation:
    def test_identity_fails_degree_reversal(self):
        lie = lie_of(a3_t(2, 2))
        g = lie.algebra
        bad = GradedConjugation(
            {-1: Matrix.zeros(4, 4), 0: Matrix.identity(6), 1: Matrix.zeros(4, 4)}
        )
        report = verify_conjugation(g, bad)
        assert not report.passed

    def test_flipped_sign_fails_square(self):
        lie = lie_of(a3_t(2, 2))
        maps = dict(lie.sigma.maps)
        maps[-1] = maps[-1].scale(-1)  # now sigma^2 = +1 on the outer parts
        report = verify_conjugation(lie.algebra, GradedConjugation(maps))
        assert not report.passed
        assert any(v.axiom == "square-sign" for v in report.violations)


class TestRemark24:
    def test_sigma_identity_on_l0_iff_totally_antisymmetric(self):
        lo = lie_of(o3())
        assert lo.sigma.maps[0] == Matrix.identity(lo.algebra.components[0])
        la = lie_of(a3_t(2, 2))
        assert la.sigma.maps[0] != Matrix.identity(la.algebra.components[0])


class TestStructuralChecks:
    def test_abelian_with_l0_fails_transitivity(self):
        g = abelian({-1: 1, 0: 1, 1: 1})
        assert not check_transitivity(g)

    def test_abelian_passes_generation_trivially_only_when_l0_zero(self):
        assert check_generation(abelian({-1: 2, 0: 0, 1: 2}))
        assert not check_generation(abelian({-1: 2, 0: 1, 1: 2}))

    def test_ideal_property_fails_for_abelian(self):
        assert not check_ideal_property(abelian({-1: 1, 0: 1, 1: 1}))


class TestSuperalgebraSimplicity:
    def test_lie_of_simple_system(self):
        result = superalgebra_simplicity(lie_of(a3_t(2, 2)).algebra)
        assert result.kind is SimplicityKind.SIMPLE

    def test_abelian_not_simple(self):
        result = superalgebra_simplicity(abelian({-1: 1, 0: 1, 1: 1}))
        assert result.kind is SimplicityKind.NOT_SIMPLE

    def test_degenerate_input(self):
        result = superalgebra_simplicity(lie_of(a3_t(1, 1)).algebra)
        assert result.kind is SimplicityKind.NOT_SIMPLE

    def test_direct_sum_keeps_ideal_property_but_loses_simplicity(self):
        from trialg.trisystem import direct_sum

        lie = lie_of(direct_sum(a3_t(1, 2), a3_t(1, 2)))
        g = lie.algebra
        # each basis seed closes inside its summand, which still meets both
        # outer components, but the summand itself is a proper ideal
        assert check_ideal_property(g)
        result = superalgebra_simplicity(g)
        assert result.kind is SimplicityKind.NOT_SIMPLE
        assert result.witness is not None and 0 < result.witness.dim < g.total_dim


class TestMatrixModels:
    def test_sl11_degenerate_quotient(self):
        model = sl_model(1, 1)
        assert model.algebra.components == {-1: 1, 0: 0, 1: 1}

    def test_sl22_jacobi(self):
        assert check_super_jacobi(sl_model(2, 2).algebra).passed

    def test_sl23_dimensions(self):
        g = sl_model(2, 3).algebra
        assert g.components == {-1: 6, 0: 12, 1: 6}
        assert check_super_jacobi(g).passed

    def test_osp_closure_and_jacobi(self):
        g = osp_model(1).algebra
        assert g.components == {-1: 2, 0: 4, 1: 2}
        assert check_super_jacobi(g).passed

    def test_osp2_jacobi(self):
        g = osp_model(2).algebra
        assert g.components == {-1: 4, 0: 11, 1: 4}
        assert check_super_jacobi(g).passed


class TestSigmas:
    def test_sigma1_verifies_on_sl23(self):
        model = sl_model(2, 3)
        assert verify_conjugation(model.algebra, sigma1(2, 3, model)).passed

    def test_sigma1_square_is_block_sign_flip(self):
        model = sl_model(2, 3)
        fn = _block_map_sigma(model.split, st_blocks=False)
        for d in (-1, 0, 1):
            for b in model.basis[d]:
                want = b if d == 0 else b.scale(-1)
                assert fn(fn(b)) == want

    def test_sigma2_verifies_on_psl22(self):
        model = sl_model(2, 2)
        assert verify_conjugation(model.algebra, sigma2(1, 1, model)).passed

    def test_sigma2_needs_even_blocks(self):
        with pytest.raises(ValueError):
            sigma2(1, 1, sl_model(2, 3))

    def test_sigma_osp_verifies(self):
        model = osp_model(1)
        assert verify_conjugation(model.algebra, sigma_osp(1, model)).passed

    def test_sigma1_recovers_transpose_family(self):
        model = sl_model(2, 3)
        recovered = bracket_from_conjugation(model.algebra, sigma1(2, 3, model))
        assert recovered.tensor == a3_t(2, 3).tensor

    def test_sigma2_recovers_symplectic_family(self):
        model = sl_model(2, 2)
        recovered = bracket_from_conjugation(model.algebra, sigma2(1, 1, model))
        assert recovered.tensor == a3_st(1, 1).tensor

    def test_sigma_osp_recovers_row_vector_family(self):
        model = osp_model(1)
        recovered = bracket_from_conjugation(model.algebra, sigma_osp(1, model))
        assert recovered.tensor == c3(1).tensor


class TestLieVersusModel:
    @pytest.mark.parametrize(
        "model,conj",
        [
            (sl_model(2, 3), lambda m: sigma1(2, 3, m)),
            (sl_model(2, 2), lambda m: sigma2(1, 1, m)),
            (osp_model(1), lambda m: sigma_osp(1, m)),
        ],
        ids=["sl23", "psl22", "osp22"],
    )
    def test_lie_of_recovered_is_isomorphic_to_model(self, model, conj):
        sigma = conj(model)
        recovered = bracket_from_conjugation(model.algebra, sigma)
        lie = lie_of(recovered)
        for d in (-1, 0, 1):
            assert lie.algebra.components[d] == model.algebra.components[d]
        # the degree 1 copy of the reconstruction corresponds to -sigma of the
        # degree -1 copy inside the model
        maps = superalgebra_isomorphism_on_grading(
            lie.algebra, model.algebra, outer_plus=sigma.maps[-1].scale(-1)
        )
        assert maps is not None


class TestL0Element:
    def test_flat_roundtrip(self):
        a = Matrix([[1, 0], [0, 2]])
        b = Matrix([[0, 1], [1, 0]])
        el = L0Element(a, b)
        assert el.flat() == a.flatten() + b.flatten()
