import itertools
from fractions import Fraction

import pytest

from trialg.catalog import a3_t, grassmann_n5
from trialg.linalg import Matrix
from trialg.n5 import (
    BilinearForm,
    check_invariant_form,
    n5_from_superalgebra,
    reconstruct_g,
    reduce_n6_to_n5,
)
from trialg.superlie import GradedSuperAlgebra, SuperAlgebra, check_super_jacobi, lie_of
from trialg.superpoly import SuperPoly, grassmann_universe, monomial_basis
from trialg.trisystem import TriAlgebra, check_n5


def grassmann_poisson_superalgebra(k):
    """The rank-2k Grassmann algebra with the degree -2 Poisson bracket
    {a,b} = (-1)^p(a) sum_i da/dx_i db/dx_i, split into parity components."""
    n = 2 * k
    u = grassmann_universe(n)
    subsets = [key[1] for key in monomial_basis(u, n)]
    even_sets = [s for s in subsets if len(s) % 2 == 0]
    odd_sets = [s for s in subsets if len(s) % 2 == 1]
    index = {}
    for i, s in enumerate(even_sets):
        index[s] = (0, i)
    for i, s in enumerate(odd_sets):
        index[s] = (1, i)

    def mono(s):
        return SuperPoly.monomial(u, ((), s))

    def signed_bracket(a, s_parity, b):
        out = SuperPoly.zero(u)
        for name in u.odd:
            out = out + a.derive(name) * b.derive(name)
        return out.scale(-1 if s_parity else 1)

    structure = {}
    for s1 in subsets:
        for s2 in subsets:
            val = signed_bracket(mono(s1), len(s1) % 2, mono(s2))
            entry = {index[odd]: c for (_e, odd), c in val.terms.items()}
            if entry:
                structure[(index[s1], index[s2])] = entry
    return SuperAlgebra(f"H({n})", len(even_sets), len(odd_sets), structure)


class TestN5FromSuperalgebra:
    def test_abelian_odd_part(self):
        g = GradedSuperAlgebra("abelian", {-1: 2, 0: 0, 1: 2}, {})
        sys_ = n5_from_superalgebra(g)
        assert sys_.dim == 4 and sys_.is_zero_bracket()
        assert check_n5(sys_).passed

    def test_odd_part_of_lie(self):
        sys_ = n5_from_superalgebra(lie_of(a3_t(2, 2)).algebra)
        assert sys_.dim == 8
        assert check_n5(sys_).passed

    def test_grassmann_poisson_superalgebra_is_super_lie(self):
        for k in (1, 2):
            assert check_super_jacobi(grassmann_poisson_superalgebra(k)).passed

    def test_matches_grassmann_system_for_k1(self):
        built = n5_from_superalgebra(grassmann_poisson_superalgebra(1))
        system, _ = grassmann_n5(1)
        assert built.tensor == system.tensor == {}

    def test_k2_differs_only_by_a_global_sign(self):
        # the packaged bracket omits the parity sign of the Poisson bracket;
        # on the odd part that flips every structure constant, which both
        # axiom sets tolerate
        built = n5_from_superalgebra(grassmann_poisson_superalgebra(2))
        system, _ = grassmann_n5(2)
        negated = {k: {l: -c for l, c in v.items()} for k, v in system.tensor.items()}
        assert built.tensor == negated
        assert check_n5(built).passed

    def test_rejects_non_jacobi_input(self):
        bad = SuperAlgebra(
            "bad",
            1,
            1,
            {
                ((1, 0), (1, 0)): {(0, 0): Fraction(1)},
                ((0, 0), (1, 0)): {(1, 0): Fraction(1)},
                ((1, 0), (0, 0)): {(1, 0): Fraction(-1)},
            },
        )
        with pytest.raises(ValueError):
            n5_from_superalgebra(bad)


class TestReconstruction:
    def test_zero_bracket_gives_abelian(self):
        zero = TriAlgebra("zero", 2, {})
        g = reconstruct_g(zero)
        assert g.dims == {0: 0, 1: 2}
        assert g.is_abelian()

    @pytest.mark.parametrize("k", [1, 2])
    def test_round_trip_exact(self, k):
        system, _ = grassmann_n5(k)
        g = reconstruct_g(system)
        assert check_super_jacobi(g).passed
        assert n5_from_superalgebra(g).tensor == system.tensor

    def test_round_trip_on_reduction(self):
        reduced = reduce_n6_to_n5(a3_t(1, 2))
        g = reconstruct_g(reduced)
        assert check_super_jacobi(g).passed
        assert n5_from_superalgebra(g).tensor == reduced.tensor

    def test_rejects_non_n5_input(self):
        from trialg.catalog import o3

        with pytest.raises(ValueError):
            reconstruct_g(o3())


class TestInvariantForm:
    def test_zero_bracket_any_skew_form(self):
        zero = TriAlgebra("zero", 2, {})
        form = BilinearForm(Matrix([[0, 5], [-5, 0]]))
        assert check_invariant_form(zero, form).passed

    @pytest.mark.parametrize("k", [1, 2])
    def test_grassmann_form_is_invariant(self, k):
        system, form = grassmann_n5(k)
        assert check_invariant_form(system, form).passed

    def test_generic_skew_form_fails(self):
        system, _ = grassmann_n5(2)
        rows = [[Fraction(0)] * 8 for _ in range(8)]
        rows[0][1], rows[1][0] = Fraction(1), Fraction(-1)
        report = check_invariant_form(system, BilinearForm(Matrix(rows)))
        assert not report.passed

    def test_form_must_be_skew(self):
        with pytest.raises(ValueError):
            BilinearForm(Matrix.identity(2))

    def test_dimension_mismatch(self):
        system, _ = grassmann_n5(1)
        with pytest.raises(ValueError):
            check_invariant_form(system, BilinearForm(Matrix.zeros(4, 4)))


class TestReduction:
    def test_zero_input(self):
        reduced = reduce_n6_to_n5(TriAlgebra("zero", 2, {}))
        assert reduced.dim == 4 and reduced.is_zero_bracket()

    def test_dimension_doubles(self):
        assert reduce_n6_to_n5(a3_t(1, 2)).dim == 4

    def test_same_summand_brackets_vanish(self):
        reduced = reduce_n6_to_n5(a3_t(2, 2))
        n = 4
        for a, b, c in itertools.product(range(2 * n), repeat=3):
            if (a < n) == (b < n):
                assert reduced.bracket_basis(a, b, c) == {}

    def test_reduction_passes_n5(self):
        assert check_n5(reduce_n6_to_n5(a3_t(2, 2))).passed

    def test_matches_odd_part_of_lie(self):
        system = a3_t(2, 2)
        reduced = reduce_n6_to_n5(system)
        odd = n5_from_superalgebra(lie_of(system).algebra)
        assert reduced.tensor == odd.tensor

    def test_rejects_non_n6_input(self):
        bad = TriAlgebra("bad", 1, {(0, 0, 0): {0: Fraction(1)}})
        with pytest.raises(ValueError):
            reduce_n6_to_n5(bad)
