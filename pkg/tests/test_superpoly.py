import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trialg.linalg import Matrix
from trialg.superpoly import (
    LinearChange,
    SuperPoly,
    Universe,
    check_form_condition,
    default_poisson_involution,
    grassmann_universe,
    hodge_dual,
    monomial_basis,
    poisson,
    poisson_universe,
)

U = Universe(even=("x",), odd=("a", "b", "c"))


def var(name, universe=U):
    return SuperPoly.variable(universe, name)


class TestProduct:
    def test_odd_anticommute(self):
        a, b = var("a"), var("b")
        assert a * b == -(b * a)
        assert (a * b).terms == {((0,), (0, 1)): Fraction(1)}

    def test_odd_square_is_zero(self):
        a = var("a")
        assert (a * a).is_zero()

    def test_even_arithmetic(self):
        x = var("x")
        one = SuperPoly.constant(U, 1)
        assert (x + one) * (x - one) == x * x - one

    def test_universe_mismatch(self):
        other = Universe(even=("y",))
        with pytest.raises(ValueError):
            var("x") * SuperPoly.variable(other, "y")


# random parity-homogeneous monomials over U
def _monomials_of_parity(parity):
    keys = [k for k in monomial_basis(U, 3) if len(k[1]) % 2 == parity]
    return st.sampled_from(keys)


@settings(max_examples=60, deadline=None)
@given(_monomials_of_parity(0) | _monomials_of_parity(1), _monomials_of_parity(0) | _monomials_of_parity(1))
def test_super_commutativity(k1, k2):
    f = SuperPoly.monomial(U, k1)
    g = SuperPoly.monomial(U, k2)
    sign = -1 if (len(k1[1]) % 2 and len(k2[1]) % 2) else 1
    assert f * g == (g * f).scale(sign)


@settings(max_examples=40, deadline=None)
@given(
    _monomials_of_parity(0) | _monomials_of_parity(1),
    _monomials_of_parity(0) | _monomials_of_parity(1),
    _monomials_of_parity(0) | _monomials_of_parity(1),
)
def test_product_is_associative(k1, k2, k3):
    f, g, h = (SuperPoly.monomial(U, k) for k in (k1, k2, k3))
    assert (f * g) * h == f * (g * h)


@settings(max_examples=60, deadline=None)
@given(_monomials_of_parity(0) | _monomials_of_parity(1), _monomials_of_parity(0) | _monomials_of_parity(1))
def test_super_leibniz(k1, k2):
    f = SuperPoly.monomial(U, k1)
    g = SuperPoly.monomial(U, k2)
    sign = -1 if len(k1[1]) % 2 else 1
    lhs = (f * g).derive("a")
    rhs = f.derive("a") * g + (f * g.derive("a")).scale(sign)
    assert lhs == rhs


class TestDerive:
    def test_leading_odd(self):
        ab = var("a") * var("b")
        assert ab.derive("a") == var("b")

    def test_second_odd_picks_up_sign(self):
        ab = var("a") * var("b")
        assert ab.derive("b") == -var("a")

    def test_even_power(self):
        x = var("x")
        cube = x * x * x
        assert cube.derive("x") == (x * x).scale(3)

    def test_unknown_variable(self):
        with pytest.raises(KeyError):
            var("x").derive("zz")


class TestSubstitute:
    def test_even_square_under_negation(self):
        u = Universe(even=("x",))
        x = SuperPoly.variable(u, "x")
        neg = LinearChange(u, even_matrix=Matrix([[-1]]))
        assert (x * x).substitute(neg) == x * x

    def test_symmetric_monomial_under_swap(self):
        u = Universe(even=("x1", "x2"))
        x1, x2 = (SuperPoly.variable(u, n) for n in ("x1", "x2"))
        swap = LinearChange(u, even_matrix=Matrix([[0, 1], [1, 0]]))
        assert (x1 * x2).substitute(swap) == x1 * x2

    def test_relabeling(self):
        u = poisson_universe(2)
        p1, q1 = (SuperPoly.variable(u, n) for n in ("p1", "q1"))
        swap = default_poisson_involution(2)
        assert (p1 * q1 * q1).substitute(swap) == q1 * p1 * p1

    def test_involution_is_involutive_on_many_monomials(self):
        u = poisson_universe(3)
        change = default_poisson_involution(3)
        rng = random.Random(23)
        keys = monomial_basis(u, 5)
        for key in rng.sample(keys, 50):
            f = SuperPoly.monomial(u, key, coeff=rng.randint(1, 5))
            assert f.substitute(change).substitute(change) == f

    def test_multiplicative(self):
        u = poisson_universe(2)
        change = default_poisson_involution(2)
        p1, q1 = (SuperPoly.variable(u, n) for n in ("p1", "q1"))
        f, g = p1 + q1, p1 * q1 + q1
        assert (f * g).substitute(change) == f.substitute(change) * g.substitute(change)


class TestPoisson:
    def test_canonical_pair(self):
        u = poisson_universe(2)
        p1, q1 = (SuperPoly.variable(u, n) for n in ("p1", "q1"))
        assert poisson(p1, q1, 2) == SuperPoly.constant(u, 1)

    def test_antisymmetry_forces_zero(self):
        u = poisson_universe(1)
        t = SuperPoly.variable(u, "t")
        assert poisson(t, t, 1).is_zero()

    def test_t_against_p(self):
        # (2-E)(t) d(p1)/dt - dt/dt (2-E)(p1) = 0 - (2 p1 - p1) = -p1
        u = poisson_universe(3)
        t, p1 = (SuperPoly.variable(u, n) for n in ("t", "p1"))
        assert poisson(t, p1, 3) == -p1

    def test_constants_are_not_central_in_odd_rank(self):
        u = poisson_universe(1)
        t = SuperPoly.variable(u, "t")
        one = SuperPoly.constant(u, 1)
        assert poisson(t, one, 1) == SuperPoly.constant(u, -2)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_bilinear_antisymmetric(self, m):
        u = poisson_universe(m)
        keys = monomial_basis(u, 2)
        rng = random.Random(m)
        for _ in range(20):
            f = SuperPoly.monomial(u, rng.choice(keys))
            g = SuperPoly.monomial(u, rng.choice(keys))
            assert poisson(f, g, m) == -poisson(g, f, m)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_jacobi_on_low_degree_monomials(self, m):
        u = poisson_universe(m)
        keys = monomial_basis(u, 3)
        if m < 3:
            triples = list(itertools.product(keys, repeat=3))
        else:
            rng = random.Random(100 + m)
            triples = [tuple(rng.choice(keys) for _ in range(3)) for _ in range(60)]
            triples += list(itertools.product(monomial_basis(u, 1), repeat=3))
        for ka, kb, kc in triples:
            a, b, c = (SuperPoly.monomial(u, k) for k in (ka, kb, kc))
            lhs = poisson(a, poisson(b, c, m), m)
            rhs = poisson(poisson(a, b, m), c, m) + poisson(b, poisson(a, c, m), m)
            assert lhs == rhs

    def test_rejects_odd_variables(self):
        with pytest.raises(ValueError):
            poisson(var("a"), var("a"), 2)


class TestFormCondition:
    def test_swap_negates_even_form(self):
        assert check_form_condition(default_poisson_involution(2), 2)

    def test_identity_fails(self):
        u = poisson_universe(2)
        assert not check_form_condition(LinearChange(u), 2)

    def test_t_negation(self):
        assert check_form_condition(default_poisson_involution(1), 1)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_default_involution(self, m):
        assert check_form_condition(default_poisson_involution(m), m)

    def test_non_involutive_rejected(self):
        u = poisson_universe(2)
        scale = LinearChange(u, even_matrix=Matrix([[2, 0], [0, Fraction(1, 2)]]))
        assert not check_form_condition(scale, 2)


class TestHodgeDual:
    @pytest.mark.parametrize("n", [2, 4])
    def test_product_with_dual_gives_top(self, n):
        u = grassmann_universe(n)
        top_key = ((), tuple(range(n)))
        for key in monomial_basis(u, n):
            mono = SuperPoly.monomial(u, key)
            prod = mono * hodge_dual(mono)
            assert prod == SuperPoly.monomial(u, top_key)

    def test_requires_pure_grassmann(self):
        with pytest.raises(ValueError):
            hodge_dual(var("x"))
