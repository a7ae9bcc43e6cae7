#!/usr/bin/env python3
"""The four polynomial families, evaluated symbolically.

These systems live on polynomial spaces, so the axiom checkers sweep
monomial bases up to a degree cap (default 3). Each individual check is
still exact: brackets of polynomials are polynomials, and coefficients are
rationals throughout.
"""

from trialg import Matrix, SuperPoly, check_n6, check_n8, p3, poisson, poisson_universe, s3, sw3, w3

print("=" * 72)
print("Contact-type bracket on p, q (and t in odd rank)")
print("=" * 72)
u1 = poisson_universe(1)
t = SuperPoly.variable(u1, "t")
one = SuperPoly.constant(u1, 1)
print("underlying bracket values:  {t, 1} =", poisson(t, one, 1), "   {t, t} =", poisson(t, t, 1))
family = p3(1)
print("[t, 1, 1] =", family.bracket(t, one, one))
print("[1, 1, t] =", family.bracket(one, one, t), " (outer antisymmetry)")
print(check_n6(family).summary())
print(check_n6(p3(2)).summary())
print()

print("=" * 72)
print("Two twisted copies of the line")
print("=" * 72)
pair = sw3()
one1 = pair.element((1, 0))
x1 = pair.element((1, 1))
print("[1<1>, 1<1>, x<1>] =", pair.bracket(one1, one1, x1))
print(check_n6(pair).summary())
print("with the identity matrix the family becomes totally antisymmetric:")
print(check_n8(sw3(Matrix.identity(2), 1)).summary())
print()

print("=" * 72)
print("Determinant brackets in two and three variables")
print("=" * 72)
s = s3()
x1 = s.element(((1, 0), ()))
x2 = s.element(((0, 1), ()))
one2 = s.element(((0, 0), ()))
print("two-variable bracket with a value row: [x1, x2, 1] =", s.bracket(x1, x2, one2))
print(check_n6(s).summary())
w = w3()
xs = [w.element(((1, 0, 0), ())), w.element(((0, 1, 0), ())), w.element(((0, 0, 1), ()))]
print("three-variable all-derivative bracket: [x1, x2, x3] =", w.bracket(*xs))
print(check_n6(w).summary())
print("and the untwisted three-variable bracket is totally antisymmetric:")
print(check_n8(w3(Matrix.identity(3))).summary())
