#!/usr/bin/env python3
"""Simplicity certificates.

Over the rationals, irreducibility is field-sensitive, so the classifier
only says "simple" with a Burnside certificate: the associative envelope of
the left operators must be the full matrix algebra, which rules out common
invariant subspaces over every field extension. Proper invariant subspaces
are returned as explicit witnesses.
"""

from trialg import SimplicityKind, a3_t, c3, direct_sum, lie_of, simplicity, superalgebra_simplicity

print("=" * 72)
print("Ternary systems")
print("=" * 72)
for system in (a3_t(1, 1), a3_t(1, 2), a3_t(2, 2), a3_t(2, 3), c3(1)):
    result = simplicity(system)
    print(f"{system.name:12s} -> {result}")

print()
doubled = direct_sum(a3_t(2, 2), a3_t(2, 2))
result = simplicity(doubled)
print(f"{doubled.name} -> {result}")
assert result.kind is SimplicityKind.NOT_SIMPLE
print("witness basis rows (each spans part of one summand):")
for row in result.witness.basis[:2]:
    print("  ", row)

print()
print("=" * 72)
print("Graded superalgebra side")
print("=" * 72)
for system in (a3_t(2, 2), a3_t(1, 1)):
    g = lie_of(system).algebra
    print(f"{g.name:18s} -> {superalgebra_simplicity(g)}")
print("matching the ternary verdicts above: the correspondence preserves simplicity")
