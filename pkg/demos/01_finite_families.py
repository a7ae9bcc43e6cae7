#!/usr/bin/env python3
"""Tour of the finite-dimensional ternary families.

Builds each structure tensor, evaluates a few brackets by hand, and runs the
exhaustive axiom sweeps. Everything is exact rational arithmetic; a red
result here would come with an explicit witness tuple, never a tolerance.
"""

from trialg import a3_st, a3_t, c3, check_n6, check_n8, left_op, o3, unit_vector

print("=" * 72)
print("The vector product algebra on four basis vectors")
print("=" * 72)
vp = o3()
print(f"built {vp.name} with dim {vp.dim}")
e = [unit_vector(4, i) for i in range(4)]
print("[e1, e2, e3] =", vp.describe_vector(vp.bracket(e[0], e[1], e[2])))
print("[e1, e2, e4] =", vp.describe_vector(vp.bracket(e[0], e[1], e[3])))
print("[e1, e1, e2] =", vp.describe_vector(vp.bracket(e[0], e[0], e[1])))
print("left operator of (e1, e2) acts as a rotation on the e3/e4 plane:")
rot = left_op(vp, e[0], e[1])
print("  e3 ->", vp.describe_vector(rot.apply(e[2])), "   e4 ->", vp.describe_vector(rot.apply(e[3])))
print(check_n8(vp).summary())
print()

print("=" * 72)
print("Rectangular matrices with the transpose bracket  [a,b,c] = ab^t c - c b^t a")
print("=" * 72)
for m, n in [(1, 2), (2, 2), (2, 3)]:
    system = a3_t(m, n)
    print(check_n6(system).summary())
small = a3_t(1, 2)
print("smallest nontrivial bracket: [e11, e11, e12] =",
      small.describe_vector(small.bracket(unit_vector(2, 0), unit_vector(2, 0), unit_vector(2, 1))))
print("the same bracket is not totally antisymmetric:")
print(" ", check_n8(a3_t(2, 2)).violations[0])
print()

print("=" * 72)
print("Even-sized matrices with the symplectic-transpose bracket")
print("=" * 72)
st = a3_st(1, 1)
print(check_n6(st).summary())
print("the 2x2 case is totally antisymmetric as well:")
print(check_n8(st).summary())
print("the 2x4 case is not:")
print(" ", check_n8(a3_st(1, 2)).violations[0])
print()

print("=" * 72)
print("Row vectors with the pairing bracket")
print("=" * 72)
rows = c3(1)
print("[e1, e1, e2] =", rows.describe_vector(rows.bracket(unit_vector(2, 0), unit_vector(2, 0), unit_vector(2, 1))))
for n in (1, 2):
    print(check_n6(c3(n)).summary())
