"""Arithmetic in a small extension field.

F_9 is built as F_3[x]/(x^2 + 1).  We multiply, invert, and check that the
Frobenius map z -> z^3 has order 2 on it.
"""

from pertower import build_field, fe_pow

F = build_field(3, 2)
print(f"{F.label} with modulus coefficients (c0, c1, c2) = {F.modulus}")

x = F.x()
print("x * x =", F.mul(x, x), "  (that is, -1)")

for z in F.elements():
    if any(z):
        assert F.mul(z, F.inv(z)) == F.one()
print("every nonzero element has an inverse")

moved = [z for z in F.elements() if fe_pow(F, z, 3) != z]
print(f"Frobenius moves {len(moved)} of {F.size} elements and squares to the identity:",
      all(fe_pow(F, fe_pow(F, z, 3), 3) == z for z in F.elements()))
