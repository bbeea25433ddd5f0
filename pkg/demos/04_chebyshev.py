"""Chebyshev polynomials over finite fields.

T_t is pinned down by T_t(z + 1/z) = z^t + z^-t.  Its periodic points come
from both p^n - 1 and p^n + 1, so the limits land a little above 1/2 for odd
prime degree.
"""

from pertower import MapSpec, TowerQuery, build_field, cheb_coeffs, limit, ratio_at, render_decimal
from pertower.dynmaps import cheb_value

terms = [f"{c:+d}*w^{k}" for k, c in reversed(list(enumerate(cheb_coeffs(5)))) if c]
print("T_5(w) =", " ".join(terms))

F = build_field(7, 2)
z = (3, 2)
w = F.add(z, F.inv(z))
print("T_5(z + 1/z) == z^5 + z^-5:", cheb_value(F, 5, w) == F.add(F.pow(z, 5), F.pow(F.inv(z), 5)))

for p in (5, 19, 53):
    q = TowerQuery(p, MapSpec.chebyshev(3))
    print(f"T_3 over F_{p}^n: limit {limit(q).value} = {render_decimal(limit(q).value)}, "
          f"n=4 gives {render_decimal(ratio_at(p, 4, q.fmap))}")

res = limit(TowerQuery(2, MapSpec.chebyshev(15), delta=2, nu=(0, 0)))
print(f"T_15 over F_2^n with gcd(4, n) = 2: {res.value}, I = {res.I}, J = {res.J} (indices into (3, 5))")
