"""Proportions of periodic points settle down along towers.

For z^3 over F_{5^n} with n even and 3 not dividing n the proportion tends
to 1/3.  The gap to the limit is an exact fraction that shrinks like 5^-n.
"""

from pertower import MapSpec, TowerQuery, limit, ratio_at, render_decimal, tower

q = TowerQuery(5, MapSpec.power(3), delta=2, nu=(0,))
lim = limit(q).value
print(f"limit = {lim} = {render_decimal(lim)}")
for n in tower(q, 6):
    r = ratio_at(5, n, q.fmap)
    print(f"n = {n:2}  ratio = {render_decimal(r)}  gap = {r - lim}")

# without the divisibility condition the proportion keeps jumping around
print("n = 1..6:", [render_decimal(ratio_at(5, n, q.fmap), 4) for n in range(1, 7)])

# composite degrees: which primes land on p^n - 1 depends on gcd(Delta, n)
for delta in (1, 2, 4):
    res = limit(TowerQuery(2, MapSpec.power(15), delta=delta, nu=(0, 0)))
    print(f"z^15 over F_2^n with gcd(4, n) = {delta}: limit {res.value}")
