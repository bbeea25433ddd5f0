"""Counting periodic points two ways.

The census walks the functional graph of a map over every element; the
closed form only needs the prime factorisation of p^n - 1 (and p^n + 1 for
Chebyshev maps).  On a grid of small fields the two always agree.
"""

from pertower import MapSpec, analytic_count, brute_census, build_field

for p, n, m in [(3, 5, MapSpec.power(11)), (5, 4, MapSpec.power(3)), (7, 3, MapSpec.chebyshev(3))]:
    F = build_field(p, n)
    c = brute_census(F, m)
    print(f"{F.label:10} {str(m):9} periodic={c.periodic_count:5} preperiodic={c.preperiodic_count:5} "
          f"longest tail={c.max_tail}  cycles={c.cycle_histogram}  closed form={analytic_count(p, n, m)}")

disagreements = 0
for p in (2, 3, 5, 7):
    for n in range(1, 7):
        if p**n > 5000:
            break
        F = build_field(p, n)
        for t in (2, 3, 5, 6):
            if t % p == 0:
                continue
            for m in (MapSpec.power(t), MapSpec.chebyshev(t)):
                disagreements += brute_census(F, m).periodic_count != analytic_count(p, n, m)
print("disagreements on the small grid:", disagreements)
