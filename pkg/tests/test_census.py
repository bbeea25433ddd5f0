import numpy as np
import pytest

from pertower.census import (
    Periodic,
    Preperiodic,
    analytic_count,
    analytic_count_cheby,
    analytic_count_power,
    brute_census,
    classify_point,
    functional_graph,
    is_permutation_case,
    stripped_parts,
)
from pertower.dynmaps import MapSpec, apply
from pertower.ffield import EnumerationBudgetError, all_rows, build_field, vpow
from pertower.numthy import predicted_valuation

from conftest import direct_valuation, fields_up_to, primes_below

GRID_T = (2, 3, 4, 5, 6, 8, 9, 15)


def _walk(F, m, z):
    """Orbit of z by plain iteration: (tail length, cycle length)."""
    seen = {}
    w, k = z, 0
    while w not in seen:
        seen[w] = k
        w = apply(F, m, w)
        k += 1
    return seen[w], k - seen[w]


def test_census_examples():
    c = brute_census(build_field(3, 5), MapSpec.power(11))
    assert (c.periodic_count, c.preperiodic_count, c.cycle_lengths) == (3, 240, (1, 1, 1))
    c = brute_census(build_field(5, 4), MapSpec.power(3))
    assert (c.periodic_count, c.preperiodic_count) == (209, 416)
    c = brute_census(build_field(3, 1), MapSpec.chebyshev(2))
    assert (c.periodic_count, c.preperiodic_count) == (1, 2)


@pytest.mark.parametrize("p, n, t, expected", [(5, 2, 3, 9), (3, 5, 11, 3), (2, 14, 15, 5462), (5, 1, 3, 5)])
def test_analytic_count_power_examples(p, n, t, expected):
    assert analytic_count_power(p, n, t) == expected


@pytest.mark.parametrize("p, n, t, expected", [(3, 1, 2, 1), (5, 1, 3, 3), (2, 14, 15, 4369), (17, 1, 2, 5)])
def test_analytic_count_cheby_examples(p, n, t, expected):
    assert analytic_count_cheby(p, n, t) == expected


def test_analytic_rejects_p_dividing_t():
    with pytest.raises(ValueError):
        analytic_count_power(3, 2, 6)
    with pytest.raises(ValueError):
        analytic_count_cheby(5, 1, 15)
    with pytest.raises(ValueError):
        is_permutation_case(2, 1, MapSpec.power(4))


@pytest.mark.parametrize("p, n, m, expected", [
    (2, 1, MapSpec.power(15), True),
    (5, 1, MapSpec.power(3), True),
    (3, 1, MapSpec.chebyshev(2), False),
    (2, 1, MapSpec.chebyshev(15), False),
    (2, 1, MapSpec.chebyshev(7), True),
])
def test_is_permutation_case_examples(p, n, m, expected):
    assert is_permutation_case(p, n, m) is expected


def test_classify_point_examples():
    F = build_field(3, 5)
    m = MapSpec.power(11)
    assert classify_point(F, m, F.zero()) == Periodic(1)
    assert classify_point(F, m, F.one()) == Periodic(1)
    minus_one = F.const(-1)
    for z in F.elements():
        if z in (F.zero(), F.one(), minus_one):
            assert isinstance(classify_point(F, m, z), Periodic)
        else:
            c = classify_point(F, m, z)
            assert isinstance(c, Preperiodic) and c.cycle_length == 1 and c.tail_length >= 1


def test_budget_is_enforced():
    with pytest.raises(EnumerationBudgetError):
        brute_census(build_field(2, 12), MapSpec.power(3), max_elements=1000)


@pytest.mark.parametrize("p, n", fields_up_to(400))
def test_graph_matches_orbit_walk(p, n):
    F = build_field(p, n)
    for t in (2, 3, 5, 6):
        for kind in ("power", "cheb"):
            m = MapSpec(kind, t)
            if p in m.spec.primes:
                continue
            g = functional_graph(F, m)
            for i, z in enumerate(F.elements()):
                tail, cyc = _walk(F, m, z)
                expect = Periodic(cyc) if tail == 0 else Preperiodic(tail, cyc)
                assert g.classify(i) == expect


@pytest.mark.parametrize("p, n", fields_up_to(20000))
def test_census_invariants(p, n):
    F = build_field(p, n)
    for t in GRID_T:
        for kind in ("power", "cheb"):
            m = MapSpec(kind, t)
            if p in m.spec.primes:
                continue
            c = brute_census(F, m)
            assert c.periodic_count + c.preperiodic_count == c.field_size == p**n
            assert sum(c.cycle_lengths) == c.periodic_count
            assert (c.max_tail == 0) == (c.preperiodic_count == 0)


@pytest.mark.parametrize("p, n", fields_up_to(5000))
def test_power_periodic_set_is_roots_of_unity(p, n):
    F = build_field(p, n)
    rows = all_rows(F)
    for t in GRID_T:
        if t % p == 0:
            continue
        d = stripped_parts(p, n, t)[0]
        expect = np.all(vpow(F, rows, d) == F.one(), axis=1)
        expect[0] = True
        assert np.array_equal(functional_graph(F, MapSpec.power(t)).periodic, expect)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_chebyshev_trace_criterion(p):
    F = build_field(p, 2)
    for z in F.elements():
        if not any(z):
            continue
        zi = F.inv(z)
        lhs_base = F.add(z, zi)
        for d in range(0, 31):
            lhs = lhs_base == F.add(F.pow(z, d), F.pow(zi, d))
            rhs = F.pow(z, d - 1) == F.one() or F.pow(z, d + 1) == F.one()
            assert lhs == rhs


@pytest.mark.parametrize("p, n", fields_up_to(20000))
def test_prime_power_degree_census_agrees(p, n):
    F = build_field(p, n)
    for q, qe in ((2, 4), (2, 8), (3, 9)):
        if p == q:
            continue
        for kind in ("power", "cheb"):
            a = brute_census(F, MapSpec(kind, q))
            b = brute_census(F, MapSpec(kind, qe))
            assert a.periodic_count == b.periodic_count


def test_plus_one_valuation_identity():
    ps = primes_below(47)
    for p in ps:
        for q in ps:
            if p == q:
                continue
            for n in range(1, 61):
                got = predicted_valuation(p, q, 2 * n) - predicted_valuation(p, q, n)
                assert got == direct_valuation(q, p**n + 1)


def test_analytic_count_dispatch():
    assert analytic_count(5, 4, MapSpec.power(3)) == 209
    assert analytic_count(3, 1, MapSpec.chebyshev(2)) == 1
