import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pertower.ffield import (
    EnumerationBudgetError,
    FieldDesc,
    MAX_ENUM_ENV,
    all_rows,
    arith,
    build_field,
    enumerate_field,
    fe_pow,
    index_rows,
    is_irreducible,
    lift_pair,
    rows_index,
    vadd,
    vmul,
    vpow,
    vsub,
)

from conftest import fields_up_to


def _has_monic_factor(p, f):
    """Brute force: does some monic g with 1 <= deg g <= deg f / 2 divide f?"""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            g = list(low) + [1]
            r = list(f)
            for i in range(len(r) - 1, k - 1, -1):
                c = r[i]
                for j in range(k + 1):
                    r[i - k + j] = (r[i - k + j] - c * g[j]) % p
            if not any(r[:k]):
                return True
    return False


@pytest.mark.parametrize("p, max_deg", [(2, 6), (3, 4), (5, 3), (7, 2)])
def test_is_irreducible_matches_factor_search(p, max_deg):
    for d in range(1, max_deg + 1):
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            assert is_irreducible(p, f) == (not _has_monic_factor(p, f)), f


@pytest.mark.parametrize("p, poly, expected", [
    (5, (1, 0, 1), False),
    (3, (1, 0, 1), True),
    (2, (1, 1, 1), True),
    # degrees 1 + 2 + 3: passes x^(p^6) = x but is reducible
    (2, (0, 1, 1, 1, 0, 1, 1), False),
])
def test_is_irreducible_examples(p, poly, expected):
    assert is_irreducible(p, poly) is expected


def test_is_irreducible_rejects_non_monic():
    with pytest.raises(ValueError):
        is_irreducible(3, (1, 0, 2))


@pytest.mark.parametrize("p, n, modulus", [(2, 2, (1, 1, 1)), (3, 2, (1, 0, 1)), (5, 1, (0, 1))])
def test_build_field_examples(p, n, modulus):
    assert build_field(p, n).modulus == modulus


@pytest.mark.parametrize("p, n", [(2, 3), (2, 5), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_build_field_is_lexicographic_minimum(p, n):
    first = next(
        low + (1,) for low in itertools.product(range(p), repeat=n)
        if not _has_monic_factor(p, list(low) + [1]) and (n == 1 or low[0] != 0)
    )
    assert build_field(p, n).modulus == first


def test_build_field_errors():
    with pytest.raises(ValueError):
        build_field(4, 2)
    with pytest.raises(ValueError):
        build_field(3, 0)


def test_build_field_deterministic():
    a = build_field(3, 5)
    from pertower import ffield
    ffield._FIELD_CACHE.clear()
    b = build_field(3, 5)
    assert a is not b and a == b and a.modulus == b.modulus


def test_arith_examples(f9):
    x = f9.x()
    assert arith(f9, "mul", x, x) == (2, 0)
    f5 = build_field(5, 1)
    assert arith(f5, "inv", (2,)) == (3,)
    for a in f9.elements():
        assert arith(f9, "add", a, arith(f9, "neg", a)) == f9.zero()
    with pytest.raises(ZeroDivisionError):
        arith(f9, "inv", f9.zero())
    with pytest.raises(ValueError):
        arith(f9, "pow", x, x)


SAMPLE_FIELDS = [(2, 11), (3, 7), (5, 5), (7, 4), (11, 3), (13, 3), (2, 1), (3121, 1)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SAMPLE_FIELDS), st.data())
def test_field_axioms(pn, data):
    F = build_field(*pn)
    el = st.integers(0, F.size - 1).map(F.from_index)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    assert F.mul(a, F.one()) == a


@pytest.mark.parametrize("p, n", fields_up_to(3125))
def test_inverse_and_frobenius_exhaustive(p, n):
    F = build_field(p, n)
    one = F.one()
    for a in F.elements():
        if any(a):
            assert F.mul(a, F.inv(a)) == one
        assert F.pow(a, F.size) == a


def test_fe_pow_examples(f9):
    for a in f9.elements():
        assert fe_pow(f9, a, 0) == f9.one()
        if any(a):
            assert fe_pow(f9, a, 8) == f9.one()
    F = build_field(3, 5)
    assert all(fe_pow(F, a, 3**5) == a for a in F.elements())
    with pytest.raises(ValueError):
        fe_pow(f9, f9.one(), -1)


def test_enumerate_examples():
    assert list(enumerate_field(build_field(2, 1))) == [(0,), (1,)]
    f4 = list(enumerate_field(build_field(2, 2)))
    assert len(f4) == 4 and f4[0] == (0, 0)
    f625 = list(enumerate_field(build_field(5, 4)))
    assert len(f625) == len(set(f625)) == 625


def test_enumerate_is_index_order():
    F = build_field(3, 4)
    assert [F.index(a) for a in F.elements()] == list(range(81))
    assert all(F.from_index(F.index(a)) == a for a in F.elements())


def test_enumeration_budget(monkeypatch):
    F = build_field(2, 12)
    with pytest.raises(EnumerationBudgetError, match="too large"):
        next(enumerate_field(F, 1000))
    monkeypatch.setenv(MAX_ENUM_ENV, "100")
    with pytest.raises(EnumerationBudgetError):
        all_rows(F)
    monkeypatch.delenv(MAX_ENUM_ENV)
    assert all_rows(F).shape == (4096, 12)


def test_field_desc_validates_modulus():
    with pytest.raises(ValueError):
        FieldDesc(3, 2, (1, 0, 2))
    with pytest.raises(ValueError):
        build_field(3, 2).check((3, 0))


@pytest.mark.parametrize("p, n", [(2, 4), (3, 2), (5, 2), (7, 2), (2, 1), (13, 1)])
def test_array_ops_match_scalar(p, n):
    F = build_field(p, n)
    rows = all_rows(F)
    assert np.array_equal(rows_index(F, rows), np.arange(F.size))
    elems = list(F.elements())
    rng = np.random.default_rng(p * 100 + n)
    j = rng.permutation(F.size)
    other = rows[j]
    prod_, sum_, diff_ = vmul(F, rows, other), vadd(F, rows, other), vsub(F, rows, other)
    cube = vpow(F, rows, 3)
    for i, a in enumerate(elems):
        b = elems[j[i]]
        assert tuple(prod_[i]) == F.mul(a, b)
        assert tuple(sum_[i]) == F.add(a, b)
        assert tuple(diff_[i]) == F.sub(a, b)
        assert tuple(cube[i]) == F.pow(a, 3)
    assert np.array_equal(index_rows(F, np.arange(F.size)), rows)


def test_lift_pair_examples():
    F = build_field(7, 2)
    assert lift_pair(F, F.const(2)) == F.one()
    F2 = build_field(2, 2)
    assert lift_pair(F2, F2.zero()) == F2.one()
    F25 = build_field(5, 2)
    z = lift_pair(F25, F25.zero())
    assert F25.mul(z, z) == F25.const(-1)


def test_lift_pair_rejects_outside_subfield():
    F = build_field(3, 2)
    with pytest.raises(ValueError):
        lift_pair(F, F.x())
    with pytest.raises(ValueError):
        lift_pair(build_field(3, 3), (0, 0, 0))


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1), (2, 3), (11, 1)])
def test_lift_pair_property(p, n):
    big = build_field(p, 2 * n)
    half = p**n
    sub = [w for w in big.elements() if big.pow(w, half) == w]
    assert len(sub) == half
    for w in sub:
        z = lift_pair(big, w)
        assert any(z)
        assert big.add(z, big.inv(z)) == w
        assert big.pow(z, half - 1) == big.one() or big.pow(z, half + 1) == big.one()
