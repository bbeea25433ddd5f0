"""Finite fields F_{p^n} as F_p[x] / (modulus).

Elements are tuples of ``n`` residues ``(c_0, ..., c_{n-1})`` standing for
``c_0 + c_1 x + ... + c_{n-1} x^{n-1}``.  Each element also has an integer
index ``sum(c_j * p**j)``; enumeration runs over indices in ascending order,
so index 0 is zero and index 1 is one.

Two arithmetic paths are provided.  The :class:`FieldDesc` methods work on
single tuples and are used for scalar evaluation, exponentiation and
inversion.  The ``v*`` functions near the bottom work on ``(M, n)`` integer
arrays of coefficient rows so a map can be applied to every element of a
field in one pass.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from .numthy import _trial_factor, is_prime

__all__ = [
    "DEFAULT_MAX_ENUM",
    "MAX_ENUM_ENV",
    "EnumerationBudgetError",
    "FieldDesc",
    "FieldElement",
    "build_field",
    "check_enumerable",
    "is_irreducible",
    "arith",
    "fe_pow",
    "enumerate_field",
    "lift_pair",
    "max_enum",
]

FieldElement = tuple[int, ...]

DEFAULT_MAX_ENUM = 2_000_000
MAX_ENUM_ENV = "PERTOWER_MAX_ENUM"


class EnumerationBudgetError(RuntimeError):
    """Raised when a field is too large to enumerate under the budget."""


def max_enum(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(MAX_ENUM_ENV)
    return int(env) if env else DEFAULT_MAX_ENUM


# -- polynomials over F_p, ascending coefficient lists ----------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = [c % p for c in a]
    d = len(f) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            off = k - d
            for j in range(d + 1):
                a[off + j] = (a[off + j] - c * f[j]) % p
    return _trim(a[:d] if len(a) > d else a)


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv_lead % p
        off = len(a) - len(b)
        q[off] = c
        for j, y in enumerate(b):
            a[off + j] = (a[off + j] - c * y) % p
        _trim(a)
    return _trim(q), a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def is_irreducible(p: int, poly) -> bool:
    """Rabin's test for a monic polynomial (ascending coefficients) over F_p."""
    f = [int(c) % p for c in poly]
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 1")
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = _ppowmod(h, p, f, p)
        return h

    if _trim(list(frob(d))) != x:
        return False
    for ell, _ in _trial_factor(d):
        h = frob(d // ell)
        g = list(h) + [0] * (2 - len(h))
        g[1] = (g[1] - 1) % p
        if len(_pgcd(f, _trim(g), p)) != 1:
            return False
    return True


# -- the field --------------------------------------------------------------

@dataclass(frozen=True)
class FieldDesc:
    p: int
    n: int
    modulus: tuple[int, ...]  # ascending, monic, length n + 1
    _mod_low: tuple[int, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        object.__setattr__(self, "_mod_low", tuple(self.modulus[:-1]))

    @property
    def size(self) -> int:
        return self.p**self.n

    @property
    def label(self) -> str:
        return f"F_{{{self.p}^{self.n}}}"

    def zero(self) -> FieldElement:
        return (0,) * self.n

    def one(self) -> FieldElement:
        return self.const(1)

    def const(self, k: int) -> FieldElement:
        return (k % self.p,) + (0,) * (self.n - 1)

    def x(self) -> FieldElement:
        """The class of ``x``; equals 0 in the prime field."""
        return self.reduce([0, 1])

    def reduce(self, coeffs) -> FieldElement:
        r = _pmod(list(coeffs), list(self.modulus), self.p)
        return tuple(r) + (0,) * (self.n - len(r))

    def from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.size:
            raise ValueError(f"index {i} out of range for {self.label}")
        out = []
        for _ in range(self.n):
            i, c = divmod(i, self.p)
            out.append(c)
        return tuple(out)

    def index(self, a: FieldElement) -> int:
        i = 0
        for c in reversed(a):
            i = i * self.p + c
        return i

    def check(self, a: FieldElement) -> FieldElement:
        if len(a) != self.n or any(not 0 <= c < self.p for c in a):
            raise ValueError(f"{a!r} is not a reduced element of {self.label}")
        return tuple(a)

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        low = self._mod_low
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                off = k - n
                for j in range(n):
                    prod[off + j] -= c * low[j]
        return tuple(c % p for c in prod[:n])

    def inv(self, a: FieldElement) -> FieldElement:
        """Inverse via the extended Euclidean algorithm on polynomials."""
        p = self.p
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.modulus), _trim(list(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1, p)
            qs = _pmul(q, s1, p)
            s_next = [0] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(qs):
                s_next[i] -= c
            r0, r1 = r1, r
            s0, s1 = s1, _trim([c % p for c in s_next])
        # r1 is a nonzero constant since the modulus is irreducible
        scale = pow(r1[0], -1, p)
        return self.reduce([c * scale for c in s1])

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def elements(self, max_elements: int | None = None):
        return enumerate_field(self, max_elements)


def build_field(p: int, n: int) -> FieldDesc:
    """F_{p^n} with the lexicographically least monic irreducible modulus.

    Candidates ``x^n + c_{n-1} x^{n-1} + ... + c_0`` are ordered by the
    tuple ``(c_0, c_1, ..., c_{n-1})``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"extension degree must be >= 1, got {n!r}")
    return _build_field(p, n)


_FIELD_CACHE: dict[tuple[int, int], FieldDesc] = {}


def _build_field(p: int, n: int) -> FieldDesc:
    key = (p, n)
    if key not in _FIELD_CACHE:
        if n == 1:
            mod = (0, 1)
        else:
            # product() varies the last slot fastest, so c_0 is most significant
            for low in itertools.product(range(p), repeat=n):
                cand = low + (1,)
                if cand[0] == 0:
                    continue  # divisible by x
                if is_irreducible(p, cand):
                    mod = cand
                    break
        _FIELD_CACHE[key] = FieldDesc(p, n, mod)
    return _FIELD_CACHE[key]


def arith(field: FieldDesc, op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    if op == "inv":
        return field.inv(a)
    if op == "neg":
        return field.neg(a)
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    try:
        fn = {"add": field.add, "sub": field.sub, "mul": field.mul}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def fe_pow(field: FieldDesc, a: FieldElement, e: int) -> FieldElement:
    """``a**e`` with ``0**0 == 1``."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return field.pow(a, e)


def check_enumerable(p: int, n: int, max_elements: int | None = None) -> None:
    """Fail fast, before any field is built, if F_{p^n} exceeds the budget."""
    budget = max_enum(max_elements)
    if p**n > budget:
        raise EnumerationBudgetError(
            f"field too large for enumeration: F_{{{p}^{n}}} has {p**n} "
            f"elements, budget is {budget}"
        )


def _check_budget(field: FieldDesc, max_elements: int | None) -> None:
    check_enumerable(field.p, field.n, max_elements)


def enumerate_field(field: FieldDesc, max_elements: int | None = None):
    """Yield every element of ``field`` in ascending index order."""
    _check_budget(field, max_elements)
    p, n = field.p, field.n
    for tail in itertools.product(range(p), repeat=n):
        yield tuple(reversed(tail))


def lift_pair(big_field: FieldDesc, omega: FieldElement, max_elements: int | None = None) -> FieldElement:
    """A nonzero ``zeta`` in ``big_field`` with ``zeta + 1/zeta == omega``.

    ``big_field`` has degree ``2n`` and ``omega`` must lie in its degree-n
    subfield.  The first root of ``z^2 - omega z + 1`` in index order is
    returned.
    """
    if big_field.n % 2:
        raise ValueError("big_field must have even degree 2n")
    omega = big_field.check(omega)
    half = big_field.p ** (big_field.n // 2)
    if big_field.pow(omega, half) != omega:
        raise ValueError("omega is not in the degree-n subfield")
    _check_budget(big_field, max_elements)
    one = big_field.one()
    for z in enumerate_field(big_field, max_elements):
        if not any(z):
            continue
        val = big_field.add(big_field.sub(big_field.mul(z, z), big_field.mul(omega, z)), one)
        if not any(val):
            return z
    raise AssertionError("z^2 - omega z + 1 always splits over F_{p^{2n}}")


# -- array arithmetic: rows of coefficients, shape (M, n) -------------------

def all_rows(field: FieldDesc, max_elements: int | None = None) -> np.ndarray:
    """Coefficient rows of every element, in index order."""
    _check_budget(field, max_elements)
    return index_rows(field, np.arange(field.size, dtype=np.int64))


def index_rows(field: FieldDesc, idx: np.ndarray) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    out = np.empty((idx.shape[0], field.n), dtype=np.int64)
    rest = idx.copy()
    for j in range(field.n):
        rest, out[:, j] = np.divmod(rest, field.p)
    return out


def rows_index(field: FieldDesc, rows: np.ndarray) -> np.ndarray:
    idx = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(field.n - 1, -1, -1):
        idx = idx * field.p + rows[:, j]
    return idx


def vconst(field: FieldDesc, k: int, m: int) -> np.ndarray:
    out = np.zeros((m, field.n), dtype=np.int64)
    out[:, 0] = k % field.p
    return out


def vadd(field: FieldDesc, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a + b) % field.p


def vsub(field: FieldDesc, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a - b) % field.p


def vmul(field: FieldDesc, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p, n = field.p, field.n
    if n * p * p >= 2**62:
        raise OverflowError(f"characteristic {p} too large for int64 array arithmetic")
    prod = np.zeros((a.shape[0], 2 * n - 1), dtype=np.int64)
    for i in range(n):
        prod[:, i:i + n] += a[:, i:i + 1] * b
        prod[:, i:i + n] %= p
    low = np.asarray(field.modulus[:-1], dtype=np.int64)
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[:, k:k + 1]
        prod[:, k - n:k] = (prod[:, k - n:k] - c * low) % p
    return prod[:, :n].copy()


def vpow(field: FieldDesc, a: np.ndarray, e: int) -> np.ndarray:
    """Elementwise ``a**e`` for a single non-negative exponent."""
    result = vconst(field, 1, a.shape[0])
    base = a
    while e:
        if e & 1:
            result = vmul(field, result, base)
        e >>= 1
        if e:
            base = vmul(field, base, base)
    return result
