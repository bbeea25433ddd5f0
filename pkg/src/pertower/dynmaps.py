"""Power maps ``z -> z**t`` and Chebyshev polynomials ``T_t``.

Chebyshev values are computed with a doubling ladder on the pair
``(T_k(w), T_{k+1}(w))``::

    T_{2k}   = T_k**2 - 2
    T_{2k+1} = T_k * T_{k+1} - w

so ``T_t`` costs O(log t) multiplications and ``T_{t**k}`` (the k-th
iterate) stays cheap even though ``t**k`` is a big integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .ffield import FieldDesc, FieldElement, vconst, vmul, vpow, vsub
from .numthy import FactoredDegree, factor_degree

__all__ = [
    "POWER",
    "CHEBYSHEV",
    "MapSpec",
    "parse_map",
    "apply",
    "iterate",
    "apply_rows",
    "cheb_coeffs",
    "cheb_value",
    "reduce_prime_power",
]

POWER = "power"
CHEBYSHEV = "cheb"

CHEB_COEFF_CAP = 10_000


@dataclass(frozen=True)
class MapSpec:
    kind: str
    t: int

    def __post_init__(self):
        if self.kind not in (POWER, CHEBYSHEV):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if not isinstance(self.t, int) or self.t < 2:
            raise ValueError(f"map degree must be an integer >= 2, got {self.t!r}")

    @cached_property
    def spec(self) -> FactoredDegree:
        return factor_degree(self.t)

    def __str__(self) -> str:
        return f"{self.kind}:{self.t}"

    @classmethod
    def power(cls, t: int) -> MapSpec:
        return cls(POWER, t)

    @classmethod
    def chebyshev(cls, t: int) -> MapSpec:
        return cls(CHEBYSHEV, t)


def parse_map(text: str) -> MapSpec:
    """Parse ``power:T`` or ``cheb:T``."""
    kind, sep, deg = text.strip().partition(":")
    if not sep:
        raise ValueError(f"map must look like 'power:T' or 'cheb:T', got {text!r}")
    kind = {"power": POWER, "cheb": CHEBYSHEV, "chebyshev": CHEBYSHEV}.get(kind.lower())
    if kind is None:
        raise ValueError(f"unknown map kind in {text!r}")
    try:
        t = int(deg)
    except ValueError:
        raise ValueError(f"map degree must be an integer, got {deg!r}") from None
    return MapSpec(kind, t)


def cheb_value(field: FieldDesc, d: int, w: FieldElement) -> FieldElement:
    """``T_d(w)`` for any ``d >= 0`` by the doubling ladder."""
    if d < 0:
        raise ValueError("Chebyshev index must be non-negative")
    two = field.const(2)
    lo, hi = two, w  # (T_k, T_{k+1}) with k = 0
    for bit in bin(d)[2:]:
        cross = field.sub(field.mul(lo, hi), w)
        if bit == "1":
            lo, hi = cross, field.sub(field.mul(hi, hi), two)
        else:
            lo, hi = field.sub(field.mul(lo, lo), two), cross
    return lo


def apply(field: FieldDesc, fmap: MapSpec, z: FieldElement) -> FieldElement:
    if fmap.kind == POWER:
        return field.pow(z, fmap.t)
    return cheb_value(field, fmap.t, z)


def iterate(field: FieldDesc, fmap: MapSpec, k: int, z: FieldElement) -> FieldElement:
    """The k-th iterate in closed form: ``z**(t**k)`` or ``T_{t**k}(z)``."""
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    if k == 0:
        return z
    if fmap.kind == POWER:
        if not any(z):
            return z
        return field.pow(z, pow(fmap.t, k, field.size - 1))
    return cheb_value(field, fmap.t**k, z)


def apply_rows(field: FieldDesc, fmap: MapSpec, rows: np.ndarray) -> np.ndarray:
    """Apply the map to every coefficient row of ``rows`` at once."""
    if fmap.kind == POWER:
        return vpow(field, rows, fmap.t)
    m = rows.shape[0]
    two = vconst(field, 2, m)
    lo, hi = two, rows
    for bit in bin(fmap.t)[2:]:
        cross = vsub(field, vmul(field, lo, hi), rows)
        if bit == "1":
            lo, hi = cross, vsub(field, vmul(field, hi, hi), two)
        else:
            lo, hi = vsub(field, vmul(field, lo, lo), two), cross
    return lo


def cheb_coeffs(d: int) -> list[int]:
    """Integer coefficients of ``T_d``, lowest degree first.

    Uses the three-term recursion ``T_d = w T_{d-1} - T_{d-2}`` from
    ``T_0 = 2`` and ``T_1 = w``.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d > CHEB_COEFF_CAP:
        raise ValueError(f"cheb_coeffs is capped at d <= {CHEB_COEFF_CAP}")
    prev, cur = [2], [0, 1]
    if d == 0:
        return prev
    for _ in range(d - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def reduce_prime_power(fmap: MapSpec) -> MapSpec:
    """Degree ``q**e`` maps have the same periodic points as degree ``q``."""
    if fmap.spec.is_prime_power:
        return MapSpec(fmap.kind, fmap.spec.primes[0])
    return fmap
