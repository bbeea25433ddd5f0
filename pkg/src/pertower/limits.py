"""Limiting proportions of periodic points along towers of fields.

A tower is the set of ``n`` admitted by a :class:`TowerQuery`.  Two
membership rules exist:

``"gcd"``
    ``gcd(Delta, n) == delta`` and ``v_{q_i}(n) == nu_i`` for every prime
    ``q_i`` of ``t``.  Used for power maps and composite Chebyshev maps.
``"delta-divides-2n"``
    ``delta | 2n`` and ``v_q(n) == nu``, for Chebyshev maps of prime(-power)
    degree.

All values are :class:`fractions.Fraction`; nothing is rounded until
:func:`render_decimal`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm, prod

from .census import analytic_count
from .dynmaps import CHEBYSHEV, POWER, MapSpec
from .numthy import FactoredDegree, TowerParams, tower_params, valuation_vector

__all__ = [
    "ExactRatio",
    "GCD",
    "DELTA_DIVIDES_2N",
    "OutsideScopeError",
    "TowerQuery",
    "LimitResult",
    "subsets_IJ",
    "limit_power",
    "limit_cheby",
    "limit",
    "tower",
    "ratio_at",
    "render_decimal",
    "significant_digits",
]

ExactRatio = Fraction

GCD = "gcd"
DELTA_DIVIDES_2N = "delta-divides-2n"


class OutsideScopeError(ValueError):
    """The requested limit has no closed form implemented here."""


@dataclass(frozen=True)
class TowerQuery:
    p: int
    fmap: MapSpec
    delta: int | None = None  # defaults to Delta
    nu: tuple[int, ...] | None = None  # defaults to all zeros
    constraint: str | None = None

    def __post_init__(self):
        params = self.params  # validates p against t
        r = params.spec.r
        nu = tuple(self.nu) if self.nu is not None else (0,) * r
        if len(nu) != r:
            raise ValueError(f"nu has {len(nu)} entries but t = {self.fmap.t} has {r} prime factors")
        if any(v < 0 for v in nu):
            raise ValueError("valuations in nu must be non-negative")
        object.__setattr__(self, "nu", nu)

        delta = params.cap_delta if self.delta is None else self.delta
        if delta < 1 or params.cap_delta % delta:
            raise ValueError(f"delta = {delta} must divide Delta = {params.cap_delta}")
        object.__setattr__(self, "delta", delta)

        constraint = self.constraint
        if constraint is None:
            constraint = DELTA_DIVIDES_2N if (self.fmap.kind == CHEBYSHEV and r == 1) else GCD
        if constraint not in (GCD, DELTA_DIVIDES_2N):
            raise ValueError(f"unknown tower constraint {constraint!r}")
        if constraint == DELTA_DIVIDES_2N:
            if self.fmap.kind != CHEBYSHEV or r != 1:
                raise ValueError("the delta-divides-2n rule applies to prime-degree Chebyshev maps only")
            if delta != params.cap_delta:
                raise ValueError("under delta-divides-2n, delta must equal ord_q(p)")
        object.__setattr__(self, "constraint", constraint)

    @cached_property
    def params(self) -> TowerParams:
        return tower_params(self.p, self.fmap.spec)

    @property
    def spec(self) -> FactoredDegree:
        return self.params.spec

    def admits(self, n: int) -> bool:
        if n < 1:
            return False
        if valuation_vector(n, self.spec) != self.nu:
            return False
        if self.constraint == GCD:
            return gcd(self.params.cap_delta, n) == self.delta
        return (2 * n) % self.delta == 0

    def period(self) -> int:
        """Membership depends only on ``n`` modulo this number."""
        return lcm(2 * self.params.cap_delta, prod(q ** (v + 1) for q, v in zip(self.spec.primes, self.nu)))


@dataclass(frozen=True)
class LimitResult:
    value: Fraction
    # index sets into spec.primes; None when the rule does not fix them
    I: tuple[int, ...] | None = None
    J: tuple[int, ...] | None = None
    extension: bool = False
    formula: str = field(default="", compare=False)


def subsets_IJ(p: int, spec: FactoredDegree, delta: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Index sets ``(I, J)`` for a tower with ``gcd(Delta, n) = delta``.

    ``J`` holds the primes with ``ord_{q_j}(p) | delta`` (they divide
    ``p**n - 1``); ``I`` the remaining primes dividing ``p**delta + 1``.
    """
    params = tower_params(p, spec)
    J = tuple(j for j, d in enumerate(params.delta_i) if delta % d == 0)
    I = tuple(i for i, q in enumerate(spec.primes) if i not in J and (p**delta + 1) % q == 0)
    assert not set(I) & set(J)
    return I, J


def _exponent(params: TowerParams, i: int, nu_i: int) -> int:
    if params.spec.primes[i] == 2:
        return params.lambda_ if nu_i == 0 else params.mu2 + nu_i
    return params.mu_i[i] + nu_i


def limit_power(query: TowerQuery) -> LimitResult:
    if query.fmap.kind != POWER:
        raise ValueError("limit_power needs a power map")
    params = query.params
    _, J = subsets_IJ(query.p, params.spec, query.delta)
    Q = prod(params.spec.primes[j] ** _exponent(params, j, query.nu[j]) for j in J)
    extension = params.spec.r > 1 and params.spec.primes[0] == 2
    return LimitResult(Fraction(1, Q), J=J, extension=extension, formula="1/Q_J")


def limit_cheby(query: TowerQuery) -> LimitResult:
    if query.fmap.kind != CHEBYSHEV:
        raise ValueError("limit_cheby needs a Chebyshev map")
    params = query.params
    spec = params.spec
    if spec.r > 1 and spec.primes[0] == 2:
        raise OutsideScopeError(
            f"outside supported scope: no closed form for Chebyshev maps of even composite degree {spec.t}"
        )
    if query.constraint == DELTA_DIVIDES_2N or spec.primes[0] == 2:
        q = spec.primes[0]
        if q == 2:
            k = params.mu2 + query.nu[0]
            return LimitResult(Fraction(2 ** (k - 1) + 1, 2 ** (k + 1)), formula="(2^(k-1)+1)/2^(k+1)")
        k = params.mu_i[0] + query.nu[0]
        return LimitResult(Fraction(q**k + 1, 2 * q**k), formula="(q^k+1)/(2 q^k)")
    I, J = subsets_IJ(query.p, spec, query.delta)
    QI = prod(spec.primes[i] ** (params.mu_i[i] + query.nu[i]) for i in I)
    QJ = prod(spec.primes[j] ** (params.mu_i[j] + query.nu[j]) for j in J)
    return LimitResult(Fraction(QI + QJ, 2 * QI * QJ), I=I, J=J, formula="(Q_I+Q_J)/(2 Q_I Q_J)")


def limit(query: TowerQuery) -> LimitResult:
    return limit_power(query) if query.fmap.kind == POWER else limit_cheby(query)


def tower(query: TowerQuery, count: int) -> list[int]:
    """The ``count`` smallest ``n`` admitted by ``query``."""
    period = query.period()
    out: list[int] = []
    n = 0
    while len(out) < count:
        n += 1
        if query.admits(n):
            out.append(n)
        elif not out and n >= period:
            raise ValueError(f"no field degree satisfies {query}")
    return out


def ratio_at(p: int, n: int, fmap: MapSpec) -> Fraction:
    return Fraction(analytic_count(p, n, fmap), p**n)


def _round_div(num: int, den: int, rounding: str) -> int:
    q, r = divmod(num, den)
    if rounding == "down":
        return q
    if rounding != "half-even":
        raise ValueError(f"unknown rounding mode {rounding!r}")
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    return q


def render_decimal(r: Fraction, sig_figs: int = 9, rounding: str = "half-even") -> str:
    """Fixed-point decimal string of ``r`` with ``sig_figs`` significant digits.

    >>> render_decimal(Fraction(2, 3))
    '0.666666667'
    >>> render_decimal(Fraction(1))
    '1.00000000'
    """
    if sig_figs < 1:
        raise ValueError("sig_figs must be >= 1")
    r = Fraction(r)
    sign = "-" if r < 0 else ""
    r = abs(r)
    if r == 0:
        return "0." + "0" * (sig_figs - 1) if sig_figs > 1 else "0"
    e = len(str(r.numerator)) - len(str(r.denominator))
    if Fraction(10) ** e > r:
        e -= 1
    scale = sig_figs - 1 - e
    scaled = r * Fraction(10) ** scale
    digits = _round_div(scaled.numerator, scaled.denominator, rounding)
    if digits == 10**sig_figs:
        digits //= 10
        scale -= 1
    s = str(digits)
    if scale <= 0:
        return sign + s + "0" * (-scale)
    if len(s) > scale:
        return sign + s[:-scale] + "." + s[-scale:]
    return sign + "0." + "0" * (scale - len(s)) + s


def significant_digits(printed: str) -> int:
    """Number of significant digits in a plain decimal string such as ``'0.0370'``."""
    body = printed.strip().lstrip("-").replace(".", "").lstrip("0")
    return max(len(body), 1)
