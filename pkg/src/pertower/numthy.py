"""Integer number theory used throughout the package.

Everything here works on Python ints, so values such as ``2**132 - 1`` are
handled exactly.  The valuation of ``p**n - 1`` at a prime ``q`` can be
predicted from ``n`` alone (see :func:`predicted_valuation`), which is what
lets the analytic counts run without ever forming huge powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

__all__ = [
    "FactoredDegree",
    "TowerParams",
    "is_prime",
    "v_adic",
    "mult_order",
    "factor_degree",
    "predicted_valuation",
    "tower_params",
    "valuation_vector",
    "divisors",
]

# Miller-Rabin with these bases is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for b in _MR_BASES:
        if m % b == 0:
            return m == b
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _require_prime(x: int, name: str) -> None:
    if not isinstance(x, int) or not is_prime(x):
        raise ValueError(f"{name} must be prime, got {x!r}")


def v_adic(q: int, m: int) -> int:
    """Exponent of the prime ``q`` in ``m``.

    >>> v_adic(2, 24)
    3
    """
    _require_prime(q, "q")
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    m = abs(m)
    nu = 0
    while m % q == 0:
        m //= q
        nu += 1
    return nu


def _trial_factor(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of ``m`` (trial division; ``m`` is small)."""
    divs = [1]
    for q, e in _trial_factor(m):
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mult_order(q: int, p: int) -> int:
    """Least ``k > 0`` with ``q | p**k - 1``."""
    _require_prime(q, "q")
    _require_prime(p, "p")
    if p == q:
        raise ValueError("p and q must be distinct primes")
    r = p % q
    for d in divisors(q - 1):
        if pow(r, d, q) == 1:
            return d
    raise AssertionError("unreachable: order divides q - 1")


@dataclass(frozen=True)
class FactoredDegree:
    """A map degree ``t`` with its prime factorization, primes ascending."""

    t: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 1
        for q, f in self.factors:
            if q <= prev or not is_prime(q) or f < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            prev = q
            prod *= q**f
        if prod != self.t or self.t < 2:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.t}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def factor_degree(t: int) -> FactoredDegree:
    if not isinstance(t, int) or t < 2:
        raise ValueError(f"map degree must be an integer >= 2, got {t!r}")
    return FactoredDegree(t, tuple(_trial_factor(t)))


def predicted_valuation(p: int, q: int, n: int) -> int:
    """``v_q(p**n - 1)`` computed from the lifting rules, without ``p**n``.

    Returns 0 when ``ord_q(p)`` does not divide ``n``.
    """
    _require_prime(p, "p")
    _require_prime(q, "q")
    if p == q:
        raise ValueError("p and q must be distinct primes")
    if n < 1:
        raise ValueError("n must be positive")
    if q == 2:
        if n % 2:
            return v_adic(2, p - 1)
        return max(v_adic(2, p - 1), v_adic(2, p + 1)) + v_adic(2, n)
    delta = mult_order(q, p)
    if n % delta:
        return 0
    mu = v_adic(q, p**delta - 1)
    return mu + v_adic(q, n)


@dataclass(frozen=True)
class TowerParams:
    p: int
    spec: FactoredDegree
    delta_i: tuple[int, ...]
    mu_i: tuple[int, ...]
    cap_delta: int
    # Only set when 2 | t and p is odd.
    lambda_: int | None = None
    mu2: int | None = None


def tower_params(p: int, t: int | FactoredDegree) -> TowerParams:
    spec = t if isinstance(t, FactoredDegree) else factor_degree(t)
    _require_prime(p, "p")
    if p in spec.primes:
        raise ValueError(f"p = {p} divides the map degree {spec.t}")
    deltas = tuple(mult_order(q, p) for q in spec.primes)
    mus = tuple(v_adic(q, p**d - 1) for q, d in zip(spec.primes, deltas))
    lam = mu2 = None
    if spec.primes[0] == 2:
        lam = v_adic(2, p - 1)
        mu2 = max(lam, v_adic(2, p + 1))
    return TowerParams(p, spec, deltas, mus, lcm(*deltas), lam, mu2)


def valuation_vector(n: int, spec: FactoredDegree) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(v_adic(q, n) for q in spec.primes)
