"""Periodic point counts, by brute force and by closed form.

The brute-force side builds the functional graph ``i -> index(map(element_i))``
over the whole field and strips in-degree-zero nodes until nothing changes.
A finite set that the map sends onto itself consists of periodic points, and
the residue after stripping is exactly such a set, so it is the periodic set.

The analytic side only needs valuations of ``p**n - 1`` and ``p**n + 1`` at
the primes dividing ``t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dynmaps import POWER, MapSpec, apply_rows
from .ffield import FieldDesc, FieldElement, all_rows, max_enum, rows_index
from .numthy import factor_degree, is_prime, predicted_valuation

__all__ = [
    "OrbitCensus",
    "Periodic",
    "Preperiodic",
    "FunctionalGraph",
    "functional_graph",
    "brute_census",
    "classify_point",
    "analytic_count_power",
    "analytic_count_cheby",
    "analytic_count",
    "is_permutation_case",
    "stripped_parts",
]


@dataclass(frozen=True)
class OrbitCensus:
    field_size: int
    periodic_count: int
    preperiodic_count: int
    cycle_lengths: tuple[int, ...]  # sorted, one entry per cycle
    max_tail: int

    @property
    def cycle_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.cycle_lengths).items()))


@dataclass(frozen=True)
class Periodic:
    cycle_length: int


@dataclass(frozen=True)
class Preperiodic:
    tail_length: int
    cycle_length: int


@dataclass(frozen=True, eq=False)
class FunctionalGraph:
    """The map's graph on element indices, with per-node orbit data.

    ``depth[i]`` is the number of steps from node ``i`` to the first periodic
    point of its orbit (0 for periodic nodes); ``cycle_len[i]`` is the length
    of the cycle the orbit ends in.
    """

    field: FieldDesc
    fmap: MapSpec
    image: np.ndarray
    periodic: np.ndarray
    depth: np.ndarray
    cycle_len: np.ndarray
    cycles: tuple[int, ...]

    def census(self) -> OrbitCensus:
        per = int(self.periodic.sum())
        return OrbitCensus(
            field_size=self.field.size,
            periodic_count=per,
            preperiodic_count=self.field.size - per,
            cycle_lengths=self.cycles,
            max_tail=int(self.depth.max()) if self.depth.size else 0,
        )

    def classify(self, i: int) -> Periodic | Preperiodic:
        if self.periodic[i]:
            return Periodic(int(self.cycle_len[i]))
        return Preperiodic(int(self.depth[i]), int(self.cycle_len[i]))


def _analyse(image: np.ndarray):
    size = image.shape[0]
    indeg = np.bincount(image, minlength=size)
    alive = np.ones(size, dtype=bool)
    layers = []
    frontier = np.flatnonzero(indeg == 0)
    while frontier.size:
        layers.append(frontier)
        alive[frontier] = False
        targets = image[frontier]
        np.subtract.at(indeg, targets, 1)
        cand = np.unique(targets)
        frontier = cand[(indeg[cand] == 0) & alive[cand]]
    periodic = alive

    cycle_len = np.zeros(size, dtype=np.int64)
    cycles = []
    seen = ~periodic
    for start in np.flatnonzero(periodic):
        if seen[start]:
            continue
        members = [int(start)]
        seen[start] = True
        j = int(image[start])
        while j != start:
            members.append(j)
            seen[j] = True
            j = int(image[j])
        cycle_len[members] = len(members)
        cycles.append(len(members))

    # later layers sit closer to the cycles
    depth = np.zeros(size, dtype=np.int64)
    for layer in reversed(layers):
        nxt = image[layer]
        depth[layer] = depth[nxt] + 1
        cycle_len[layer] = cycle_len[nxt]
    return periodic, depth, cycle_len, tuple(sorted(cycles))


@lru_cache(maxsize=32)
def _graph(field: FieldDesc, fmap: MapSpec, budget: int) -> FunctionalGraph:
    rows = all_rows(field, budget)
    image = rows_index(field, apply_rows(field, fmap, rows))
    periodic, depth, cycle_len, cycles = _analyse(image)
    return FunctionalGraph(field, fmap, image, periodic, depth, cycle_len, cycles)


def functional_graph(field: FieldDesc, fmap: MapSpec, max_elements: int | None = None) -> FunctionalGraph:
    return _graph(field, fmap, max_enum(max_elements))


def brute_census(field: FieldDesc, fmap: MapSpec, max_elements: int | None = None) -> OrbitCensus:
    return functional_graph(field, fmap, max_elements).census()


def classify_point(field: FieldDesc, fmap: MapSpec, z: FieldElement,
                   max_elements: int | None = None) -> Periodic | Preperiodic:
    return functional_graph(field, fmap, max_elements).classify(field.index(field.check(z)))


# -- closed forms -----------------------------------------------------------

def _check_args(p: int, n: int, t: int) -> tuple[int, ...]:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    primes = factor_degree(t).primes
    if p in primes:
        raise ValueError(f"p = {p} divides the map degree {t}")
    return primes


def stripped_parts(p: int, n: int, t: int) -> tuple[int, int]:
    """``(d1, d2)``: ``p**n - 1`` and ``p**n + 1`` with every prime of ``t`` removed."""
    primes = _check_args(p, n, t)
    pn = p**n
    d1, d2 = pn - 1, pn + 1
    for q in primes:
        e_minus = predicted_valuation(p, q, n)
        e_plus = predicted_valuation(p, q, 2 * n) - e_minus
        d1 //= q**e_minus
        d2 //= q**e_plus
    return d1, d2


def analytic_count_power(p: int, n: int, t: int) -> int:
    """Number of periodic points of ``z**t`` on F_{p^n}: 0 plus the d-th roots of unity."""
    d1, _ = stripped_parts(p, n, t)
    return d1 + 1


def analytic_count_cheby(p: int, n: int, t: int) -> int:
    d1, d2 = stripped_parts(p, n, t)
    if (d1 + d2) % 2:
        raise AssertionError(f"odd d1 + d2 for p={p}, n={n}, t={t}: valuation bug")
    return (d1 + d2) // 2


def analytic_count(p: int, n: int, fmap: MapSpec) -> int:
    if fmap.kind == POWER:
        return analytic_count_power(p, n, fmap.t)
    return analytic_count_cheby(p, n, fmap.t)


def is_permutation_case(p: int, n: int, fmap: MapSpec) -> bool:
    primes = _check_args(p, n, fmap.t)
    m = n if fmap.kind == POWER else 2 * n
    return all(predicted_valuation(p, q, m) == 0 for q in primes)
