"""Periodic points of power maps and Chebyshev polynomials over finite fields.

Counts are computed two ways, by walking the functional graph of the map on
every element and by closed formulas in the valuations of ``p**n - 1`` and
``p**n + 1``.  Limiting proportions along towers of fields are exact
fractions.
"""

__version__ = "0.1.0"

from .census import (
    OrbitCensus,
    Periodic,
    Preperiodic,
    analytic_count,
    analytic_count_cheby,
    analytic_count_power,
    brute_census,
    classify_point,
    functional_graph,
    is_permutation_case,
)
from .dynmaps import MapSpec, apply, cheb_coeffs, iterate, parse_map, reduce_prime_power
from .ffield import FieldDesc, build_field, fe_pow, is_irreducible, lift_pair
from .limits import (
    LimitResult,
    OutsideScopeError,
    TowerQuery,
    limit,
    limit_cheby,
    limit_power,
    ratio_at,
    render_decimal,
    subsets_IJ,
    tower,
)
from .numthy import (
    factor_degree,
    mult_order,
    predicted_valuation,
    tower_params,
    v_adic,
    valuation_vector,
)

__all__ = [
    "OrbitCensus", "Periodic", "Preperiodic", "analytic_count", "analytic_count_cheby",
    "analytic_count_power", "brute_census", "classify_point", "functional_graph",
    "is_permutation_case", "MapSpec", "apply", "cheb_coeffs", "iterate", "parse_map",
    "reduce_prime_power", "FieldDesc", "build_field", "fe_pow", "is_irreducible", "lift_pair",
    "LimitResult", "OutsideScopeError", "TowerQuery", "limit", "limit_cheby", "limit_power",
    "ratio_at", "render_decimal", "subsets_IJ", "tower", "factor_degree", "mult_order",
    "predicted_valuation", "tower_params", "v_adic", "valuation_vector",
]
