"""Discriminants and indices of pure number fields Q(a^(1/n)) in exact arithmetic."""

from .arith import (
    PrimeFactorization,
    binom_vp,
    factorize,
    is_prime,
    unit_power_valuation,
    vp,
    vp_factorial,
    xn_minus_a_irreducible,
)
from .core import (
    FactoredInteger,
    ValidatedPureField,
    discriminant,
    discriminant_prime_power,
    index_p_valuation,
    index_q_valuation,
    is_monogenic,
    monogenic,
    octic_table,
    theta_index,
    validate,
)
from .errors import HypothesisError, OreRegularityError, PureFieldError, ReducibleError
from .newton import (
    IntPolynomial,
    NewtonPolygon,
    ResidualPolynomial,
    build_polygon,
    is_separable_mod_p,
    lattice_count,
    ore_index_valuation,
    residual_polynomial,
    triangle_count,
)

__version__ = "0.1.0"
