"""Exact commutative algebra for Slip-membership criteria and apolarity certificates."""

from .algebra import PolyRing, Polynomial, graded_piece_dim, parse_polynomial, format_polynomial
from .orders import MonomialOrder
from .groebner import (
    ComputationLimitExceeded,
    GroebnerBasis,
    buchberger,
    ideal_member,
    initial_ideal,
    is_groebner,
    normal_form,
)
from .ideals import (
    HilbertTable,
    Ideal,
    constant_hilbert_value,
    generic_hf,
    hilbert_function,
    hilbert_table,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_saturated,
    min_degree_e,
    monomial_radical,
    points_ideal,
    satisfies_condition_asterisk,
    saturate_irrelevant,
)

__version__ = "0.1.0"
