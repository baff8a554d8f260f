"""
Ideal arithmetic and predicates over presented rings
"""

from .ideal import (
    IdealData,
    make_ideal,
    ideal_from_text,
    zero_ideal,
    unit_ideal,
    variable_ideal,
    maximal_ideal,
)
from .arithmetic import (
    VALID_OPERATIONS,
    ideal_arith,
    ideal_sum,
    ideal_product,
    ideal_power,
    ideal_intersection,
    ideal_colon,
    ideal_saturation,
    colon_by_element,
)
from .membership import membership, radical_membership, contained_in_radical
from .dimension import krull_dimension, is_weighted_homogeneous, is_graded_quotient
from .monomial import monomial_minimal_primes, monomial_height, minimal_vertex_covers

__all__ = [
    "IdealData",
    "make_ideal",
    "ideal_from_text",
    "zero_ideal",
    "unit_ideal",
    "variable_ideal",
    "maximal_ideal",
    "VALID_OPERATIONS",
    "ideal_arith",
    "ideal_sum",
    "ideal_product",
    "ideal_power",
    "ideal_intersection",
    "ideal_colon",
    "ideal_saturation",
    "colon_by_element",
    "membership",
    "radical_membership",
    "contained_in_radical",
    "krull_dimension",
    "is_weighted_homogeneous",
    "is_graded_quotient",
    "monomial_minimal_primes",
    "monomial_height",
    "minimal_vertex_covers",
]
