"""
Constants module for the bound calculator
"""

from .attestations import (
    VALID_ATTESTATIONS,
    ATTESTATION_DESCRIPTIONS,
    validate_attestations,
    parse_attestations,
    get_attestations_list,
)
from .strategies import (
    VALID_STRATEGIES,
    STRATEGY_CHOICES,
    STRATEGY_DESCRIPTIONS,
    EXAMPLE_PATTERN_STRATEGIES,
    validate_strategy,
)
from .formulas import VALID_FORMULAS, FORMULA_DESCRIPTIONS, validate_formula
from .sentinels import INFINITY, AtLeast, EMPTY_DIMENSION, is_exact, render_value

__all__ = [
    "VALID_ATTESTATIONS",
    "ATTESTATION_DESCRIPTIONS",
    "validate_attestations",
    "parse_attestations",
    "get_attestations_list",
    "VALID_STRATEGIES",
    "STRATEGY_CHOICES",
    "STRATEGY_DESCRIPTIONS",
    "EXAMPLE_PATTERN_STRATEGIES",
    "validate_strategy",
    "VALID_FORMULAS",
    "FORMULA_DESCRIPTIONS",
    "validate_formula",
    "INFINITY",
    "AtLeast",
    "EMPTY_DIMENSION",
    "is_exact",
    "render_value",
]
