"""
Balls in D^b(R/I) and D_sg(R), and the bound formulas that combine them
"""

from .balls import COMPOSE_MODES, make_ball, ball_compose, scale_ball, relabel_ball
from .derived import StrategyOutcome, DerivedBall, derived_category_ball, user_derived_ball
from .formulas import (
    CLASS_GENERATOR_LABEL,
    singularity_bound,
    special_bounds,
    liu_radius,
    dimsing0_radius,
    dimsing1_radius,
    countable_cm_radius,
)

__all__ = [
    "COMPOSE_MODES",
    "make_ball",
    "ball_compose",
    "scale_ball",
    "relabel_ball",
    "StrategyOutcome",
    "DerivedBall",
    "derived_category_ball",
    "user_derived_ball",
    "CLASS_GENERATOR_LABEL",
    "singularity_bound",
    "special_bounds",
    "liu_radius",
    "dimsing0_radius",
    "dimsing1_radius",
    "countable_cm_radius",
]
