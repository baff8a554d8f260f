"""
Singularity-category dimension bounds for presented commutative rings
"""

from .models import BallExpr, BoundReport, HypothesisStatus, InvariantValues
from .workflows import BoundWorkflowExecutor

__all__ = ["BallExpr", "BoundReport", "HypothesisStatus", "InvariantValues", "BoundWorkflowExecutor"]
