"""
Workflow module for the bound pipeline
"""

from . import nodes
from .bound_workflow import build_bound_workflow
from .executor import BoundWorkflowExecutor

__all__ = ["nodes", "build_bound_workflow", "BoundWorkflowExecutor"]
