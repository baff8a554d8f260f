"""
Utility modules
"""

from .config import EngineConfig, get_config
from . import console
from .report_utils import VALID_FORMATS, render_report, render_json, render_text, to_payload
from .workflow_visualizer import workflow_mermaid, draw_workflow_graph

__all__ = [
    "EngineConfig",
    "get_config",
    "console",
    "VALID_FORMATS",
    "render_report",
    "render_json",
    "render_text",
    "to_payload",
    "workflow_mermaid",
    "draw_workflow_graph",
]
