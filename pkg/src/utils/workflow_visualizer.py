"""
Workflow visualization utility
"""

from pathlib import Path


def workflow_mermaid() -> str:
    """Mermaid description of the bound workflow graph"""
    from ..workflows.bound_workflow import build_bound_workflow

    workflow = build_bound_workflow()
    return workflow.get_graph().draw_mermaid()


def draw_workflow_graph(output_path: str = "workflow_graph.mmd") -> str:
    """
    Generate and save the workflow graph as Mermaid text

    Args:
        output_path: Path where the diagram will be saved

    Returns:
        Path to the saved diagram
    """
    path = Path(output_path)
    path.write_text(workflow_mermaid() + "\n", encoding="utf-8")
    return str(path)
