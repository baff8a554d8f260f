"""
LangGraph workflow for the bound pipeline
"""

from langgraph.graph import StateGraph, END

from ..models import BoundState
from . import nodes


def build_bound_workflow():
    """
    Build and compile the bound workflow:

        compute_invariants -> verify_hypotheses -> [build_derived_ball] -> assemble_report

    The derived-ball node only runs for formulas that read their radius from
    a ball of D^b(R/I).

    Returns:
        Compiled workflow graph
    """
    workflow = StateGraph(BoundState)

    workflow.add_node("compute_invariants", nodes.compute_invariants)
    workflow.add_node("verify_hypotheses", nodes.verify_hypotheses_node)
    workflow.add_node("build_derived_ball", nodes.build_derived_ball)
    workflow.add_node("assemble_report", nodes.assemble_report)

    workflow.set_entry_point("compute_invariants")

    workflow.add_edge("compute_invariants", "verify_hypotheses")

    workflow.add_conditional_edges(
        "verify_hypotheses",
        lambda state: state.get("current_step", "assemble_report"),
        {
            "build_derived_ball": "build_derived_ball",
            "assemble_report": "assemble_report",
        }
    )

    workflow.add_edge("build_derived_ball", "assemble_report")
    workflow.add_edge("assemble_report", END)

    return workflow.compile()
