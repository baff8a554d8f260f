"""
Workflow nodes for the bound pipeline

Each node reads the BoundState, does one stage of work and returns the keys
it changed together with the next `current_step`.
"""

from ..bounds.derived import derived_category_ball, user_derived_ball
from ..bounds.formulas import singularity_bound, special_bounds
from ..errors import UnsupportedInputError
from ..ideals.ideal import ideal_from_text
from ..invariants.context import build_context
from ..invariants.hypotheses import IN_ANNIHILATOR, find_status, verify_hypotheses
from ..models import BoundState, is_usable
from ..utils import console

# formulas whose radius is read off a ball for D^b(R/I)
DERIVED_FORMULAS = {"main", "depth-zero"}

# formulas that need n(R/I)
NILPOTENT_FORMULAS = {"dimsing1", "countable-cm"}


def compute_invariants(state: BoundState) -> dict:
    """Resolve I and compute the invariants every formula reports"""
    console.step("Computing invariants")
    ring = state["ring"]
    config = state.get("config")
    candidates = None
    if state.get("radical_texts"):
        candidates = [ideal_from_text(ring, text, config=config) for text in state["radical_texts"]]

    ctx = build_context(
        ring,
        state["ideal_text"],
        attestations=state.get("attestations", []),
        radical_candidates=candidates,
        config=config,
    )
    formula = state["formula"]

    # touching a cached property computes it
    ctx.mu
    ctx.grade
    ctx.depth
    ctx.quotient_dim
    if formula != "depth-zero":
        ctx.loewy
    if formula in NILPOTENT_FORMULAS and state.get("nilpotency_override") is None:
        ctx.nil
    if ctx.depth == 0:
        ctx.socle

    console.success(f"μ(I) = {ctx.mu}, grade I = {ctx.grade}, depth R = {ctx.depth}")
    return {
        "context": ctx,
        "current_step": "verify_hypotheses",
    }


def verify_hypotheses_node(state: BoundState) -> dict:
    """Check the hypotheses of the chosen formula"""
    console.step(f"Verifying hypotheses for {state['formula']}")
    hypotheses = verify_hypotheses(state["context"], state["formula"], t_loewy=state.get("t_loewy"))
    for h in hypotheses:
        if h.status == "failed":
            console.warning(f"{h.name}: failed ({h.evidence})")
        else:
            console.success(f"{h.name}: {h.status}")
    return {
        "hypotheses": hypotheses,
        "current_step": route_after_verification({**state, "hypotheses": hypotheses}),
    }


def route_after_verification(state: BoundState) -> str:
    """
    Build a ball for D^b(R/I) only when the formula consumes one: "main"
    with I in the annihilator and no --mod-radius, and "depth-zero".
    """
    formula = state["formula"]
    if formula not in DERIVED_FORMULAS:
        return "assemble_report"
    if formula == "main":
        if state.get("mod_radius") is not None:
            return "assemble_report"
        ann = find_status(state["hypotheses"], IN_ANNIHILATOR)
        if ann is None or not is_usable(ann.status):
            return "assemble_report"
    return "build_derived_ball"


def build_derived_ball(state: BoundState) -> dict:
    """
    Ball for D^b(R/I), from --derived-radius or from the strategies.

    For "depth-zero" a missing ball is not an error: the report falls back
    to the class generator mod(R/soc R).
    """
    if state.get("derived_radius") is not None:
        derived = user_derived_ball(state["derived_radius"])
        console.success(f"D^b(R/I) = {derived.ball.describe()} (supplied)")
        return {
            "derived": derived,
            "strategy_trace": derived.trace,
            "current_step": "assemble_report",
        }

    ctx = state["context"]
    try:
        derived = derived_category_ball(ctx, state.get("strategy", "auto"))
    except UnsupportedInputError as e:
        if state["formula"] != "depth-zero":
            raise
        console.warning(e.message)
        return {
            "derived": None,
            "strategy_trace": e.details.get("strategies", []),
            "warnings": [e.message],
            "current_step": "assemble_report",
        }
    return {
        "derived": derived,
        "strategy_trace": derived.trace,
        "current_step": "assemble_report",
    }


def assemble_report(state: BoundState) -> dict:
    """Evaluate the formula and wrap everything in a BoundReport"""
    console.step("Assembling report")
    ctx = state["context"]
    formula = state["formula"]
    hypotheses = state["hypotheses"]
    derived = state.get("derived")

    if formula in ("main", "main-radius"):
        report = singularity_bound(ctx, hypotheses, derived, mod_radius=state.get("mod_radius"))
    else:
        report = special_bounds(
            formula,
            ctx,
            hypotheses,
            derived=derived,
            t_loewy=state.get("t_loewy"),
            nilpotency_override=state.get("nilpotency_override"),
        )

    extra = [w for w in state.get("warnings", []) if w not in report.warnings]
    if extra:
        report = report.model_copy(update={"warnings": report.warnings + extra})

    if report.is_conditional:
        console.warning("conditional report: no numeric bound")
    else:
        console.success(f"dim D_sg(R) <= {report.dim_bound}")
    return {
        "report": report,
        "current_step": "complete",
    }
