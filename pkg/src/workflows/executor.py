"""
Workflow executor for running the bound pipeline
"""

from typing import Sequence

from ..constants.formulas import validate_formula
from ..constants.strategies import validate_strategy
from ..errors import UnsupportedInputError
from ..models import BoundReport, BoundState
from ..poly.ring import RingPresentation
from ..utils.config import EngineConfig, get_config
from .bound_workflow import build_bound_workflow


class BoundWorkflowExecutor:
    """
    Runs the bound workflow for one (R, I, formula) at a time.

    The compiled graph is built once and reused across runs.
    """

    def __init__(self, config: EngineConfig | None = None):
        self.config = config or get_config()
        self.workflow = build_bound_workflow()

    def run(
        self,
        ring: RingPresentation,
        ideal_text: str = "jacobian",
        *,
        formula: str = "main",
        strategy: str = "auto",
        attestations: Sequence[str] = (),
        radical_texts: Sequence[str] = (),
        derived_radius: int | None = None,
        mod_radius: int | None = None,
        t_loewy: int | None = None,
        nilpotency_override: int | None = None,
    ) -> BoundReport:
        """
        Compute a bound for dim D_sg(R).

        Args:
            ring: The presented ring R
            ideal_text: "jacobian", "socle" or a generator list; ignored
                for "depth-zero", which always uses soc R
            formula: Formula identifier (see constants.formulas)
            strategy: Derived-ball strategy, "auto" by default
            attestations: User attestations, verbatim
            radical_texts: Candidate primes for the nilradical of R/I
            derived_radius: Radius of D^b(R/I) the user vouches for
            mod_radius: Radius of mod R/I in D_sg(R) the user vouches for
            t_loewy: Loewy length of T the user vouches for
            nilpotency_override: n(R/I) the user vouches for

        Returns:
            BoundReport
        """
        initial_state = self._create_initial_state(
            ring,
            ideal_text,
            formula=formula,
            strategy=strategy,
            attestations=list(attestations),
            radical_texts=list(radical_texts),
            derived_radius=derived_radius,
            mod_radius=mod_radius,
            t_loewy=t_loewy,
            nilpotency_override=nilpotency_override,
        )
        final_state = self.workflow.invoke(initial_state)
        return final_state["report"]

    def _create_initial_state(self, ring: RingPresentation, ideal_text: str, **options) -> BoundState:
        formula = options["formula"]
        for what, (valid, unknown) in (
            ("formula", validate_formula(formula)),
            ("strategy", validate_strategy(options["strategy"])),
        ):
            if not valid:
                raise UnsupportedInputError(f"unknown {what}: {', '.join(unknown)}")
        for name, least in (("mod_radius", 0), ("t_loewy", 0), ("derived_radius", 1), ("nilpotency_override", 1)):
            value = options.get(name)
            if value is not None and value < least:
                raise UnsupportedInputError(f"{name} must be at least {least}, got {value}")
        if formula == "main-radius" and options["mod_radius"] is None:
            raise UnsupportedInputError("formula main-radius needs --mod-radius N")
        if formula == "depth-zero":
            ideal_text = "socle"
        return {
            "ring": ring,
            "ideal_text": ideal_text,
            "config": self.config,
            "hypotheses": [],
            "strategy_trace": [],
            "warnings": [],
            "current_step": "compute_invariants",
            **options,
        }
