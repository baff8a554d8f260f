"""
Data models and state definitions for the bound pipeline
"""

from typing import Any, Literal, TypedDict

from pydantic import BaseModel, Field, model_validator

Status = Literal["verified", "attested", "unverifiable", "failed"]

# weakest first
STATUS_ORDER: dict[str, int] = {"failed": 0, "unverifiable": 1, "attested": 2, "verified": 3}


def weakest(*statuses: str) -> str:
    """The least trustworthy of several statuses"""
    return min(statuses, key=STATUS_ORDER.__getitem__)


def is_usable(status: str) -> bool:
    """verified or attested: a bound may rely on it"""
    return STATUS_ORDER[status] >= STATUS_ORDER["attested"]


class HypothesisStatus(BaseModel):
    """Outcome of checking one hypothesis of a bound formula"""
    name: str = Field(description="Hypothesis identifier (e.g. 'equidimensional')")
    status: Status = Field(description="verified, attested (user flag), unverifiable or failed")
    evidence: str = Field(description="What was checked, or which attestation was used")


class BallExpr(BaseModel):
    """A ball <G>_r: everything built from G with r - 1 cones"""
    category: Literal["D^b", "D_sg"] = Field(description="D^b(R/I) or D_sg(R)")
    generator: list[str] = Field(min_length=1, description="Direct summands of G (e.g. ['k', 'R/(x, y)'])")
    class_generator: bool = Field(default=False, description="G is a class such as 'mod R/I', not a single object")
    radius: int = Field(ge=1, description="Radius r of the ball")
    provenance: list[str] = Field(min_length=1, description="Rules applied, oldest first")

    @property
    def generator_label(self) -> str:
        return " ⊕ ".join(self.generator)

    def describe(self) -> str:
        return f"<{self.generator_label}>_{self.radius}"


class InvariantValues(BaseModel):
    """Numbers entering the formulas; sentinels are rendered as strings"""
    mu: int | None = Field(default=None, description="Minimal number of generators of I")
    grade: int | None = Field(default=None, description="grade I on R")
    depth: int | None = Field(default=None, description="depth R at the graded maximal ideal")
    dim: int | None = Field(default=None, description="Krull dimension of R")
    quotient_dim: int | None = Field(default=None, description="Krull dimension of R/I")
    loewy: int | str | None = Field(default=None, description="Loewy length of R/I, or 'infinity'")
    nilpotency: int | str | None = Field(default=None, description="n(R/I), or '>= N' when capped")
    loewy_t: int | None = Field(default=None, description="Loewy length of T (conductor quotient of (R/I)_red)")
    type: int | None = Field(default=None, description="Type r(R), reported when depth R = 0")


class BoundReport(BaseModel):
    """Final output of the bound pipeline"""
    ring: str = Field(description="Presentation of R")
    field: str = Field(description="Coefficient field, e.g. 'QQ' or 'GF 7'")
    ideal: str = Field(description="Generators of I (or its label)")
    invariants: InvariantValues
    hypotheses: list[HypothesisStatus] = Field(default=[])
    ball: BallExpr | None = Field(default=None, description="Ball equal to D_sg(R)")
    dim_bound: int | None = Field(default=None, description="radius - 1, absent for conditional reports")
    formula: str = Field(description="Formula identifier")
    conditional_formula: str = Field(default="", description="Symbolic formula with every invariant named")
    strategy_trace: list[str] = Field(default=[], description="Derived-ball strategies tried")
    attestations: list[str] = Field(default=[], description="User attestations, verbatim")
    warnings: list[str] = Field(default=[])

    @model_validator(mode="after")
    def _bound_matches_ball(self):
        if self.dim_bound is not None:
            if self.ball is None or self.ball.class_generator:
                raise ValueError("a numeric bound needs a ball centred at an object")
            if self.dim_bound != self.ball.radius - 1:
                raise ValueError("dim_bound must equal radius - 1")
            if any(h.status == "failed" for h in self.hypotheses):
                raise ValueError("reports with a failed hypothesis carry no numeric bound")
        return self

    @property
    def is_conditional(self) -> bool:
        return self.dim_bound is None

    @property
    def exit_code(self) -> int:
        return 1 if self.is_conditional else 0


class BoundState(TypedDict, total=False):
    """State for the bound workflow"""
    ring: Any  # RingPresentation
    ideal_text: str  # --ideal value: "jacobian", "socle" or generators
    formula: str
    strategy: str
    attestations: list[str]
    radical_texts: list[str]  # --radical values, one prime per entry
    derived_radius: int | None  # user-supplied radius of D^b(R/I)
    mod_radius: int | None  # user-supplied radius of mod R/I in D_sg(R)
    t_loewy: int | None  # attested Loewy length of T
    nilpotency_override: int | None  # attested n(R/I)
    config: Any  # EngineConfig
    context: Any  # invariants.InvariantContext
    hypotheses: list[HypothesisStatus]
    derived: Any  # bounds.DerivedBall, absent when no ball for D^b(R/I) was built
    strategy_trace: list[str]
    warnings: list[str]
    report: BoundReport
    current_step: str
