"""
Balls for D^b(S), S = R/I, from the structure of S

Strategies:
    artinian              D^b(S) = <S/rad S>_{ℓℓ(S)}
    regular               D^b(S) = <S>_{dim S + 1}
    nilpotent-filtration  D^b(S) = <S/P>_{n(S)(dim S/P + 1)}, P = nil S, S/P regular
    socle-split           D^b(S) = D^b(S/(0:_S 𝔭)) * D^b(S/𝔭)
"""

from dataclasses import dataclass

from ..constants.strategies import EXAMPLE_PATTERN_STRATEGIES, VALID_STRATEGIES
from ..errors import UnsupportedInputError
from ..ideals.arithmetic import ideal_colon
from ..ideals.dimension import krull_dimension
from ..invariants.artinian import loewy_length
from ..invariants.context import InvariantContext
from ..invariants.regularity import regularity_check
from ..models import BallExpr
from ..utils import console
from .balls import ball_compose, make_ball


@dataclass(frozen=True)
class StrategyOutcome:
    strategy: str
    ball: BallExpr | None
    reason: str

    @property
    def applicable(self) -> bool:
        return self.ball is not None

    def describe(self) -> str:
        if self.ball is None:
            return f"{self.strategy}: not applicable ({self.reason})"
        return f"{self.strategy}: {self.ball.describe()} ({self.reason})"


@dataclass(frozen=True)
class DerivedBall:
    """The chosen ball for D^b(R/I) and every strategy considered"""

    ball: BallExpr
    strategy: str
    outcomes: tuple[StrategyOutcome, ...]

    @property
    def trace(self) -> list[str]:
        lines = [outcome.describe() for outcome in self.outcomes]
        lines.append(f"selected: {self.strategy}")
        return lines


def quotient_label(ctx: InvariantContext) -> str:
    """R-module label of S = R/I"""
    return f"R/{ctx.ideal.describe()}"


def _artinian(ctx: InvariantContext) -> StrategyOutcome:
    if ctx.quotient_dim != 0:
        return StrategyOutcome("artinian", None, f"dim S = {ctx.quotient_dim}")
    try:
        length = loewy_length(ctx.ideal)
    except UnsupportedInputError as e:
        return StrategyOutcome("artinian", None, e.message)
    ball = make_ball("D^b", "k", length, f"artinian: D^b(S) = <S/rad S>_ℓℓ(S) with ℓℓ(S) = {length}")
    return StrategyOutcome("artinian", ball, f"ℓℓ(S) = {length}")


def _regular(ctx: InvariantContext) -> StrategyOutcome:
    try:
        regularity = regularity_check(ctx.ideal)
    except UnsupportedInputError as e:
        return StrategyOutcome("regular", None, e.message)
    if not regularity.regular:
        return StrategyOutcome("regular", None, regularity.evidence)
    radius = regularity.dimension + 1
    ball = make_ball("D^b", quotient_label(ctx), radius, f"regular: D^b(S) = <S>_(dim S + 1) with dim S = {regularity.dimension}")
    return StrategyOutcome("regular", ball, regularity.evidence)


def _nilpotent_filtration(ctx: InvariantContext) -> StrategyOutcome:
    nil = ctx.nil
    if not isinstance(nil.nilpotency_index, int) or nil.radical is None:
        return StrategyOutcome("nilpotent-filtration", None, "nilradical of S not verified")
    if nil.nilpotency_index == 1:
        return StrategyOutcome("nilpotent-filtration", None, "S is reduced")
    try:
        regularity = regularity_check(nil.radical)
    except UnsupportedInputError as e:
        return StrategyOutcome("nilpotent-filtration", None, e.message)
    if not regularity.regular:
        return StrategyOutcome("nilpotent-filtration", None, f"S/P not regular: {regularity.evidence}")
    n = nil.nilpotency_index
    label = f"R/{nil.radical.describe()}"
    inner = make_ball(
        "D^b", label, regularity.dimension + 1,
        f"regular: D^b(S/P) = <S/P>_(dim S/P + 1) with dim S/P = {regularity.dimension}",
    )
    ball = ball_compose("filtration", inner, m=n)
    return StrategyOutcome("nilpotent-filtration", ball, f"P = {nil.radical.describe()}, n(S) = {n}")


def _socle_split(ctx: InvariantContext) -> StrategyOutcome:
    nil = ctx.nil
    if not nil.is_single_prime or nil.radical is None or not isinstance(nil.nilpotency_index, int):
        return StrategyOutcome("socle-split", None, "S needs a unique verified minimal prime")
    prime = nil.radical
    if nil.nilpotency_index == 1:
        return StrategyOutcome("socle-split", None, "S is reduced")
    colon = ideal_colon(ctx.ideal, prime, config=ctx.config)
    if colon.is_unit or colon.same_ideal(ctx.ideal):
        return StrategyOutcome("socle-split", None, "(0 :_S 𝔭) is trivial")
    if krull_dimension(colon) != 0:
        return StrategyOutcome("socle-split", None, "S/(0 :_S 𝔭) is not artinian")
    try:
        regularity = regularity_check(prime)
        length = loewy_length(colon)
    except UnsupportedInputError as e:
        return StrategyOutcome("socle-split", None, e.message)
    if not regularity.regular:
        return StrategyOutcome("socle-split", None, f"S/𝔭 not regular: {regularity.evidence}")
    first = make_ball("D^b", "k", length, f"artinian: D^b(S/(0 :_S 𝔭)) = <k>_{length}")
    second = make_ball(
        "D^b", f"R/{prime.describe()}", regularity.dimension + 1,
        f"regular: D^b(S/𝔭) = <S/𝔭>_{regularity.dimension + 1}",
    )
    ball = ball_compose("star", first, second)
    ball = make_ball(
        ball.category, ball.generator, ball.radius,
        "example-pattern: triangle A/(0:_S 𝔭)A -> A -> A/𝔭A assumed for every S-module A",
        provenance=ball.provenance,
    )
    return StrategyOutcome("socle-split", ball, f"𝔭 = {prime.describe()}, ℓℓ(S/(0 :_S 𝔭)) = {length}")


_STRATEGIES = {
    "artinian": _artinian,
    "regular": _regular,
    "nilpotent-filtration": _nilpotent_filtration,
    "socle-split": _socle_split,
}


def derived_category_ball(ctx: InvariantContext, strategy: str = "auto") -> DerivedBall:
    """
    A ball equal to D^b(R/I).

    Args:
        ctx: Invariants of (R, I)
        strategy: "auto" or one of VALID_STRATEGIES

    Returns:
        DerivedBall; "auto" keeps the smallest radius, earlier strategies
        winning ties

    Raises:
        UnsupportedInputError: no strategy applies
    """
    names = VALID_STRATEGIES if strategy == "auto" else [strategy]
    if strategy != "auto" and strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    console.step(f"Building a ball for D^b(R/I) ({strategy})")

    outcomes = tuple(_STRATEGIES[name](ctx) for name in names)
    applicable = [o for o in outcomes if o.applicable]
    if not applicable:
        reasons = "; ".join(o.describe() for o in outcomes)
        raise UnsupportedInputError(
            f"no derived-ball strategy applies ({reasons}); supply a radius with --derived-radius N",
            details={"strategies": [o.describe() for o in outcomes]},
        )
    best = min(applicable, key=lambda o: o.ball.radius)
    if best.strategy in EXAMPLE_PATTERN_STRATEGIES:
        console.warning(f"{best.strategy} is an example-pattern strategy")
    console.success(f"D^b(R/I) = {best.ball.describe()} via {best.strategy}")
    return DerivedBall(best.ball, best.strategy, outcomes)


def user_derived_ball(radius: int) -> DerivedBall:
    """D^b(R/I) = <G>_radius for a radius the user vouches for"""
    ball = make_ball("D^b", "G", radius, f"user-supplied: D^b(R/I) = <G>_{radius} (--derived-radius)")
    outcome = StrategyOutcome("user", ball, "supplied with --derived-radius")
    return DerivedBall(ball, "user", (outcome,))
