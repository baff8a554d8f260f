"""
Bound formulas for dim D_sg(R), assembled into BoundReports
"""

from typing import Sequence

from ..constants.sentinels import INFINITY, render_value
from ..constants.strategies import EXAMPLE_PATTERN_STRATEGIES
from ..errors import CertificateError, UnsupportedInputError
from ..invariants.context import InvariantContext
from ..invariants.hypotheses import IN_ANNIHILATOR, REDUCED_REGULAR, SING_IN_V, find_status
from ..models import BallExpr, BoundReport, HypothesisStatus, is_usable
from .balls import make_ball, relabel_ball, scale_ball
from .derived import DerivedBall

CLASS_GENERATOR_LABEL = "filt{R/p : p ∈ V(I)}"


def ideal_echo(ctx: InvariantContext) -> str:
    gens = "(" + ", ".join(ctx.ideal.formatted_generators()) + ")" if ctx.ideal.generators else "(0)"
    label = ctx.ideal.label
    return f"{label} = {gens}" if label and label != gens else gens


def _all_usable(hypotheses: Sequence[HypothesisStatus]) -> bool:
    return all(is_usable(h.status) for h in hypotheses)


def _report(
    ctx: InvariantContext,
    formula: str,
    hypotheses: Sequence[HypothesisStatus],
    ball: BallExpr | None,
    conditional: str,
    *,
    trace: Sequence[str] = (),
    warnings: Sequence[str] = (),
    invariant_updates: dict | None = None,
) -> BoundReport:
    numeric = ball is not None and not ball.class_generator and _all_usable(hypotheses)
    if ball is not None and not ball.class_generator and not numeric:
        ball = None
    invariants = ctx.values()
    if invariant_updates:
        invariants = invariants.model_copy(update=invariant_updates)
    return BoundReport(
        ring=ctx.ring.describe(),
        field=str(ctx.ring.field),
        ideal=ideal_echo(ctx),
        invariants=invariants,
        hypotheses=list(hypotheses),
        ball=ball,
        dim_bound=ball.radius - 1 if numeric else None,
        formula=formula,
        conditional_formula=conditional,
        strategy_trace=list(trace),
        attestations=sorted(ctx.attestations),
        warnings=list(ctx.warnings) + list(warnings),
    )


def _multiplier(ctx: InvariantContext) -> int:
    value = ctx.multiplier
    if value < 1:
        raise CertificateError(f"μ(I) - grade I + 1 = {value} < 1: grade exceeds μ")
    return value


def singularity_bound(
    ctx: InvariantContext,
    hypotheses: Sequence[HypothesisStatus],
    derived: DerivedBall | None = None,
    *,
    mod_radius: int | None = None,
) -> BoundReport:
    """
    D_sg(R) = <mod R/I>_{μ(I) - grade I + 1} and its consequences.

    With I ⊆ ann D_sg(R) usable and a ball for D^b(R/I) (or a supplied
    radius N of mod R/I in D_sg(R)), the ball is scaled by μ - grade + 1
    (respectively (N + 1)(μ - grade + 1)). With only Sing R ⊆ V(I) usable,
    the report carries the class-generator ball and no number.

    Args:
        ctx: Invariants of (R, I)
        hypotheses: Output of verify_hypotheses for "main"
        derived: Ball for D^b(R/I)
        mod_radius: radius_{D_sg(R)}(mod R/I), attested by the user
    """
    mult = _multiplier(ctx)
    formula = "main-radius" if mod_radius is not None else "main"
    sing = find_status(hypotheses, SING_IN_V)
    ann = find_status(hypotheses, IN_ANNIHILATOR)
    trace = derived.trace if derived is not None else []
    warnings = []

    if mod_radius is not None:
        conditional = (
            f"dim D_sg(R) <= (radius(mod R/I) + 1)(μ(I) - grade I + 1) - 1 "
            f"= ({mod_radius} + 1)·({ctx.mu} - {ctx.grade} + 1) - 1"
        )
    else:
        r = derived.ball.radius if derived is not None else "r"
        conditional = (
            f"dim D_sg(R) <= r·(μ(I) - grade I + 1) - 1 with D^b(R/I) = <G>_r: "
            f"{r}·({ctx.mu} - {ctx.grade} + 1) - 1"
        )

    ball = None
    if ann is not None and is_usable(ann.status) and _all_usable(hypotheses):
        if mod_radius is not None:
            radius = (mod_radius + 1) * mult
            ball = make_ball(
                "D_sg", "G", radius,
                f"main: mod R/I ⊆ <G>_{mod_radius + 1}, D_sg(R) = <mod R/I>_{mult}: "
                f"radius ({mod_radius} + 1)·{mult} = {radius}",
                provenance=[f"user-supplied: radius(mod R/I) = {mod_radius} (--mod-radius)"],
            )
        elif derived is not None:
            ball = scale_ball(
                derived.ball, mult,
                f"main: D_sg(R) = <mod R/I>_(μ - grade + 1), radius {derived.ball.radius}·{mult} = {derived.ball.radius * mult}",
            )
            if derived.strategy in EXAMPLE_PATTERN_STRATEGIES:
                warnings.append(f"derived ball uses the example-pattern strategy {derived.strategy}")
    elif sing is not None and is_usable(sing.status) and not any(h.status == "failed" for h in hypotheses):
        ball = make_ball(
            "D_sg", CLASS_GENERATOR_LABEL, mult,
            f"main: Sing R ⊆ V(I) gives D_sg(R) = <filt R/p>_(μ - grade + 1), radius {mult}",
            class_generator=True,
        )
        warnings.append("only Sing R ⊆ V(I) is usable: class-generator ball, no numeric bound")
    return _report(ctx, formula, hypotheses, ball, conditional, trace=trace, warnings=warnings)


def liu_radius(mu: int, depth: int, loewy: int) -> int:
    return (mu - depth + 1) * loewy


def dimsing0_radius(mu: int, grade: int, loewy: int) -> int:
    return loewy * (mu - grade + 1)


def dimsing1_radius(nilpotency: int, loewy_t_plus_one: int, mu: int, grade: int) -> int:
    return 2 * nilpotency * loewy_t_plus_one * (mu - grade + 1)


def countable_cm_radius(loewy, mu: int, dim: int, dimsing1: int | None):
    """
    min{(ℓℓ(R/I) + 1)(μ(I) - dim R + 1), dimsing1 radius}; the first operand
    is INFINITY when R/I is not artinian.
    """
    first = INFINITY if loewy is INFINITY else (loewy + 1) * (mu - dim + 1)
    if dimsing1 is None:
        return first
    return min(first, dimsing1)


def _artinian_inputs(ctx: InvariantContext) -> int | None:
    loewy = ctx.loewy
    return loewy if isinstance(loewy, int) else None


def _liu(ctx, hypotheses, **_):
    loewy = _artinian_inputs(ctx)
    depth = ctx.depth
    conditional = f"D_sg(R) = <k>_((μ(I) - depth R + 1)·ℓℓ(R/I)) = <k>_(({ctx.mu} - {depth} + 1)·{render_value(ctx.loewy)})"
    ball = None
    if loewy is not None and depth is not None:
        radius = liu_radius(ctx.mu, depth, loewy)
        if radius >= 1:
            ball = make_ball("D_sg", "k", radius, f"liu: ({ctx.mu} - {depth} + 1)·{loewy} = {radius}")
    return _report(ctx, "liu", hypotheses, ball, conditional)


def _dimsing0(ctx, hypotheses, **_):
    loewy = _artinian_inputs(ctx)
    mult = _multiplier(ctx)
    conditional = f"D_sg(R) = <(R/I)/rad(R/I)>_(ℓℓ(R/I)(μ(I) - grade I + 1)) = <k>_({render_value(ctx.loewy)}·{mult})"
    ball = None
    if loewy is not None:
        radius = dimsing0_radius(ctx.mu, ctx.grade, loewy)
        ball = make_ball("D_sg", "k", radius, f"dimsing0: {loewy}·({ctx.mu} - {ctx.grade} + 1) = {radius}")
    return _report(ctx, "dimsing0", hypotheses, ball, conditional)


def _dimsing1_inputs(ctx, hypotheses, t_loewy, nilpotency_override):
    """(n(S), ℓℓ(T) + 1, generator summands, updates) or None when unavailable"""
    nil = ctx.nil
    updates = {}
    if nilpotency_override is not None:
        n = nilpotency_override
        updates["nilpotency"] = n
    elif isinstance(nil.nilpotency_index, int):
        n = nil.nilpotency_index
    else:
        return None
    regular = find_status(hypotheses, REDUCED_REGULAR)
    # a verified regular S_red forces T = 0 whatever the user supplied
    t_zero = regular is not None and is_usable(regular.status) and (t_loewy is None or regular.status == "verified")
    if t_zero:
        factor = 1
    elif t_loewy is not None:
        factor = t_loewy + 1
        updates["loewy_t"] = t_loewy
    else:
        return None
    if nil.radical is not None and isinstance(nil.nilpotency_index, int):
        summands = [f"R/{nil.radical.describe()}"]
    else:
        summands = ["(R/I)_red"]
    if factor > 1:
        summands.append("T/rad T")
    return n, factor, summands, updates


def _dimsing1(ctx, hypotheses, *, t_loewy=None, nilpotency_override=None, **_):
    mult = _multiplier(ctx)
    conditional = "dim D_sg(R) <= 2n(S)(ℓℓ(T) + 1)(μ(I) - grade I + 1) - 1"
    inputs = _dimsing1_inputs(ctx, hypotheses, t_loewy, nilpotency_override)
    ball, updates = None, {}
    if inputs is not None:
        n, factor, summands, updates = inputs
        radius = dimsing1_radius(n, factor, ctx.mu, ctx.grade)
        conditional += f" = 2·{n}·{factor}·{mult} - 1"
        ball = make_ball("D_sg", summands, radius, f"dimsing1: 2·{n}·{factor}·({ctx.mu} - {ctx.grade} + 1) = {radius}")
    return _report(ctx, "dimsing1", hypotheses, ball, conditional, invariant_updates=updates)


def _countable_cm(ctx, hypotheses, *, t_loewy=None, nilpotency_override=None, **_):
    loewy = ctx.loewy
    if loewy is None:
        raise UnsupportedInputError("countable-cm needs the Loewy length of a graded R/I")
    inputs = _dimsing1_inputs(ctx, hypotheses, t_loewy, nilpotency_override)
    second, updates, summands = None, {}, None
    if inputs is not None:
        n, factor, summands, updates = inputs
        second = dimsing1_radius(n, factor, ctx.mu, ctx.grade)
    radius = countable_cm_radius(loewy, ctx.mu, ctx.dim, second)
    first = INFINITY if loewy is INFINITY else (loewy + 1) * (ctx.mu - ctx.dim + 1)
    conditional = (
        "dim D_sg(R) <= min{(ℓℓ(R/I) + 1)(μ(I) - dim R + 1), 2n(S)(ℓℓ(T) + 1)(μ(I) - grade I + 1)} - 1 "
        f"= min{{{render_value(first)}, {render_value(second)}}} - 1"
    )
    ball = None
    if radius is not INFINITY and radius >= 1:
        generator = "k" if radius == first else summands
        ball = make_ball(
            "D_sg", generator, radius,
            f"countable-cm: min{{{render_value(first)}, {render_value(second)}}} = {radius}",
        )
    trace = [f"first operand: {render_value(first)}", f"second operand: {render_value(second)}"]
    return _report(ctx, "countable-cm", hypotheses, ball, conditional, trace=trace, invariant_updates=updates)


def _depth_zero(ctx, hypotheses, *, derived: DerivedBall | None = None, **_):
    conditional = "D_sg(R) = <mod(R/soc R)>_1; radius from a ball of D^b(R/soc R)"
    ball = None
    trace = derived.trace if derived is not None else []
    if derived is not None:
        ball = scale_ball(derived.ball, 1, "depth zero: syzygies are killed by soc R, so D_sg(R) = <mod(R/soc R)>_1")
        if derived.strategy == "regular":
            ball = relabel_ball(ball, "k", "soc R ≅ k^r gives R/soc R ≅ Σk^r in D_sg(R)")
        conditional += f": {derived.ball.radius}·1"
    else:
        ball = make_ball("D_sg", "mod(R/soc R)", 1, "depth zero: D_sg(R) = <mod(R/soc R)>_1", class_generator=True)
    return _report(ctx, "depth-zero", hypotheses, ball, conditional, trace=trace)


_SPECIAL = {
    "liu": _liu,
    "dimsing0": _dimsing0,
    "dimsing1": _dimsing1,
    "countable-cm": _countable_cm,
    "depth-zero": _depth_zero,
}


def special_bounds(
    formula: str,
    ctx: InvariantContext,
    hypotheses: Sequence[HypothesisStatus],
    *,
    derived: DerivedBall | None = None,
    t_loewy: int | None = None,
    nilpotency_override: int | None = None,
) -> BoundReport:
    """
    Evaluate one of the specialised formulas.

    Args:
        formula: "liu", "dimsing0", "dimsing1", "countable-cm" or "depth-zero"
        ctx: Invariants of (R, I); for "depth-zero" I is soc R
        hypotheses: Output of verify_hypotheses for the same formula
        derived: Ball for D^b(R/soc R) ("depth-zero" only)
        t_loewy: Attested ℓℓ(T) when (R/I)_red is not verified regular
        nilpotency_override: Attested n(R/I)

    Returns:
        BoundReport; conditional (no dim_bound) when a hypothesis is not usable
    """
    if formula not in _SPECIAL:
        raise ValueError(f"unknown special formula {formula!r}")
    return _SPECIAL[formula](
        ctx,
        hypotheses,
        derived=derived,
        t_loewy=t_loewy,
        nilpotency_override=nilpotency_override,
    )
