"""
Tests for ball arithmetic, derived-ball strategies and the bound formulas
"""

from itertools import product

import pytest
from pydantic import ValidationError

from src.bounds import (
    ball_compose,
    countable_cm_radius,
    derived_category_ball,
    dimsing0_radius,
    dimsing1_radius,
    liu_radius,
    make_ball,
    scale_ball,
    singularity_bound,
    special_bounds,
    user_derived_ball,
)
from src.constants.sentinels import INFINITY
from src.errors import UnsupportedInputError
from src.invariants import build_context, verify_hypotheses
from src.models import BallExpr, BoundReport, InvariantValues

from .conftest import load_ring, make_ring


def test_star_adds_radii_and_merges_generators():
    a = make_ball("D^b", "k", 3, "artinian")
    b = make_ball("D^b", "R/(x, y)", 3, "regular")
    c = ball_compose("star", a, b)
    assert c.radius == 6
    assert c.generator == ["k", "R/(x, y)"]
    assert c.provenance[:2] == ["artinian", "regular"]
    assert c.describe() == "<k ⊕ R/(x, y)>_6"


def test_star_of_equal_generators_keeps_one_summand():
    a = make_ball("D^b", "k", 1, "a")
    assert ball_compose("star", a, a).generator == ["k"]


def test_filtration_multiplies_radius():
    inner = make_ball("D^b", "R/(x, y, z)", 2, "regular")
    assert ball_compose("filtration", inner, m=2).radius == 4


@pytest.mark.parametrize(
    "mode, kwargs",
    [("star", {}), ("filtration", {"m": 0}), ("sum", {})],
)
def test_bad_compositions_rejected(mode, kwargs):
    a = make_ball("D^b", "k", 1, "a")
    with pytest.raises(ValueError):
        ball_compose(mode, a, **kwargs)


def test_categories_must_match():
    a = make_ball("D^b", "k", 1, "a")
    b = make_ball("D_sg", "k", 1, "b")
    with pytest.raises(ValueError, match="cannot compose"):
        ball_compose("star", a, b)


def test_ball_radius_must_be_positive():
    with pytest.raises(ValidationError):
        make_ball("D^b", "k", 0, "a")


def test_radius_helpers():
    assert liu_radius(2, 1, 2) == 4
    assert dimsing0_radius(2, 1, 2) == 4
    assert dimsing1_radius(2, 1, 3, 1) == 12
    assert dimsing1_radius(4, 1, 2, 1) == 16


def test_countable_cm_radius_takes_the_minimum():
    assert countable_cm_radius(INFINITY, 2, 2, 16) == 16
    assert countable_cm_radius(INFINITY, 2, 2, None) is INFINITY
    assert countable_cm_radius(3, 2, 1, None) == 8
    assert countable_cm_radius(3, 2, 1, 5) == 5


def test_report_bound_must_match_ball():
    ball = BallExpr(category="D_sg", generator=["k"], radius=4, provenance=["test"])
    fields = dict(ring="R", field="QQ", ideal="(x)", invariants=InvariantValues(), formula="liu")
    assert BoundReport(ball=ball, dim_bound=3, **fields).exit_code == 0
    with pytest.raises(ValidationError):
        BoundReport(ball=ball, dim_bound=4, **fields)
    with pytest.raises(ValidationError):
        BoundReport(ball=None, dim_bound=3, **fields)
    assert BoundReport(**fields).is_conditional


def test_auto_strategy_for_dim41_uses_the_socle_split(dim41):
    ctx = build_context(dim41, "jacobian")
    derived = derived_category_ball(ctx)
    assert derived.strategy == "socle-split"
    assert derived.ball.radius == 6
    assert derived.trace[-1] == "selected: socle-split"
    assert any(line.startswith("nilpotent-filtration: <") for line in derived.trace)
    assert any("example-pattern" in rule for rule in derived.ball.provenance)


def test_auto_strategy_for_coordinate_axes(egdimsing1):
    derived = derived_category_ball(build_context(egdimsing1, "jacobian"))
    assert derived.strategy == "nilpotent-filtration"
    assert derived.ball.radius == 4
    assert derived.ball.generator == ["R/(x, y, z)"]


def test_artinian_strategy_for_the_cusp(dual_numbers):
    derived = derived_category_ball(build_context(dual_numbers, "jacobian"))
    assert derived.strategy == "artinian"
    assert derived.ball.radius == 2
    assert derived.ball.generator == ["k"]


def test_forced_strategy_that_does_not_apply(dim41):
    ctx = build_context(dim41, "jacobian")
    with pytest.raises(UnsupportedInputError) as info:
        derived_category_ball(ctx, "regular")
    assert len(info.value.details["strategies"]) == 1
    with pytest.raises(ValueError):
        derived_category_ball(ctx, "bogus")


def test_user_derived_ball():
    derived = user_derived_ball(5)
    assert derived.ball.radius == 5
    assert derived.strategy == "user"


def test_main_bound_for_dim41(dim41):
    ctx = build_context(dim41, "jacobian", attestations=["half-cm-local"])
    hypotheses = verify_hypotheses(ctx, "main")
    report = singularity_bound(ctx, hypotheses, derived_category_ball(ctx))
    assert report.ball.radius == 42
    assert report.dim_bound == 41
    assert report.attestations == ["half-cm-local"]
    assert any("example-pattern" in w for w in report.warnings)


def test_main_bound_without_attestation_is_a_class_ball(dim41):
    ctx = build_context(dim41, "jacobian")
    report = singularity_bound(ctx, verify_hypotheses(ctx, "main"))
    assert report.dim_bound is None
    assert report.ball.class_generator
    assert report.ball.radius == 7
    assert report.exit_code == 1


def test_main_bound_from_a_supplied_mod_radius(egdimsing1):
    ctx = build_context(egdimsing1, "jacobian")
    report = singularity_bound(ctx, verify_hypotheses(ctx, "main"), mod_radius=1)
    assert report.formula == "main-radius"
    assert report.dim_bound == 5


def test_dimsing1_for_coordinate_axes(egdimsing1):
    ctx = build_context(egdimsing1, "jacobian")
    report = special_bounds("dimsing1", ctx, verify_hypotheses(ctx, "dimsing1"))
    assert report.dim_bound == 11
    assert report.invariants.nilpotency == 2


def test_dimsing1_with_an_attested_nilpotency(egdimsing1):
    ctx = build_context(egdimsing1, "jacobian")
    report = special_bounds(
        "dimsing1", ctx, verify_hypotheses(ctx, "dimsing1"), nilpotency_override=3,
    )
    assert report.dim_bound == 2 * 3 * 1 * 3 - 1
    assert report.invariants.nilpotency == 3


def test_countable_cm_for_the_uncountable_example(uncountable_cm):
    ctx = build_context(uncountable_cm, "jacobian", attestations=["countable-cm-type"])
    report = special_bounds("countable-cm", ctx, verify_hypotheses(ctx, "countable-cm"))
    assert report.invariants.loewy == "infinity"
    assert report.dim_bound == 15
    assert report.strategy_trace == ["first operand: infinity", "second operand: 16"]


def test_countable_cm_without_attestation_is_conditional(uncountable_cm):
    ctx = build_context(uncountable_cm, "jacobian")
    report = special_bounds("countable-cm", ctx, verify_hypotheses(ctx, "countable-cm"))
    assert report.dim_bound is None
    assert "min{infinity, 16}" in report.conditional_formula


def _artinian_instances():
    """(label, ring factory, ideal, attestations): R Cohen-Macaulay, R/I artinian"""
    return [
        ("cusp jac", lambda: load_ring("dual_numbers"), "jacobian", []),
        ("plane squares", lambda: make_ring("x y"), "x^2, y^2", []),
        ("space m", lambda: make_ring("x y z"), "x, y, z", []),
        ("node jac", lambda: make_ring("x y", ["x*y"]), "jacobian", []),
        ("uncountable m", lambda: load_ring("uncountable_cm"), "x, y, z", ["in-annihilator"]),
    ]


@pytest.mark.parametrize(
    "label, factory, ideal, attestations", _artinian_instances(), ids=[c[0] for c in _artinian_instances()],
)
def test_liu_agrees_with_dimsing0_when_grade_equals_depth(label, factory, ideal, attestations):
    ring = factory()
    ctx = build_context(ring, ideal, attestations=attestations)
    assert ctx.grade == ctx.depth
    liu = special_bounds("liu", ctx, verify_hypotheses(ctx, "liu"))
    dimsing0 = special_bounds("dimsing0", ctx, verify_hypotheses(ctx, "dimsing0"))
    assert liu.dim_bound is not None
    assert liu.dim_bound == dimsing0.dim_bound


def test_depth_zero_bound(depth_zero):
    n, ring = depth_zero
    ctx = build_context(ring, "socle")
    derived = derived_category_ball(ctx)
    report = special_bounds("depth-zero", ctx, verify_hypotheses(ctx, "depth-zero"), derived=derived)
    assert report.dim_bound == 2 * (n - 1) - 1
    if n == 2:
        assert derived.strategy == "regular"
        assert report.ball.generator == ["k"]


def test_depth_zero_without_a_derived_ball_is_a_class_ball(depth_zero):
    _, ring = depth_zero
    ctx = build_context(ring, "socle")
    report = special_bounds("depth-zero", ctx, verify_hypotheses(ctx, "depth-zero"))
    assert report.ball.class_generator
    assert report.dim_bound is None


def test_unknown_special_formula(dual_numbers):
    ctx = build_context(dual_numbers, "jacobian")
    with pytest.raises(ValueError):
        special_bounds("main", ctx, [])


def test_formula_radii_never_shrink_when_an_invariant_grows():
    for mu, lower, loewy in product(range(1, 6), range(0, 4), range(1, 6)):
        if lower > mu:
            continue
        grade = depth = lower
        base = dimsing0_radius(mu, grade, loewy)
        assert dimsing0_radius(mu + 1, grade, loewy) >= base
        assert dimsing0_radius(mu, grade, loewy + 1) >= base
        base = liu_radius(mu, depth, loewy)
        assert liu_radius(mu + 1, depth, loewy) >= base
        assert liu_radius(mu, depth, loewy + 1) >= base
        for n, t in product(range(1, 4), range(1, 4)):
            base = dimsing1_radius(n, t, mu, grade)
            assert dimsing1_radius(n + 1, t, mu, grade) >= base
            assert dimsing1_radius(n, t + 1, mu, grade) >= base
            assert dimsing1_radius(n, t, mu + 1, grade) >= base


def test_countable_cm_radius_never_shrinks():
    for loewy, mu, dim, other in product(range(1, 5), range(1, 5), range(0, 3), [None, 4, 9]):
        if mu < dim:
            continue
        base = countable_cm_radius(loewy, mu, dim, other)
        assert countable_cm_radius(loewy + 1, mu, dim, other) >= base
        assert countable_cm_radius(loewy, mu + 1, dim, other) >= base
        if other is not None:
            assert countable_cm_radius(loewy, mu, dim, other + 1) >= base
            assert countable_cm_radius(INFINITY, mu, dim, other) >= base


def test_ball_radii_never_shrink_under_composition():
    for r, s, m in product(range(1, 4), range(1, 4), range(1, 4)):
        a = make_ball("D^b", "k", r, "a")
        grown = make_ball("D^b", "k", r + 1, "a")
        b = make_ball("D^b", "R/(x)", s, "b")
        assert ball_compose("star", grown, b).radius >= ball_compose("star", a, b).radius >= max(r, s)
        assert ball_compose("filtration", grown, m=m).radius >= ball_compose("filtration", a, m=m).radius
        assert ball_compose("filtration", a, m=m + 1).radius >= ball_compose("filtration", a, m=m).radius
        assert scale_ball(a, m + 1, "x").radius >= scale_ball(a, m, "x").radius >= r
