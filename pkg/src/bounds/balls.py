"""
Ball arithmetic: <G>_a * <H>_b = <G ⊕ H>_{a+b} and filtrations
"""

from typing import Sequence

from ..models import BallExpr

COMPOSE_MODES = ["star", "filtration"]


def make_ball(
    category: str,
    generator: Sequence[str] | str,
    radius: int,
    rule: str,
    *,
    class_generator: bool = False,
    provenance: Sequence[str] = (),
) -> BallExpr:
    """
    Build a BallExpr, appending `rule` to the provenance.

    Raises:
        pydantic.ValidationError: radius < 1 or an empty generator
    """
    summands = [generator] if isinstance(generator, str) else list(generator)
    return BallExpr(
        category=category,
        generator=_normalize(summands),
        class_generator=class_generator,
        radius=radius,
        provenance=list(provenance) + [rule],
    )


def _normalize(summands: Sequence[str]) -> list[str]:
    """G ⊕ G → G: balls are closed under finite direct sums"""
    seen: list[str] = []
    for label in summands:
        if label not in seen:
            seen.append(label)
    return seen


def ball_compose(mode: str, a: BallExpr, b: BallExpr | None = None, *, m: int | None = None) -> BallExpr:
    """
    Compose balls.

    Args:
        mode: "star" for <G>_a * <H>_b, "filtration" for an m-step filtration
              with every factor in `a`
        a: First ball (the inner ball for "filtration")
        b: Second ball for "star"
        m: Filtration length for "filtration"

    Returns:
        star: generator G ⊕ H, radius r_a + r_b
        filtration: generator G, radius m · r_a

    Raises:
        ValueError: unknown mode, category mismatch, missing operand or m < 1
    """
    if mode == "star":
        if b is None:
            raise ValueError("star composition needs two balls")
        if a.category != b.category:
            raise ValueError(f"cannot compose a {a.category} ball with a {b.category} ball")
        rule = f"star: {a.describe()} * {b.describe()}"
        return make_ball(
            a.category,
            a.generator + b.generator,
            a.radius + b.radius,
            rule,
            class_generator=a.class_generator or b.class_generator,
            provenance=a.provenance + b.provenance,
        )
    if mode == "filtration":
        if m is None or m < 1:
            raise ValueError("filtration length must be a positive integer")
        rule = f"filtration of length {m} with factors in {a.describe()}"
        return make_ball(
            a.category,
            a.generator,
            m * a.radius,
            rule,
            class_generator=a.class_generator,
            provenance=a.provenance,
        )
    raise ValueError(f"unknown composition mode {mode!r}; expected one of {COMPOSE_MODES}")


def scale_ball(ball: BallExpr, multiplier: int, rule: str, *, category: str = "D_sg") -> BallExpr:
    """<G>_r in D^b(R/I) becomes <G>_{r·multiplier} in D_sg(R)"""
    if multiplier < 1:
        raise ValueError("ball multiplier must be positive")
    return make_ball(
        category,
        ball.generator,
        ball.radius * multiplier,
        rule,
        class_generator=ball.class_generator,
        provenance=ball.provenance,
    )


def relabel_ball(ball: BallExpr, generator: Sequence[str] | str, rule: str) -> BallExpr:
    """Same ball, generator renamed to an object generating the same thick closure"""
    return make_ball(
        ball.category,
        generator,
        ball.radius,
        rule,
        class_generator=ball.class_generator,
        provenance=ball.provenance,
    )
