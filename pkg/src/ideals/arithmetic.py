"""
Ideal arithmetic over R = P/J: sums, products, powers, intersections,
colons and saturations
"""

from sympy.polys.rings import PolyElement

from ..errors import ResourceCapExceeded
from ..groebner.elimination import intersect_ideals
from ..utils.config import EngineConfig, get_config
from .ideal import IdealData, make_ideal, unit_ideal

VALID_OPERATIONS = ["sum", "product", "power", "intersection", "colon", "saturation"]


def _check_same_ring(*ideals: IdealData) -> None:
    first = ideals[0].ring
    for other in ideals[1:]:
        if other.ring is not first:
            raise ValueError("ideal operations need ideals of the same ring")


def ideal_sum(a: IdealData, b: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    return make_ideal(a.ring, a.generators + b.generators, reduce=True, config=config)


def ideal_product(a: IdealData, b: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    ring = a.ring
    products = [ring.reduce(f * g) for f in a.generators for g in b.generators]
    return make_ideal(ring, products, reduce=True, config=config)


def ideal_power(a: IdealData, e: int, *, config: EngineConfig | None = None) -> IdealData:
    """I^e by repeated products, reducing modulo J after each step"""
    if e < 0:
        raise ValueError("ideal power must be non-negative")
    if e == 0:
        return unit_ideal(a.ring)
    result = a
    for _ in range(e - 1):
        result = ideal_product(result, a, config=config)
        # keep the generator list short
        result = make_ideal(a.ring, list(result.lifted.elements), reduce=True, config=config)
    return result


def ideal_intersection(a: IdealData, b: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    """(I + J) ∩ (I' + J), read in R"""
    ring = a.ring
    gens = intersect_ideals(list(a.lifted.elements), list(b.lifted.elements), ring.poly_ring, config=config)
    return make_ideal(ring, gens, reduce=True, config=config)


def colon_by_element(a: IdealData, h: PolyElement, *, config: EngineConfig | None = None) -> IdealData:
    """(I + J : h) = ((I + J) ∩ (h)) / h"""
    ring = a.ring
    if a.contains(h):
        return unit_ideal(ring)
    meet = intersect_ideals(list(a.lifted.elements), [h], ring.poly_ring, config=config)
    quotients = [g.exquo(h) for g in meet]
    return make_ideal(ring, quotients, reduce=True, config=config)


def ideal_colon(a: IdealData, b: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    """(I : I') = ∩ over generators h of I' of (I : h)"""
    ring = a.ring
    result = unit_ideal(ring)
    for h in b.generators:
        part = colon_by_element(a, h, config=config)
        result = part if result.is_unit else ideal_intersection(result, part, config=config)
    return result


def ideal_saturation(a: IdealData, b: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    """(I : I'^∞), iterating colons until the ideal stops growing"""
    config = config or get_config()
    current = a
    for _ in range(config.saturation_cap):
        nxt = ideal_colon(current, b, config=config)
        if nxt.same_ideal(current):
            return current
        current = nxt
    raise ResourceCapExceeded("saturation iterations", config.saturation_cap)


def ideal_arith(op: str, *args: IdealData, e: int | None = None, config: EngineConfig | None = None) -> IdealData:
    """
    Dispatch one ideal operation.

    Args:
        op: One of VALID_OPERATIONS
        *args: One ideal for "power", two otherwise
        e: Exponent for "power"
        config: Engine caps

    Returns:
        Resulting IdealData with generators reduced modulo J
    """
    _check_same_ring(*args)
    if op == "power":
        if e is None:
            raise ValueError("power needs an exponent")
        (a,) = args
        return ideal_power(a, e, config=config)
    a, b = args
    if op == "sum":
        return ideal_sum(a, b, config=config)
    if op == "product":
        return ideal_product(a, b, config=config)
    if op == "intersection":
        return ideal_intersection(a, b, config=config)
    if op == "colon":
        return ideal_colon(a, b, config=config)
    if op == "saturation":
        return ideal_saturation(a, b, config=config)
    raise ValueError(f"unknown ideal operation {op!r}")
