"""
Elimination of variables and the tag-variable tricks built on it
"""

from typing import Sequence

from sympy import Symbol
from sympy.polys.rings import PolyElement, PolyRing

from ..poly.orders import EliminationOrder, WeightedGrevlex
from ..utils.config import EngineConfig
from .basis import reduced_groebner


def _ring_weights(ring: PolyRing) -> tuple[int, ...]:
    order = ring.order
    if isinstance(order, WeightedGrevlex):
        return order.weights
    return (1,) * ring.ngens


def adjoin_variables(ring: PolyRing, names: Sequence[str], order_factory) -> PolyRing:
    """
    Ring with extra variables appended after the existing ones.

    Args:
        ring: Base ring
        names: New variable names (start with "_" so they never clash)
        order_factory: Callable (weights) -> monomial order for the new ring
    """
    weights = _ring_weights(ring) + (1,) * len(names)
    symbols = list(ring.symbols) + [Symbol(name) for name in names]
    return PolyRing(symbols, ring.domain, order_factory(weights))


def lift(f: PolyElement, target: PolyRing) -> PolyElement:
    """Embed f into a ring with appended variables"""
    pad = (0,) * (target.ngens - f.ring.ngens)
    return target.from_dict({m + pad: c for m, c in f.items()})


def restrict(f: PolyElement, target: PolyRing) -> PolyElement:
    """Inverse of `lift` for elements free of the appended variables"""
    n = target.ngens
    return target.from_dict({m[:n]: c for m, c in f.items()})


def eliminate(
    gens: Sequence[PolyElement],
    keep: Sequence[int],
    *,
    config: EngineConfig | None = None,
) -> list[PolyElement]:
    """
    Generators of (gens) ∩ k[X_keep], returned in the original ring.

    Args:
        gens: Generators of an ideal of P
        keep: Indices of the variables that survive
        config: Engine caps

    Returns:
        Reduced Gröbner basis elements (under the block order) that only
        involve the kept variables
    """
    if not gens:
        return []
    ring = gens[0].ring
    drop = [i for i in range(ring.ngens) if i not in set(keep)]
    if not drop:
        return list(reduced_groebner(gens, ring, config=config).elements)
    order = EliminationOrder(drop, _ring_weights(ring))
    basis = reduced_groebner(gens, ring, order=order, config=config)
    kept = [g for g in basis.elements if all(m[i] == 0 for m in g.monoms() for i in drop)]
    return [g.set_ring(ring) for g in kept]


def intersect_ideals(
    first: Sequence[PolyElement],
    second: Sequence[PolyElement],
    ring: PolyRing,
    *,
    config: EngineConfig | None = None,
) -> list[PolyElement]:
    """
    I ∩ J' via a single tag variable: (t·I + (1 - t)·J') ∩ P.
    """
    if not first or not second:
        return []
    tagged = adjoin_variables(ring, ["_tag"], lambda weights: EliminationOrder([ring.ngens], weights))
    t = tagged.gens[-1]
    gens = [t * lift(f, tagged) for f in first] + [(1 - t) * lift(g, tagged) for g in second]
    basis = reduced_groebner(gens, tagged, config=config)
    n = ring.ngens
    return [restrict(g, ring) for g in basis.elements if all(m[n] == 0 for m in g.monoms())]
