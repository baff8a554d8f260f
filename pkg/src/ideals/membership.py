"""
Membership and radical membership in I + J
"""

from sympy.polys.rings import PolyElement

from ..groebner.basis import reduced_groebner
from ..groebner.elimination import adjoin_variables, lift
from ..poly.orders import WeightedGrevlex
from ..utils.config import EngineConfig
from .ideal import IdealData


def membership(f: PolyElement, ideal: IdealData) -> bool:
    """f ∈ I + J, decided by a zero normal form against the lifted basis"""
    return ideal.contains(f)


def radical_membership(f: PolyElement, ideal: IdealData, *, config: EngineConfig | None = None) -> bool:
    """
    f ∈ √(I + J), decided by 1 ∈ (I + J + (1 - t·f)) in P[t].
    """
    if ideal.is_unit or not f:
        return True
    if ideal.contains(f):
        return True
    ring = ideal.ring.poly_ring
    extended = adjoin_variables(ring, ["_rad"], WeightedGrevlex)
    t = extended.gens[-1]
    gens = [lift(g, extended) for g in ideal.lifted.elements]
    gens.append(extended.one - t * lift(f, extended))
    return reduced_groebner(gens, extended, config=config).is_unit


def contained_in_radical(ideal: IdealData, other: IdealData, *, config: EngineConfig | None = None) -> bool:
    """Every generator of `ideal` lies in √other, i.e. V(other) ⊆ V(ideal)"""
    return all(radical_membership(g, other, config=config) for g in ideal.generators)
