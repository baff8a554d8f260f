"""
Reduced Gröbner bases of polynomial ideals and normal forms
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from ..utils.config import EngineConfig
from .engine import buchberger, reduce_polynomial, spair_certificate


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """
    The unique reduced Gröbner basis of an ideal under `ring.order`.

    Two bases of the same ring are equal exactly when their ideals are.
    """

    ring: PolyRing
    elements: tuple[PolyElement, ...]
    generators_echo: tuple[PolyElement, ...] = ()

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def leading_monomials(self) -> list[tuple]:
        return [g.LM for g in self.elements]

    @property
    def is_unit(self) -> bool:
        return any(g.is_ground for g in self.elements)

    @property
    def is_zero(self) -> bool:
        return not self.elements

    @property
    def is_monomial(self) -> bool:
        """All elements are single terms (a monomial ideal)"""
        return all(len(g) == 1 for g in self.elements)

    def normal_form(self, f: PolyElement) -> PolyElement:
        """NF(f): no term divisible by a leading monomial; f - NF(f) lies in the ideal"""
        return reduce_polynomial(f, self.elements)

    def contains(self, f: PolyElement) -> bool:
        return not self.normal_form(f)

    def contains_all(self, polys: Iterable[PolyElement]) -> bool:
        return all(self.contains(f) for f in polys)

    def certificate_failures(self) -> list[tuple[int, int]]:
        """Basis pairs whose S-polynomial does not reduce to zero"""
        return spair_certificate(list(self.elements))

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def reduced_groebner(
    gens: Sequence[PolyElement],
    ring: PolyRing | None = None,
    *,
    order: MonomialOrder | None = None,
    config: EngineConfig | None = None,
) -> GroebnerBasis:
    """
    Compute the reduced Gröbner basis of (gens).

    Args:
        gens: Generators, all in one ring
        ring: Ring of the generators (needed when `gens` is empty)
        order: Monomial order; defaults to the ring's own order
        config: Engine caps

    Returns:
        GroebnerBasis over `ring` (re-ordered when `order` is given)

    Raises:
        ResourceCapExceeded: when the engine budget runs out
    """
    if ring is None:
        if not gens:
            raise ValueError("reduced_groebner needs a ring when no generators are given")
        ring = gens[0].ring
    if order is not None and order != ring.order:
        ring = ring.clone(order=order)
    gens = tuple(g.set_ring(ring) if g.ring != ring else g for g in gens)
    elements = buchberger(gens, ring, config=config)
    return GroebnerBasis(ring, tuple(elements), gens)


def normal_form(f: PolyElement, basis: GroebnerBasis) -> PolyElement:
    """Module-level alias of GroebnerBasis.normal_form"""
    return basis.normal_form(f)
