"""
Ideals of a presented ring R = P/J, handled through their preimages in P
"""

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from sympy.polys.rings import PolyElement

from ..groebner.basis import GroebnerBasis, reduced_groebner
from ..poly.ring import RingPresentation
from ..utils.config import EngineConfig


@dataclass(frozen=True, eq=False)
class IdealData:
    """
    An ideal I of R: representatives in P plus the basis of I + J.

    `cache` only ever receives values from the invariants package and each
    key is written at most once.
    """

    ring: RingPresentation
    generators: tuple[PolyElement, ...]
    lifted: GroebnerBasis
    label: str | None = None
    cache: dict[str, Any] = field(default_factory=dict, repr=False)

    @property
    def is_unit(self) -> bool:
        return self.lifted.is_unit

    @property
    def is_zero(self) -> bool:
        """I = 0 in R, i.e. I + J = J"""
        return self.lifted == self.ring.relation_basis

    @property
    def is_monomial(self) -> bool:
        return self.lifted.is_monomial

    def contains(self, f: PolyElement) -> bool:
        """f ∈ I + J"""
        return self.lifted.contains(f)

    def contains_ideal(self, other: "IdealData") -> bool:
        return self.lifted.contains_all(other.lifted.elements)

    def same_ideal(self, other: "IdealData") -> bool:
        return self.lifted == other.lifted

    def remember(self, key: str, value: Any) -> Any:
        """Store an invariant once; later writes return the first value"""
        return self.cache.setdefault(key, value)

    def formatted_generators(self) -> list[str]:
        return [self.ring.format(g) for g in self.generators]

    def describe(self) -> str:
        if self.label:
            return self.label
        return "(" + ", ".join(self.formatted_generators()) + ")" if self.generators else "(0)"


def make_ideal(
    ring: RingPresentation,
    gens: Iterable[PolyElement],
    *,
    label: str | None = None,
    reduce: bool = False,
    config: EngineConfig | None = None,
) -> IdealData:
    """
    Build an IdealData.

    Args:
        ring: The presented ring R
        gens: Representatives in P
        label: Display name, e.g. "jacobian"
        reduce: Replace each generator by its normal form modulo J
        config: Engine caps

    Zero generators (modulo J) and repeated generators are dropped.
    """
    kept: list[PolyElement] = []
    for g in gens:
        if g.ring != ring.poly_ring:
            g = g.set_ring(ring.poly_ring)
        representative = ring.reduce(g)
        if not representative:
            continue
        candidate = representative if reduce else g
        if candidate not in kept:
            kept.append(candidate)
    lifted = reduced_groebner(
        list(kept) + list(ring.relation_basis.elements), ring.poly_ring, config=config
    )
    return IdealData(ring=ring, generators=tuple(kept), lifted=lifted, label=label)


def ideal_from_text(ring: RingPresentation, text: str, *, config: EngineConfig | None = None) -> IdealData:
    """Ideal from a comma separated generator list such as "x^2, y - z" """
    return make_ideal(ring, ring.parse_list(text), config=config)


def zero_ideal(ring: RingPresentation) -> IdealData:
    return make_ideal(ring, [], label="(0)")


def unit_ideal(ring: RingPresentation) -> IdealData:
    return make_ideal(ring, [ring.poly_ring.one], label="(1)")


def variable_ideal(ring: RingPresentation, indices: Sequence[int], *, label: str | None = None) -> IdealData:
    """The ideal generated by a subset of the variables"""
    gens = [ring.poly_ring.gens[i] for i in sorted(indices)]
    if label is None:
        label = "(" + (", ".join(ring.variables[i] for i in sorted(indices)) or "0") + ")"
    return make_ideal(ring, gens, label=label)


def maximal_ideal(ring: RingPresentation) -> IdealData:
    """The graded maximal ideal m = (X_1, ..., X_n)"""
    return variable_ideal(ring, range(ring.n), label="m")
