"""
Submodules of free modules R^m over a polynomial ring

A vector (f_0, ..., f_{m-1}) is stored as the single ring element
Σ f_i·e_i in a ring with m extra one-hot position variables. The module
order lives on that ring, so the Buchberger engine works unchanged.
"""

from dataclasses import dataclass
from typing import Sequence

from sympy import Symbol
from sympy.polys.rings import PolyElement, PolyRing

from ..poly.orders import ModuleOrder
from ..utils.config import EngineConfig
from .basis import GroebnerBasis
from .engine import buchberger, reduce_polynomial


@dataclass(frozen=True, eq=False)
class ModuleElement:
    """A vector of polynomials in a free module with a fixed rank"""

    coordinates: tuple[PolyElement, ...]

    def __getitem__(self, i: int) -> PolyElement:
        return self.coordinates[i]

    def __iter__(self):
        return iter(self.coordinates)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.coordinates == other.coordinates

    def __hash__(self):
        return hash(self.coordinates)


class FreeModuleEncoding:
    """
    Embedding of R^rank into a ring with position variables `_e0.._e{rank-1}`

    Args:
        base: Ring R (its order is the ring part of the module order)
        rank: Number of positions
        kind: "top" or "pot"
        head: Positions below this index dominate the rest (elimination)
        schreyer: Per tail position (lead monomial, lead position) data
    """

    def __init__(self, base: PolyRing, rank: int, *, kind: str = "top", head: int = 0, schreyer=None):
        self.base = base
        self.rank = rank
        self.nvars = base.ngens
        self.order = ModuleOrder(base.order, self.nvars, rank, kind, head, schreyer)
        symbols = list(base.symbols) + [Symbol(f"_e{i}") for i in range(rank)]
        self.ring = PolyRing(symbols, base.domain, self.order)
        self._units = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]

    def compatible(self, a: tuple, b: tuple) -> bool:
        """Leading monomials sit in the same position"""
        return self.order.position(a) == self.order.position(b)

    def position(self, element: PolyElement) -> int:
        return self.order.position(element.LM)

    def embed_at(self, f: PolyElement, position: int) -> PolyElement:
        unit = self._units[position]
        return self.ring.from_dict({m + unit: c for m, c in f.items()})

    def embed(self, coordinates: Sequence[PolyElement], offset: int = 0) -> PolyElement:
        terms = {}
        for i, f in enumerate(coordinates):
            unit = self._units[offset + i]
            for m, c in f.items():
                terms[m + unit] = c
        return self.ring.from_dict(terms)

    def extract(self, element: PolyElement, start: int = 0, stop: int | None = None) -> tuple[PolyElement, ...]:
        """Coordinates start..stop-1 of an encoded vector"""
        stop = self.rank if stop is None else stop
        buckets = [{} for _ in range(start, stop)]
        n = self.nvars
        for m, c in element.items():
            pos = self.order.position(m)
            if start <= pos < stop:
                buckets[pos - start][m[:n]] = c
        return tuple(self.base.from_dict(b) for b in buckets)


@dataclass(frozen=True, eq=False)
class ModuleGroebnerBasis:
    """Gröbner basis of a submodule of R^rank (optionally plus J·R^rank)"""

    encoding: FreeModuleEncoding
    elements: tuple[PolyElement, ...]

    def contains(self, vector: Sequence[PolyElement]) -> bool:
        return not reduce_polynomial(self.encoding.embed(vector), self.elements)


def submodule_basis(
    vectors: Sequence[Sequence[PolyElement]],
    base: PolyRing,
    rank: int,
    *,
    modulo: GroebnerBasis | None = None,
    kind: str = "top",
    config: EngineConfig | None = None,
) -> ModuleGroebnerBasis:
    """
    Gröbner basis of the submodule spanned by `vectors` + modulo·R^rank.

    Args:
        vectors: Generators, each of length `rank`
        base: Polynomial ring P
        rank: Free module rank
        modulo: Basis of an ideal J; adds J·e_k for every position
        kind: "top" (term over position) or "pot"
        config: Engine caps
    """
    encoding = FreeModuleEncoding(base, rank, kind=kind)
    gens = [encoding.embed(v) for v in vectors]
    if modulo is not None:
        for g in modulo.elements:
            gens.extend(encoding.embed_at(g, k) for k in range(rank))
    elements = buchberger(gens, encoding.ring, config=config, compatible=encoding.compatible)
    return ModuleGroebnerBasis(encoding, tuple(elements))
