"""
Presented rings R = k[X_1..X_n]/J
"""

from dataclasses import dataclass
from typing import Sequence

from sympy import Symbol
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ParseError
from ..groebner.basis import GroebnerBasis, reduced_groebner
from ..groebner.staircase import maximal_independent_size
from ..utils.config import EngineConfig
from .fields import FieldSpec
from .orders import WeightedGrevlex
from .parser import IDENT_RE, format_polynomial, parse_polynomial, split_top_level


@dataclass(frozen=True, eq=False)
class RingPresentation:
    """
    A quotient of a weighted polynomial ring by a relation ideal J

    The reduced Gröbner basis of J and the Krull dimension are computed once,
    in `build_ring`; instances never change afterwards.
    """

    field: FieldSpec
    variables: tuple[str, ...]
    weights: tuple[int, ...]
    relations: tuple[PolyElement, ...]
    poly_ring: PolyRing
    relation_basis: GroebnerBasis
    dimension: int

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def h(self) -> int:
        """Jacobian minor size n - dim R"""
        return self.n - self.dimension

    @property
    def domain(self):
        return self.field.domain

    @property
    def is_polynomial_ring(self) -> bool:
        return self.relation_basis.is_zero

    @property
    def is_zero_ring(self) -> bool:
        return self.relation_basis.is_unit

    @property
    def gens(self) -> tuple[PolyElement, ...]:
        return tuple(self.poly_ring.gens)

    def weighted_degree(self, monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, monomial))

    def is_homogeneous_poly(self, f: PolyElement) -> bool:
        return len({self.weighted_degree(m) for m in f.monoms()}) <= 1

    @property
    def is_homogeneous(self) -> bool:
        return all(self.is_homogeneous_poly(f) for f in self.relation_basis.elements)

    def parse(self, text: str, *, line: int | None = None) -> PolyElement:
        return parse_polynomial(text, self.poly_ring, self.field, line=line)

    def parse_list(self, text: str) -> list[PolyElement]:
        """Comma separated polynomials, e.g. an --ideal value"""
        return [self.parse(piece) for piece in split_top_level(text, ",")]

    def format(self, f: PolyElement) -> str:
        return format_polynomial(f, self.field)

    def reduce(self, f: PolyElement) -> PolyElement:
        """Normal form modulo J"""
        return self.relation_basis.normal_form(f)

    def quotient(self, extra: Sequence[PolyElement], *, config: EngineConfig | None = None) -> "RingPresentation":
        """The ring R/(extra), presented over the same variables"""
        return build_ring(
            self.field,
            self.variables,
            self.weights,
            tuple(self.relation_basis.elements) + tuple(extra),
            config=config,
        )

    def describe(self) -> str:
        rels = ", ".join(self.format(f) for f in self.relations) or "0"
        return f"{self.field}[{', '.join(self.variables)}]/({rels})"


def polynomial_ring(field: FieldSpec, variables: Sequence[str], weights: Sequence[int]) -> PolyRing:
    """sympy ring over the declared variables with weighted grevlex"""
    symbols = [Symbol(name) for name in variables]
    return PolyRing(symbols, field.domain, WeightedGrevlex(weights))


def validate_variables(variables: Sequence[str], weights: Sequence[int] | None) -> tuple[int, ...]:
    if not variables:
        raise ParseError("at least one variable is required")
    for name in variables:
        if not IDENT_RE.match(name):
            raise ParseError(f"invalid variable name {name!r}")
    if len(set(variables)) != len(variables):
        raise ParseError("duplicate variable names")
    if weights is None:
        return (1,) * len(variables)
    if len(weights) != len(variables):
        raise ParseError(f"expected {len(variables)} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise ParseError("weights must be positive integers")
    return tuple(int(w) for w in weights)


def build_ring(
    field: FieldSpec,
    variables: Sequence[str],
    weights: Sequence[int] | None = None,
    relations: Sequence[PolyElement | str] = (),
    *,
    config: EngineConfig | None = None,
) -> RingPresentation:
    """
    Construct a RingPresentation and its cached data.

    Args:
        field: Coefficient field
        variables: Variable names
        weights: Positive weights (default all 1)
        relations: Polynomials or polynomial text generating J
        config: Engine caps for the Gröbner basis of J

    Returns:
        RingPresentation with the reduced basis of J and dim R filled in
    """
    weights = validate_variables(variables, weights)
    ring = polynomial_ring(field, variables, weights)
    polys = []
    for rel in relations:
        if isinstance(rel, str):
            polys.append(parse_polynomial(rel, ring, field))
        else:
            polys.append(rel if rel.ring == ring else rel.set_ring(ring))
    basis = reduced_groebner(polys, ring, config=config)
    dimension = maximal_independent_size(basis.leading_monomials, len(variables))
    return RingPresentation(
        field=field,
        variables=tuple(variables),
        weights=weights,
        relations=tuple(p for p in polys if p),
        poly_ring=ring,
        relation_basis=basis,
        dimension=dimension,
    )
