"""
Regularity of graded quotients S = P/(I + J)

A graded S is regular exactly when its embedding dimension
n - rank(linear parts of I + J) equals dim S.
"""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from ..errors import UnsupportedInputError
from ..ideals.dimension import is_graded_quotient, krull_dimension
from ..ideals.ideal import IdealData


@dataclass(frozen=True)
class RegularityData:
    regular: bool
    embedding_dimension: int
    dimension: int

    @property
    def evidence(self) -> str:
        relation = "=" if self.regular else "≠"
        return f"embedding dimension {self.embedding_dimension} {relation} dim {self.dimension}"


def _linear_rank(ideal: IdealData) -> int:
    ring = ideal.ring
    domain = ring.domain
    rows = []
    for g in ideal.lifted.elements:
        row = [domain.zero] * ring.n
        for monomial, coeff in g.terms():
            if sum(monomial) == 1:
                row[monomial.index(1)] = coeff
        if any(row):
            rows.append(row)
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), ring.n), domain).rank()


def regularity_check(ideal: IdealData) -> RegularityData:
    """
    Decide whether P/(I + J) is regular at its graded maximal ideal (and so
    everywhere).

    Raises:
        UnsupportedInputError: the quotient is zero or not graded
    """
    if ideal.is_unit:
        raise UnsupportedInputError("the zero ring has no graded maximal ideal")
    if not is_graded_quotient(ideal):
        raise UnsupportedInputError("regularity is decided for weighted-homogeneous quotients only")
    embedding = ideal.ring.n - _linear_rank(ideal)
    dimension = krull_dimension(ideal)
    return RegularityData(embedding == dimension, embedding, dimension)
