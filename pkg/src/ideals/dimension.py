"""
Krull dimension and weighted homogeneity
"""

from ..groebner.staircase import maximal_independent_size
from .ideal import IdealData


def krull_dimension(ideal: IdealData) -> int:
    """
    dim P/(I + J): the largest set of variables independent modulo the
    leading monomials of the lifted basis. EMPTY_DIMENSION when I + J = P.
    """
    cached = ideal.cache.get("dimension")
    if cached is not None:
        return cached
    value = maximal_independent_size(ideal.lifted.leading_monomials, ideal.ring.n)
    return ideal.remember("dimension", value)


def is_weighted_homogeneous(ideal: IdealData) -> bool:
    """Every generator has all of its terms in one weighted degree"""
    ring = ideal.ring
    return all(ring.is_homogeneous_poly(g) for g in ideal.generators)


def is_graded_quotient(ideal: IdealData) -> bool:
    """I + J is weighted homogeneous, so P/(I + J) is graded"""
    ring = ideal.ring
    return all(ring.is_homogeneous_poly(g) for g in ideal.lifted.elements)
