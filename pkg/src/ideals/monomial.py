"""
Minimal primes and height of monomial ideals
"""

from itertools import combinations

from ..errors import UnsupportedInputError
from ..groebner.staircase import support
from .ideal import IdealData


def minimal_vertex_covers(supports: list[frozenset[int]], nvars: int) -> list[frozenset[int]]:
    """
    Minimal sets of variables meeting every support (the minimal primes of
    the radical of a monomial ideal), smallest first.
    """
    covers: list[frozenset[int]] = []
    for size in range(nvars + 1):
        for subset in combinations(range(nvars), size):
            chosen = frozenset(subset)
            if any(cover <= chosen for cover in covers):
                continue
            if all(s & chosen for s in supports):
                covers.append(chosen)
    return covers


def monomial_minimal_primes(ideal: IdealData) -> list[tuple[int, ...]]:
    """
    Minimal primes of I + J when the lifted basis consists of monomials.

    Returns:
        Each prime as the sorted tuple of variable indices generating it

    Raises:
        UnsupportedInputError: a lifted generator is not a monomial
    """
    if not ideal.is_monomial:
        raise UnsupportedInputError(
            "minimal primes are only computed for monomial ideals; supply primes with --radical"
        )
    if ideal.is_unit:
        return []
    supports = [support(m) for m in ideal.lifted.leading_monomials]
    covers = minimal_vertex_covers(supports, ideal.ring.n)
    return sorted((tuple(sorted(c)) for c in covers), key=lambda c: (len(c), c))


def monomial_height(ideal: IdealData) -> int:
    """Height of a proper monomial ideal: the smallest minimal prime"""
    primes = monomial_minimal_primes(ideal)
    if not primes:
        raise UnsupportedInputError("height of the unit ideal is undefined")
    return min(len(p) for p in primes)
