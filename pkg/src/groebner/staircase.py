"""
Combinatorics of leading-term ideals: independent sets and standard monomials
"""

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from ..constants.sentinels import EMPTY_DIMENSION


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """Monomial a divides monomial b"""
    return all(x <= y for x, y in zip(a, b))


def is_standard(monomial: Sequence[int], leads: Iterable[Sequence[int]]) -> bool:
    return not any(divides(lead, monomial) for lead in leads)


def support(monomial: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(monomial) if e)


def is_independent(subset: Iterable[int], leads: Iterable[Sequence[int]]) -> bool:
    """No leading monomial lives entirely in the variables of `subset`"""
    allowed = frozenset(subset)
    return all(not support(lead) <= allowed for lead in leads)


def maximal_independent_size(leads: Sequence[Sequence[int]], nvars: int) -> int:
    """
    Krull dimension of k[x]/in(I): largest variable set independent modulo
    the leading monomials. Returns EMPTY_DIMENSION for the unit ideal.
    """
    leads = [tuple(lead) for lead in leads]
    if any(not any(lead) for lead in leads):
        return EMPTY_DIMENSION
    for size in range(nvars, -1, -1):
        if any(is_independent(subset, leads) for subset in combinations(range(nvars), size)):
            return size
    return 0


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of standard total degree `degree`"""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def standard_monomials(leads: Sequence[Sequence[int]], nvars: int) -> list[tuple[int, ...]]:
    """
    Monomials outside the leading-term ideal, by degree.

    Only terminates when the quotient is finite-dimensional.
    """
    leads = [tuple(lead) for lead in leads]
    start = (0,) * nvars
    if not is_standard(start, leads):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mono in frontier:
            for i in range(nvars):
                grown = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                if grown not in seen and is_standard(grown, leads):
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return sorted(seen, key=lambda m: (sum(m), m))
