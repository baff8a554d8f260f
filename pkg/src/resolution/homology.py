"""
Homology of complexes of free modules over R = P/J
"""

from itertools import combinations
from typing import Sequence

from sympy.polys.rings import PolyElement, PolyRing

from ..groebner.basis import GroebnerBasis
from ..groebner.modules import submodule_basis
from ..groebner.syzygy import syzygies
from ..poly.matrices import PolyMatrix
from ..utils.config import EngineConfig


def homology_vanishes(
    outgoing: PolyMatrix | None,
    incoming: PolyMatrix | None,
    rank: int,
    modulo: GroebnerBasis,
    *,
    config: EngineConfig | None = None,
) -> bool:
    """
    Decide ker(outgoing) = im(incoming) at a term R^rank of a complex.

    Args:
        outgoing: Map R^rank -> R^c, or None for the zero map
        incoming: Map R^a -> R^rank, or None for the zero map
        rank: Rank of the middle term
        modulo: Reduced basis of J (R = P/J)
        config: Engine caps

    Returns:
        True when the homology at this term is zero
    """
    if rank == 0:
        return True
    ring = modulo.ring
    if outgoing is None or outgoing.nrows == 0:
        kernel = [tuple(ring.one if i == j else ring.zero for i in range(rank)) for j in range(rank)]
    else:
        kernel = [g.coordinates for g in syzygies(outgoing, modulo, config=config).generators]
    if not kernel:
        return True
    columns = incoming.columns if incoming is not None else []
    image = submodule_basis(columns, ring, rank, modulo=modulo, config=config)
    return all(image.contains(vector) for vector in kernel)


def koszul_differential(ring: PolyRing, elements: Sequence[PolyElement], degree: int) -> PolyMatrix:
    """
    Matrix of d_degree: K_degree -> K_{degree-1} of the Koszul complex on
    `elements`. Bases are the subsets of indices in lexicographic order.
    """
    m = len(elements)
    sources = list(combinations(range(m), degree))
    targets = list(combinations(range(m), degree - 1))
    index = {subset: i for i, subset in enumerate(targets)}
    rows = [[ring.zero] * len(sources) for _ in targets]
    for j, subset in enumerate(sources):
        for position, k in enumerate(subset):
            face = subset[:position] + subset[position + 1:]
            entry = elements[k] if position % 2 == 0 else -elements[k]
            rows[index[face]][j] = entry
    return PolyMatrix.from_rows(ring, rows, len(sources))


def koszul_homology_vanishes(
    elements: Sequence[PolyElement],
    degree: int,
    modulo: GroebnerBasis,
    *,
    config: EngineConfig | None = None,
) -> bool:
    """H_degree(elements; R) = 0"""
    ring = modulo.ring
    m = len(elements)
    if degree < 0 or degree > m:
        return True
    outgoing = koszul_differential(ring, elements, degree) if degree >= 1 else None
    incoming = koszul_differential(ring, elements, degree + 1) if degree < m else None
    rank = len(list(combinations(range(m), degree)))
    return homology_vanishes(outgoing, incoming, rank, modulo, config=config)
