"""
The Jacobian ideal jac(R): h×h minors of the Jacobian matrix, h = n - dim R
"""

from dataclasses import dataclass

from ..errors import UnsupportedInputError
from ..ideals.ideal import IdealData, make_ideal, unit_ideal
from ..poly.matrices import PolyMatrix, jacobian_matrix, minors
from ..poly.ring import RingPresentation
from ..utils import console
from ..utils.config import EngineConfig
from .generators import minimal_generators

JACOBIAN_LABEL = "jac(R)"


@dataclass(frozen=True)
class JacobianData:
    """The Jacobian ideal together with how it was obtained"""

    ideal: IdealData
    matrix: PolyMatrix | None
    h: int
    raw_minors: int
    note: str | None = None


def jacobian_data(ring: RingPresentation, *, config: EngineConfig | None = None) -> JacobianData:
    """
    Compute jac(R) and keep the matrix and minor count for reports.

    Minors are reduced modulo J, zeros dropped, made monic and deduplicated.
    For weighted-homogeneous rings the survivors are thinned to a minimal
    generating set.

    Raises:
        UnsupportedInputError: R is the zero ring
    """
    if ring.is_zero_ring:
        raise UnsupportedInputError("the zero ring has no Jacobian ideal")
    h = ring.h
    if h == 0 or not ring.relations:
        ideal = unit_ideal(ring)
        ideal = IdealData(ring, ideal.generators, ideal.lifted, label=JACOBIAN_LABEL)
        return JacobianData(ideal, None, 0, 0, note="regular presentation: h = 0, jac(R) = R")

    console.step(f"Computing {h}x{h} minors of the Jacobian matrix")
    matrix = jacobian_matrix(ring.relations, ring.poly_ring)
    raw = minors(matrix, h)
    reduced = []
    for minor in raw:
        nf = ring.reduce(minor)
        if nf:
            reduced.append(nf.monic())

    ideal = make_ideal(ring, reduced, label=JACOBIAN_LABEL, config=config)
    if ring.is_homogeneous and all(ring.is_homogeneous_poly(g) for g in ideal.generators):
        gens = minimal_generators(ideal, config=config)
        order = ring.poly_ring.order
        gens = sorted(gens, key=lambda g: order(g.LM), reverse=True)
        ideal = IdealData(ring, tuple(gens), ideal.lifted, label=JACOBIAN_LABEL)
    console.success(f"jac(R) has {len(ideal.generators)} generators from {len(raw)} minors")
    return JacobianData(ideal, matrix, h, len(raw))


def jacobian_ideal(ring: RingPresentation, *, config: EngineConfig | None = None) -> IdealData:
    """jac(R) as an ideal of R"""
    return jacobian_data(ring, config=config).ideal
