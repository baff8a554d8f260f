"""
Loewy length, socle and type of graded quotients
"""

from dataclasses import dataclass

from ..constants.sentinels import INFINITY
from ..errors import UnsupportedInputError
from ..groebner.staircase import monomials_of_degree, standard_monomials
from ..ideals.arithmetic import ideal_colon
from ..ideals.dimension import is_graded_quotient, krull_dimension
from ..ideals.ideal import IdealData, maximal_ideal, zero_ideal
from ..poly.ring import RingPresentation
from ..resolution.free_resolution import depth_graded
from ..utils import console
from ..utils.config import EngineConfig
from .generators import mu

SOCLE_LABEL = "soc R"


@dataclass(frozen=True)
class SocleData:
    """soc R = (0 :_R 𝔪); type is μ(soc R), reported only when depth R = 0"""

    ideal: IdealData
    depth: int
    type: int | None


@dataclass(frozen=True)
class ArtinianData:
    loewy_length: int
    socle: IdealData
    type: int


def _monomial(ring, exponents):
    return ring.poly_ring({tuple(exponents): ring.domain.one})


def loewy_length(defining: IdealData) -> int:
    """
    ℓℓ(R/I): least ℓ with 𝔪^ℓ ⊆ I + J.

    𝔪^ℓ is spanned by the monomials of standard degree ℓ, so the search
    checks their normal forms; ℓℓ never exceeds dim_k R/I.

    Raises:
        UnsupportedInputError: R/I is zero, not graded, or not artinian
    """
    cached = defining.cache.get("loewy")
    if cached is not None:
        return cached
    if defining.is_unit:
        raise UnsupportedInputError("the quotient by the unit ideal is the zero ring")
    if not is_graded_quotient(defining):
        raise UnsupportedInputError("Loewy length needs a weighted-homogeneous quotient")
    if krull_dimension(defining) > 0:
        raise UnsupportedInputError(
            f"R/{defining.describe()} is not artinian (dimension {krull_dimension(defining)})"
        )

    ring = defining.ring
    staircase = standard_monomials(defining.lifted.leading_monomials, ring.n)
    for length in range(1, len(staircase) + 1):
        if all(defining.contains(_monomial(ring, e)) for e in monomials_of_degree(ring.n, length)):
            return defining.remember("loewy", length)
    # unreachable for a local artinian quotient
    raise UnsupportedInputError("Loewy length search exceeded the vector-space dimension")


def loewy_length_or_infinity(defining: IdealData):
    """ℓℓ(R/I), or INFINITY when R/I has positive dimension"""
    if not defining.is_unit and krull_dimension(defining) > 0:
        return INFINITY
    return loewy_length(defining)


def socle(ring: RingPresentation, *, config: EngineConfig | None = None) -> SocleData:
    """
    soc R = (0 :_R 𝔪) and, when depth R = 0, the type r(R) = μ(soc R).

    Raises:
        UnsupportedInputError: R is not graded
    """
    if not ring.is_homogeneous:
        raise UnsupportedInputError("the socle is computed for weighted-homogeneous rings only")
    console.step("Computing soc R = (0 : m)")
    colon = ideal_colon(zero_ideal(ring), maximal_ideal(ring), config=config)
    ideal = IdealData(ring, colon.generators, colon.lifted, label=SOCLE_LABEL)
    depth = depth_graded(ring, config=config)
    type_ = mu(ideal, config=config) if depth == 0 else None
    console.success(f"soc R has {len(ideal.generators)} generators, depth {depth}")
    return SocleData(ideal, depth, type_)



def artinian_data(ring: RingPresentation, *, config: EngineConfig | None = None) -> ArtinianData:
    """ℓℓ(R), soc R and r(R) of a graded artinian ring"""
    data = socle(ring, config=config)
    length = loewy_length(zero_ideal(ring))
    return ArtinianData(length, data.ideal, mu(data.ideal, config=config))
