"""
Grade as the first non-vanishing Ext, used to cross-check Koszul grade

For 𝔞 = I + J ⊇ J = ann_P(R), grade(I, R) = min{i : Ext^i_P(P/𝔞, R) ≠ 0}.
The Ext groups come from a free resolution of P/𝔞 over P with Hom(-, R)
applied, i.e. transposed maps read modulo J.
"""

from ..constants.sentinels import AtLeast
from ..errors import UnsupportedInputError
from ..ideals.ideal import IdealData
from ..utils.config import EngineConfig
from .free_resolution import iter_resolution_maps, quotient_presentation
from .homology import homology_vanishes


def grade_ext_oracle(ideal: IdealData, bound: int, *, config: EngineConfig | None = None) -> int | AtLeast:
    """
    min{i <= bound : Ext^i_P(P/(I+J), R) ≠ 0}

    Args:
        ideal: Proper ideal of R
        bound: Largest i tried (at least n for a meaningful answer)
        config: Engine caps

    Returns:
        The grade, or AtLeast(bound + 1) when every Ext up to `bound` vanishes
    """
    if ideal.is_unit:
        raise UnsupportedInputError("grade of the unit ideal is not defined")
    ring = ideal.ring
    modulo = ring.relation_basis
    presentation = quotient_presentation(ring.poly_ring, ideal.lifted.elements)
    maps = iter_resolution_maps(presentation, config=config)

    previous_dual = None  # delta^{i-1}
    pending = next(maps, None)  # d_{i+1}
    rank = 1  # rank of F_i
    for i in range(bound + 1):
        outgoing = pending.transpose() if pending is not None else None
        if not homology_vanishes(outgoing, previous_dual, rank, modulo, config=config):
            return i
        if pending is None:
            # F_{i+1} = 0: every later Ext vanishes
            return AtLeast(bound + 1)
        previous_dual = outgoing
        rank = pending.ncols
        pending = next(maps, None)
    return AtLeast(bound + 1)
