"""
grade I via Koszul homology

For generators x_1..x_m of I, grade I = m - max{i : H_i(x; R) ≠ 0}. The
answer does not depend on the generating set chosen.
"""

from dataclasses import dataclass

from ..errors import UnsupportedInputError
from ..ideals.dimension import is_weighted_homogeneous
from ..ideals.ideal import IdealData
from ..resolution.homology import koszul_homology_vanishes
from ..utils import console
from ..utils.config import EngineConfig
from .generators import minimal_generators


@dataclass(frozen=True)
class KoszulScan:
    """Homology checked from the top degree down to the first non-zero one"""

    length: int
    nonvanishing: dict[int, bool]

    @property
    def top(self) -> int:
        return max(i for i, nonzero in self.nonvanishing.items() if nonzero)

    @property
    def grade(self) -> int:
        return self.length - self.top


def _koszul_elements(ideal: IdealData, config: EngineConfig | None):
    if ideal.ring.is_homogeneous and is_weighted_homogeneous(ideal):
        return minimal_generators(ideal, config=config)
    return list(ideal.generators)


def koszul_scan(ideal: IdealData, *, elements=None, config: EngineConfig | None = None) -> KoszulScan:
    """
    Scan H_m, H_{m-1}, ... until a non-zero homology module appears.

    Args:
        ideal: Proper ideal of R
        elements: Generators to build the complex on (default: a minimal set)
        config: Engine caps

    Raises:
        UnsupportedInputError: I is the unit ideal
    """
    if ideal.is_unit:
        raise UnsupportedInputError("grade of the unit ideal is not used by any bound; pass a proper ideal")
    if elements is None:
        elements = _koszul_elements(ideal, config)
    elements = list(elements)
    modulo = ideal.ring.relation_basis
    m = len(elements)
    nonvanishing: dict[int, bool] = {}
    for i in range(m, -1, -1):
        # H_0 = R/I is never zero for proper I
        nonzero = i == 0 or not koszul_homology_vanishes(elements, i, modulo, config=config)
        nonvanishing[i] = nonzero
        if nonzero:
            break
    return KoszulScan(m, nonvanishing)


def grade_koszul(ideal: IdealData, *, elements=None, config: EngineConfig | None = None) -> int:
    """
    grade I on R from the Koszul complex.

    Args:
        ideal: Proper ideal of R
        elements: Alternative generating set of I (e.g. with redundant elements)
        config: Engine caps
    """
    if elements is None:
        cached = ideal.cache.get("grade")
        if cached is not None:
            return cached
    console.step(f"Computing grade of {ideal.describe()} via Koszul homology")
    value = koszul_scan(ideal, elements=elements, config=config).grade
    console.success(f"grade {ideal.describe()} = {value}")
    return value if elements is not None else ideal.remember("grade", value)
