"""
Free resolutions over the ambient polynomial ring P

Each step takes syzygies of the previous map, then prunes unit entries
(a unit at B[r][c] splits off a trivial summand: column r of the previous
map and row r / column c of the new one disappear). On graded input the
result is the minimal graded free resolution.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy.polys.rings import PolyElement, PolyRing

from ..errors import CertificateError, ResourceCapExceeded, UnsupportedInputError
from ..groebner.syzygy import syzygies
from ..poly.matrices import PolyMatrix
from ..poly.ring import RingPresentation
from ..utils import console
from ..utils.config import EngineConfig, get_config


@dataclass(frozen=True)
class FreeResolution:
    """
    F_0 <- F_1 <- ... <- F_l

    `maps[i]` is the matrix of F_{i+1} -> F_i, `twists[i]` the degrees of
    the basis of F_i.
    """

    maps: tuple[PolyMatrix, ...]
    twists: tuple[tuple[int, ...], ...]
    minimal: bool
    complete: bool = True

    @property
    def betti_numbers(self) -> list[int]:
        return [len(t) for t in self.twists]

    @property
    def projective_dimension(self) -> int:
        return len(self.maps)

    def graded_betti(self) -> list[dict[int, int]]:
        """Per homological degree, {internal degree: multiplicity}"""
        table = []
        for twists in self.twists:
            row: dict[int, int] = {}
            for d in twists:
                row[d] = row.get(d, 0) + 1
            table.append(dict(sorted(row.items())))
        return table


def _is_unit(f: PolyElement) -> bool:
    return bool(f) and f.is_ground


def _drop_column(matrix: PolyMatrix, c: int) -> PolyMatrix:
    cols = [matrix.column(j) for j in range(matrix.ncols) if j != c]
    return PolyMatrix.from_columns(matrix.ring, cols, matrix.nrows)


def prune_units(previous: PolyMatrix, current: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """
    Split off every trivial summand u: F_{i+1} -> F_i with u a unit.

    Args:
        previous: Map F_i -> F_{i-1}
        current: Map F_{i+1} -> F_i with previous·current = 0

    Returns:
        (previous', current') with no constant entries left in current'
    """
    ring = current.ring
    domain = ring.domain
    while True:
        pivot = next(
            ((r, c) for c in range(current.ncols) for r in range(current.nrows) if _is_unit(current.rows[r][c])),
            None,
        )
        if pivot is None:
            return previous, current
        r, c = pivot
        u = current.rows[r][c].LC
        rows = []
        for k in range(current.nrows):
            if k == r:
                continue
            factor = current.rows[k][c]
            row = []
            for j in range(current.ncols):
                if j == c:
                    continue
                entry = current.rows[k][j]
                if factor and current.rows[r][j]:
                    entry = entry - (current.rows[r][j] * factor).quo_ground(u)
                row.append(entry)
            rows.append(row)
        previous = _drop_column(previous, r)
        current = PolyMatrix.from_rows(ring, rows, current.ncols - 1)
        current = _drop_zero_columns(current)


def _drop_zero_columns(matrix: PolyMatrix) -> PolyMatrix:
    cols = [col for col in matrix.columns if any(col)]
    return PolyMatrix.from_columns(matrix.ring, cols, matrix.nrows)


def _is_homogeneous_matrix(matrix: PolyMatrix, weights: Sequence[int], row_twists: Sequence[int]) -> bool:
    return _column_degrees(matrix, weights, row_twists) is not None


def _column_degrees(matrix: PolyMatrix, weights: Sequence[int], row_twists: Sequence[int]) -> list[int] | None:
    """Degrees making every column homogeneous, or None when impossible"""
    degrees = []
    for j in range(matrix.ncols):
        found = set()
        for k in range(matrix.nrows):
            for m in matrix.rows[k][j].monoms():
                found.add(sum(w * e for w, e in zip(weights, m)) + row_twists[k])
        if len(found) > 1:
            return None
        degrees.append(found.pop() if found else 0)
    return degrees


def _check_composite(previous: PolyMatrix, current: PolyMatrix) -> None:
    if current.ncols and previous.ncols and not (previous @ current).is_zero():
        raise CertificateError("resolution maps do not compose to zero")


def iter_resolution_maps(
    presentation: PolyMatrix,
    *,
    minimize: bool = True,
    config: EngineConfig | None = None,
) -> Iterator[PolyMatrix]:
    """
    Lazily yield d_1, d_2, ... of a free resolution of coker(presentation).

    Each map is final once yielded; the iteration stops when a kernel is zero.
    """
    current = _drop_zero_columns(presentation)
    while current.ncols:
        nxt = syzygies(current, config=config).as_matrix(current.ring)
        nxt = _drop_zero_columns(nxt)
        if minimize:
            current, nxt = prune_units(current, nxt)
        _check_composite(current, nxt)
        yield current
        current = nxt


def minimal_free_resolution(
    presentation: PolyMatrix,
    weights: Sequence[int],
    *,
    target_twists: Sequence[int] | None = None,
    length_cap: int | None = None,
    config: EngineConfig | None = None,
) -> FreeResolution:
    """
    Minimal graded free resolution of coker(presentation) over P.

    Args:
        presentation: t×s matrix F_1 -> F_0
        weights: Variable weights defining the grading
        target_twists: Degrees of the basis of F_0 (default all 0)
        length_cap: Stop after this many maps (resolution marked incomplete)
        config: Engine caps

    Raises:
        UnsupportedInputError: presentation is not homogeneous
    """
    config = config or get_config()
    cap = length_cap if length_cap is not None else config.resolution_length_cap
    twists = [tuple(target_twists) if target_twists is not None else (0,) * presentation.nrows]
    if not _is_homogeneous_matrix(presentation, weights, twists[0]):
        raise UnsupportedInputError("minimal resolutions need a weighted-homogeneous presentation")

    maps: list[PolyMatrix] = []
    complete = True
    for matrix in iter_resolution_maps(presentation, config=config):
        if len(maps) >= cap:
            complete = False
            break
        maps.append(matrix)
        twists.append(tuple(_column_degrees(matrix, weights, twists[-1])))
    return FreeResolution(tuple(maps), tuple(twists), minimal=True, complete=complete)


def quotient_presentation(ring: PolyRing, generators: Sequence[PolyElement]) -> PolyMatrix:
    """1×s matrix whose cokernel is P/(generators)"""
    return PolyMatrix.from_rows(ring, [list(generators)], len(generators))


def resolve_ring(ring: RingPresentation, *, config: EngineConfig | None = None) -> FreeResolution:
    """Minimal graded resolution of R = P/J over P"""
    if ring.is_zero_ring:
        raise UnsupportedInputError("the zero ring has no graded resolution")
    if not ring.is_homogeneous:
        raise UnsupportedInputError("relations must be weighted homogeneous; supply weights")
    console.step("Resolving R over the ambient polynomial ring")
    presentation = quotient_presentation(ring.poly_ring, ring.relation_basis.elements)
    resolution = minimal_free_resolution(presentation, ring.weights, config=config)
    if not resolution.complete:
        raise ResourceCapExceeded("free resolution length", len(resolution.maps))
    console.success(f"Betti numbers {resolution.betti_numbers}")
    return resolution


def depth_graded(ring: RingPresentation, *, config: EngineConfig | None = None) -> int:
    """
    depth of R at the graded maximal ideal, n - pd_P(R) (Auslander-Buchsbaum)

    Raises:
        UnsupportedInputError: non-homogeneous relations
    """
    return ring.n - resolve_ring(ring, config=config).projective_dimension
