"""
Syzygies of polynomial matrices, over P or over a quotient P/J

The kernel of A: R^s → R^t is read off a Gröbner basis of the graph
{(A·v, v)} under an order where the t image positions dominate; tail
positions carry the Schreyer order induced by the leading terms of the
columns of A.
"""

from dataclasses import dataclass

from ..errors import CertificateError
from ..poly.matrices import PolyMatrix
from ..utils.config import EngineConfig
from .basis import GroebnerBasis
from .engine import buchberger
from .modules import FreeModuleEncoding, ModuleElement


@dataclass(frozen=True)
class SyzygyBasis:
    """Generators of ker(A); each one was checked to map to zero"""

    generators: tuple[ModuleElement, ...]
    source_rank: int
    target_rank: int

    def __len__(self):
        return len(self.generators)

    def as_matrix(self, ring) -> PolyMatrix:
        """Generators as columns of an s × (#generators) matrix"""
        return PolyMatrix.from_columns(ring, [g.coordinates for g in self.generators], self.source_rank)


def _column_lead(column, base_order):
    """(lead monomial, lead position) of a column under term-over-position"""
    best = None
    for k, entry in enumerate(column):
        if not entry:
            continue
        key = (base_order(entry.LM), -k)
        if best is None or key > best[0]:
            best = (key, entry.LM, k)
    return None if best is None else (best[1], best[2])


def _reduce_columns(matrix: PolyMatrix, modulo: GroebnerBasis | None) -> PolyMatrix:
    if modulo is None or modulo.is_zero:
        return matrix
    rows = [[modulo.normal_form(a) for a in row] for row in matrix.rows]
    return PolyMatrix.from_rows(matrix.ring, rows, matrix.ncols)


def syzygies(
    matrix: PolyMatrix,
    modulo: GroebnerBasis | None = None,
    *,
    config: EngineConfig | None = None,
) -> SyzygyBasis:
    """
    Generators of ker(matrix), as a submodule of R^s.

    Args:
        matrix: t×s matrix presenting R^s → R^t
        modulo: Reduced basis of J when R = P/J (None for R = P)
        config: Engine caps

    Returns:
        SyzygyBasis; over P/J the generators are representatives in P^s

    Raises:
        ResourceCapExceeded: engine budget exhausted
        CertificateError: a generator failed the evaluation check
    """
    base = matrix.ring
    t, s = matrix.shape
    if s == 0:
        return SyzygyBasis((), 0, t)
    if t == 0:
        identity = [tuple(base.one if i == j else base.zero for i in range(s)) for j in range(s)]
        return SyzygyBasis(tuple(ModuleElement(v) for v in identity), s, 0)

    matrix = _reduce_columns(matrix, modulo)
    schreyer = []
    for j in range(s):
        lead = _column_lead(matrix.column(j), base.order)
        schreyer.append(lead if lead is not None else ((0,) * base.ngens, t))

    encoding = FreeModuleEncoding(base, t + s, kind="top", head=t, schreyer=schreyer)
    gens = []
    for j in range(s):
        gens.append(encoding.embed(matrix.column(j)) + encoding.embed_at(base.one, t + j))
    if modulo is not None:
        for g in modulo.elements:
            gens.extend(encoding.embed_at(g, k) for k in range(t))

    basis = buchberger(gens, encoding.ring, config=config, compatible=encoding.compatible)
    kernel = []
    for element in basis:
        if encoding.position(element) >= t:
            kernel.append(ModuleElement(encoding.extract(element, t, t + s)))

    _check_kernel(matrix, kernel, modulo)
    return SyzygyBasis(tuple(kernel), s, t)


def _check_kernel(matrix: PolyMatrix, kernel, modulo: GroebnerBasis | None) -> None:
    for vector in kernel:
        for value in matrix.apply(vector.coordinates):
            if modulo is not None:
                value = modulo.normal_form(value)
            if value:
                raise CertificateError("syzygy generator does not map to zero")
