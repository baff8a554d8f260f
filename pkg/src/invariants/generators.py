"""
Minimal generators and μ(I) of weighted-homogeneous ideals

Graded Nakayama: μ(I) = dim_k I/(𝔪I + J). Each generator is reduced modulo
a basis of 𝔪I + J and the coefficient vectors are compared by exact rank.
"""

from typing import Sequence

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from ..errors import UnsupportedInputError
from ..groebner.basis import reduced_groebner
from ..ideals.dimension import is_weighted_homogeneous
from ..ideals.ideal import IdealData
from ..utils.config import EngineConfig


def _require_graded(ideal: IdealData) -> None:
    if not ideal.ring.is_homogeneous:
        raise UnsupportedInputError(
            "μ needs weighted-homogeneous relations; supply weights that make J homogeneous"
        )
    if not is_weighted_homogeneous(ideal):
        raise UnsupportedInputError(
            "μ needs weighted-homogeneous generators; supply weights that make I homogeneous"
        )


def _rank(rows: Sequence[dict], domain) -> int:
    columns = sorted({m for row in rows for m in row}, reverse=True)
    if not rows or not columns:
        return 0
    index = {m: j for j, m in enumerate(columns)}
    dense = [[domain.zero] * len(columns) for _ in rows]
    for i, row in enumerate(rows):
        for m, c in row.items():
            dense[i][index[m]] = c
    return DomainMatrix(dense, (len(rows), len(columns)), domain).rank()


def minimal_generators(ideal: IdealData, *, config: EngineConfig | None = None) -> list[PolyElement]:
    """
    A minimal generating set chosen greedily from the given generators.

    Generators are visited by ascending weighted degree (input order within a
    degree) and kept when independent, modulo 𝔪I + J, of those kept before.

    Raises:
        UnsupportedInputError: I or J is not weighted homogeneous
    """
    _require_graded(ideal)
    if ideal.is_unit:
        return [ideal.ring.poly_ring.one]
    ring = ideal.ring
    if not ideal.generators:
        return []

    products = [ring.reduce(x * g) for g in ideal.generators for x in ring.gens]
    basis = reduced_groebner(
        [p for p in products if p] + list(ring.relation_basis.elements),
        ring.poly_ring,
        config=config,
    )
    ordered = sorted(
        enumerate(ideal.generators),
        key=lambda pair: (ring.weighted_degree(pair[1].LM), pair[0]),
    )

    kept: list[PolyElement] = []
    rows: list[dict] = []
    for _, g in ordered:
        residue = basis.normal_form(g)
        if not residue:
            continue
        candidate = rows + [dict(residue.terms())]
        if _rank(candidate, ring.domain) == len(candidate):
            rows = candidate
            kept.append(g)
    return kept


def mu(ideal: IdealData, *, config: EngineConfig | None = None) -> int:
    """
    μ(I): the minimal number of generators of I in R.

    Raises:
        UnsupportedInputError: I or J is not weighted homogeneous
    """
    cached = ideal.cache.get("mu")
    if cached is not None:
        return cached
    return ideal.remember("mu", len(minimal_generators(ideal, config=config)))
