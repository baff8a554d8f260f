"""
Tests for the Gröbner engine: canonicity, membership and certificates
"""

import random

import pytest
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import ResourceCapExceeded
from src.groebner.basis import reduced_groebner
from src.groebner.elimination import eliminate
from src.groebner.engine import spair_certificate
from src.groebner.staircase import monomials_of_degree
from src.groebner.syzygy import syzygies
from src.invariants.jacobian import jacobian_ideal
from src.poly.matrices import PolyMatrix
from src.utils.config import get_config

from .conftest import load_ring, make_ring

EXAMPLE_RINGS = ["dim41", "egdimsing1", "uncountable_cm", "dual_numbers"]


def test_unit_ideal_basis_is_one():
    ring = make_ring("x y")
    basis = reduced_groebner([ring.parse("x*y - 1"), ring.parse("x")], ring.poly_ring)
    assert basis.is_unit
    assert [ring.format(g) for g in basis.elements] == ["1"]


def test_reduced_basis_of_twisted_cubic_passes_certificate():
    ring = make_ring("x y z w")
    gens = [ring.parse(t) for t in ("x*z - y^2", "y*w - z^2", "x*w - y*z")]
    basis = reduced_groebner(gens, ring.poly_ring)
    assert basis.certificate_failures() == []
    assert all(g.LC == 1 for g in basis.elements)


@pytest.mark.slow
@pytest.mark.parametrize("name", EXAMPLE_RINGS)
def test_reduced_basis_is_canonical_under_shuffles(name):
    ring = load_ring(name)
    jac = jacobian_ideal(ring)
    gens = list(jac.generators) + list(ring.relations)
    expected = reduced_groebner(gens, ring.poly_ring)
    rng = random.Random(name)
    for _ in range(100):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert reduced_groebner(shuffled, ring.poly_ring) == expected


@pytest.mark.parametrize("name", EXAMPLE_RINGS)
def test_every_spair_of_example_bases_reduces_to_zero(name):
    ring = load_ring(name)
    assert spair_certificate(list(ring.relation_basis.elements)) == []
    jac = jacobian_ideal(ring)
    assert jac.lifted.certificate_failures() == []


def _random_homogeneous(rng, ring, degree):
    monomials = monomials_of_degree(ring.ngens, degree)
    chosen = rng.sample(monomials, min(len(monomials), rng.randint(1, 3)))
    f = ring.zero
    for m in chosen:
        f += ring({m: QQ(rng.randint(-3, 3) or 1)})
    return f


def _in_span_oracle(f, gens, ring, degree):
    """Dense linear algebra: f ∈ I_degree = span{m·g}"""
    spanning = []
    for g in gens:
        d = sum(g.LM)
        if d <= degree:
            spanning += [g * ring({m: QQ(1)}) for m in monomials_of_degree(ring.ngens, degree - d)]
    columns = monomials_of_degree(ring.ngens, degree)
    index = {m: i for i, m in enumerate(columns)}

    def row(p):
        out = [QQ(0)] * len(columns)
        for m, c in p.terms():
            out[index[m]] = c
        return out

    if not spanning:
        return not f
    base = DomainMatrix([row(p) for p in spanning], (len(spanning), len(columns)), QQ)
    extended = DomainMatrix([row(p) for p in spanning] + [row(f)], (len(spanning) + 1, len(columns)), QQ)
    return base.rank() == extended.rank()


@pytest.mark.slow
def test_membership_agrees_with_linear_algebra_oracle():
    rng = random.Random(20)
    for trial in range(20):
        nvars = rng.randint(1, 3)
        ring = make_ring(" ".join("xyz"[:nvars])).poly_ring
        gens = [_random_homogeneous(rng, ring, rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if g]
        basis = reduced_groebner(gens, ring)
        assert basis.certificate_failures() == []
        for degree in range(7):
            for m in monomials_of_degree(nvars, degree):
                monomial = ring({m: QQ(1)})
                assert basis.contains(monomial) == _in_span_oracle(monomial, gens, ring, degree), (trial, m)


def test_basis_size_cap_is_enforced():
    ring = make_ring("x y z w")
    gens = [ring.parse(t) for t in ("x*z - y^2", "y*w - z^2", "x*w - y*z")]
    tiny = get_config(max_basis_size=1)
    with pytest.raises(ResourceCapExceeded) as info:
        reduced_groebner(gens, ring.poly_ring, config=tiny)
    assert info.value.exit_code == 4


def test_syzygies_of_a_regular_sequence_are_koszul():
    ring = make_ring("x y").poly_ring
    x, y = ring.gens
    matrix = PolyMatrix.from_rows(ring, [[x, y]], 2)
    kernel = syzygies(matrix).as_matrix(ring)
    assert kernel.shape == (2, 1)
    column = kernel.column(0)
    assert column[0] * x + column[1] * y == 0
    assert all(sum(c.LM) == 1 for c in column)


def test_eliminating_the_parameter_of_a_parabola():
    ring = make_ring("t x y")
    gens = [ring.parse("x - t"), ring.parse("y - t^2")]
    kept = eliminate(gens, [1, 2])
    assert [ring.format(g) for g in kept] == ["x^2 - y"]
