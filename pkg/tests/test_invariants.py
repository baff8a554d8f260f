"""
Tests for the Jacobian ideal, μ, grade, Loewy length, socle, nilpotency and regularity
"""

import random

import pytest

from src.constants.sentinels import INFINITY, AtLeast
from src.errors import UnsupportedInputError
from src.groebner.staircase import monomials_of_degree
from src.ideals.arithmetic import ideal_colon
from src.ideals.ideal import ideal_from_text, make_ideal, variable_ideal
from src.ideals.monomial import monomial_height
from src.invariants import (
    artinian_data,
    build_context,
    grade_koszul,
    jacobian_data,
    jacobian_ideal,
    loewy_length,
    loewy_length_or_infinity,
    mu,
    nilpotency_index,
    regularity_check,
    socle,
)
from src.utils.config import get_config

from .conftest import load_ring, make_ring, random_form, random_monomial_ideal_text, random_polynomial


def test_jacobian_of_the_cusp(dual_numbers):
    jac = jacobian_ideal(dual_numbers)
    assert sorted(jac.formatted_generators()) == ["x", "y^2"]
    assert jac.describe() == "jac(R)"


def test_jacobian_of_the_uncountable_cm_ring(uncountable_cm):
    jac = jacobian_ideal(uncountable_cm)
    assert jac.same_ideal(ideal_from_text(uncountable_cm, "x^2, y^3"))
    assert mu(jac) == 2


def test_jacobian_of_coordinate_axes(egdimsing1):
    data = jacobian_data(egdimsing1)
    assert data.h == 2
    assert data.raw_minors == 18
    assert data.ideal.same_ideal(ideal_from_text(egdimsing1, "x^2, y^2, z^2"))
    assert mu(data.ideal) == 3
    assert grade_koszul(data.ideal) == 1


def test_jacobian_of_the_dim41_ring(dim41):
    jac = jacobian_ideal(dim41)
    expected = ideal_from_text(dim41, "x^4, x^2*y, x*z^2, x*z*w, x*w^2, y^2")
    assert jac.same_ideal(expected)
    assert mu(jac) == 6
    assert grade_koszul(jac) == 0


def test_jacobian_of_a_polynomial_ring_is_the_unit_ideal(polynomial_ring_3):
    data = jacobian_data(polynomial_ring_3)
    assert data.h == 0
    assert data.ideal.is_unit
    assert "h = 0" in data.note


def test_mu_ignores_redundant_generators():
    ring = make_ring("x y")
    assert mu(ideal_from_text(ring, "x, y, x + y, x^2*y")) == 2


def test_loewy_length_of_the_cusp_jacobian(dual_numbers):
    assert loewy_length(jacobian_ideal(dual_numbers)) == 2


def test_loewy_length_of_a_colon_in_dim41(dim41):
    jac = jacobian_ideal(dim41)
    colon = ideal_colon(jac, variable_ideal(dim41, [0, 1]))
    assert colon.same_ideal(ideal_from_text(dim41, "x^3, x*y, x*z, x*w, z^2, z*w, w^2, y^2"))
    assert loewy_length(colon) == 3


def test_loewy_length_needs_an_artinian_quotient(egdimsing1):
    jac = jacobian_ideal(egdimsing1)
    with pytest.raises(UnsupportedInputError, match="not artinian"):
        loewy_length(jac)
    assert loewy_length_or_infinity(jac) is INFINITY


def test_socle_of_depth_zero_rings(depth_zero):
    n, ring = depth_zero
    data = socle(ring)
    assert data.depth == 0
    assert data.type == 1
    expected = "x" if n == 2 else f"x^{n - 1}"
    assert data.ideal.same_ideal(ideal_from_text(ring, expected))
    assert data.ideal.describe() == "soc R"


def test_socle_type_is_omitted_for_positive_depth(dual_numbers):
    data = socle(dual_numbers)
    assert data.depth == 1
    assert data.type is None


def test_nilpotency_of_coordinate_axes_jacobian(egdimsing1):
    nil = nilpotency_index(jacobian_ideal(egdimsing1))
    assert nil.nilpotency_index == 2
    assert nil.radical.describe() == "(x, y, z)"
    assert nil.status == "verified"


def test_nilpotency_of_the_uncountable_cm_jacobian(uncountable_cm):
    nil = nilpotency_index(jacobian_ideal(uncountable_cm))
    assert nil.nilpotency_index == 4
    assert nil.verified_radical == nil.candidates


def test_nilpotency_search_respects_the_cap(uncountable_cm):
    nil = nilpotency_index(jacobian_ideal(uncountable_cm), cap=2)
    assert nil.nilpotency_index == AtLeast(2)
    assert nil.verified_radical == ()
    assert nil.status == "unverifiable"


def test_non_variable_candidates_need_attestation(uncountable_cm):
    jac = jacobian_ideal(uncountable_cm)
    candidate = ideal_from_text(uncountable_cm, "x + y, y^2")
    nil = nilpotency_index(jac, [candidate])
    assert nil.nilpotency_index is None
    assert nil.status == "unverifiable"


def test_candidate_must_contain_the_ideal(egdimsing1):
    jac = jacobian_ideal(egdimsing1)
    nil = nilpotency_index(jac, [variable_ideal(egdimsing1, [0, 1])])
    assert nil.status == "failed"
    assert "not contained" in nil.checks[0].note


def test_regularity_of_quotients(egdimsing1, dim41):
    regular = regularity_check(variable_ideal(egdimsing1, [0, 1, 2]))
    assert regular.regular
    assert regular.embedding_dimension == regular.dimension == 1

    singular = regularity_check(jacobian_ideal(dim41))
    assert not singular.regular
    assert singular.embedding_dimension == 4
    assert singular.dimension == 2


def test_context_computes_lazily(egdimsing1):
    ctx = build_context(egdimsing1, "jacobian", config=get_config())
    assert ctx.ideal_kind == "jacobian"
    assert ctx.values().mu is None
    assert ctx.mu == 3
    assert ctx.grade == 1
    assert ctx.multiplier == 3
    assert ctx.depth == 2
    values = ctx.values()
    assert (values.mu, values.grade, values.depth, values.dim) == (3, 1, 2, 2)
    assert values.nilpotency is None


def test_context_on_a_custom_monomial_ideal(egdimsing1):
    ctx = build_context(egdimsing1, "x, y")
    assert ctx.ideal_kind == "custom"
    assert ctx.height is not None
    assert ctx.quotient_dim == 2


def test_context_rejects_regular_rings(polynomial_ring_3):
    with pytest.raises(UnsupportedInputError, match="regular"):
        build_context(polynomial_ring_3, "jacobian")
    with pytest.raises(UnsupportedInputError, match="unit ideal"):
        build_context(polynomial_ring_3, "1")


def test_socle_keyword_seeds_depth(depth_zero):
    _, ring = depth_zero
    ctx = build_context(ring, "socle")
    assert ctx.ideal_kind == "socle"
    assert "depth" in ctx.__dict__
    assert ctx.depth == 0


def test_artinian_data_of_a_complete_intersection():
    ring = make_ring("x y", ["x^2", "y^2"])
    data = artinian_data(ring)
    assert data.loewy_length == 3
    assert data.socle.same_ideal(ideal_from_text(ring, "x*y"))
    assert data.type == 1


def test_grade_never_exceeds_height():
    variables = ["x", "y", "z", "w"]
    ring = make_ring(" ".join(variables))
    rng = random.Random(37)
    for _ in range(10):
        ideal = ideal_from_text(ring, random_monomial_ideal_text(rng, variables, rng.randint(1, 3)))
        grade = grade_koszul(ideal)
        assert grade <= monomial_height(ideal), ideal.describe()
        # polynomial rings are Cohen-Macaulay
        assert grade == monomial_height(ideal), ideal.describe()


def _rescaled(rng, ring, gens):
    return [g.mul_ground(ring.field.coefficient(rng.choice([-3, -2, -1, 2, 3]), rng.choice([1, 2, 5]))) for g in gens]


@pytest.mark.parametrize("name", ["dim41", "egdimsing1", "uncountable_cm", "dual_numbers"])
def test_mu_ignores_generator_order_and_units(name):
    ring = load_ring(name)
    jac = jacobian_ideal(ring)
    expected = mu(jac)
    rng = random.Random(name)
    for _ in range(5):
        gens = list(jac.generators)
        rng.shuffle(gens)
        assert mu(make_ideal(ring, _rescaled(rng, ring, gens))) == expected


def test_mu_of_random_forms_ignores_order_and_units(polynomial_ring_3):
    ring = polynomial_ring_3
    rng = random.Random(43)
    for _ in range(10):
        gens = [random_form(rng, ring, rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        expected = mu(make_ideal(ring, gens))
        rng.shuffle(gens)
        assert mu(make_ideal(ring, _rescaled(rng, ring, gens))) == expected


SOCLE_RINGS = [
    ("x y", ["x^2", "y^2"]),
    ("x y", ["x^2 - y^2", "x*y"]),
    ("x y z", ["x^2", "y^2", "z^2", "x*y"]),
    ("x y", ["x^3", "x^2*y"]),
    ("x y", ["x^2 - y^3"]),
]


@pytest.mark.parametrize("variables, relations", SOCLE_RINGS)
def test_socle_is_exactly_what_m_kills(variables, relations):
    weights = [3, 2] if relations == ["x^2 - y^3"] else None
    ring = make_ring(variables, relations, weights)
    soc = socle(ring).ideal

    def killed(f):
        return all(not ring.reduce(x * f) for x in ring.gens)

    assert all(killed(s) for s in soc.generators)
    for degree in range(7):
        for exponents in monomials_of_degree(ring.n, degree):
            monomial = ring.poly_ring({exponents: ring.domain.one})
            assert soc.contains(monomial) == killed(monomial), ring.format(monomial)
    rng = random.Random(variables + str(relations))
    for _ in range(30):
        f = random_polynomial(rng, ring, 4)
        assert soc.contains(f) == killed(f), ring.format(f)
