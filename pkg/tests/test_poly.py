"""
Tests for polynomial parsing, printing, fields and ring files
"""

import random

import pytest

from src.errors import ParseError
from src.poly.arith import poly_arith
from src.poly.fields import parse_field
from src.poly.matrices import PolyMatrix, determinant, jacobian_matrix, minors
from src.poly.ring_file import emit_ring_file, parse_ring_file

from .conftest import make_ring, random_polynomial


def test_parse_and_print_cusp():
    ring = make_ring("x y", weights=[3, 2])
    f = ring.parse("X^2 - Y^3".lower())
    assert dict(f.terms()) == {(2, 0): 1, (0, 3): -1}
    assert ring.format(f) == "x^2 - y^3"


def test_parse_rational_coefficients_and_parentheses():
    ring = make_ring("x y")
    f = ring.parse("1/2*(x + y)^2 - x*y")
    assert ring.format(f) == "1/2*x^2 + 1/2*y^2"


def test_weighted_degree_of_monomial():
    ring = make_ring("x y z w")
    f = ring.parse("x^2*z")
    assert ring.weighted_degree(f.LM) == 3


@pytest.mark.parametrize(
    "text",
    ["x^", "x**2", "2x", "x + (y", "x^0", "u + 1"],
)
def test_malformed_polynomials_raise_parse_error(text):
    ring = make_ring("x y")
    with pytest.raises(ParseError):
        ring.parse(text)


def test_zero_denominator_rejected():
    ring = make_ring("x")
    with pytest.raises(ParseError, match="zero denominator"):
        ring.parse("1/0*x")


def test_prime_field_reduces_coefficients():
    ring = make_ring("x", field="GF 7")
    assert ring.format(ring.parse("8*x + 1/2")) == "x + 4"
    with pytest.raises(ParseError, match="not reducible mod 7"):
        ring.parse("1/7")


def test_field_parsing():
    assert str(parse_field("QQ")) == "QQ"
    assert str(parse_field("GF 101")) == "GF 101"
    with pytest.raises(ParseError):
        parse_field("GF 12")
    with pytest.raises(ParseError):
        parse_field("RR")


def test_partial_derivatives_of_the_cusp():
    ring = make_ring("x y", weights=[3, 2])
    f = ring.parse("x^2 - y^3")
    assert ring.format(poly_arith("partial_derivative", f, var=0)) == "2*x"
    assert ring.format(poly_arith("partial_derivative", f, var=1)) == "-3*y^2"


def test_jacobian_matrix_row_for_a_hypersurface():
    ring = make_ring("x y z", weights=[4, 3, 1])
    f = ring.parse("x^3 - y^4")
    matrix = jacobian_matrix([f], ring.poly_ring)
    assert matrix.shape == (1, 3)
    assert ring.format(matrix.entry(0, 0)) == "3*x^2"
    assert not matrix.entry(0, 2)


def test_minors_and_determinants_agree():
    ring = make_ring("x y z w")
    rels = [ring.parse(t) for t in ("x*y", "y*z", "z*x")]
    matrix = jacobian_matrix(rels, ring.poly_ring)
    all_minors = minors(matrix, 2)
    assert len(all_minors) == 3 * 6
    square = matrix.submatrix([0, 1], [0, 1])
    assert determinant(square) == determinant(square, method="cofactor")
    assert ring.parse("y^2") in all_minors


def test_ring_file_round_trip():
    text = """
    # cusp
    field QQ
    vars x y
    weights 3 2
    relations
    x^2 - y^3
    end
    """
    ring = parse_ring_file(text).presentation
    again = parse_ring_file(emit_ring_file(ring)).presentation
    assert again.variables == ring.variables
    assert again.weights == (3, 2)
    assert again.relation_basis == ring.relation_basis
    assert ring.dimension == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("field QQ\nvars x\nbogus\n", 3),
        ("field QQ\nfield QQ\n", 2),
        ("field QQ\nvars x\nrelations\nx +\nend\n", 4),
    ],
)
def test_ring_file_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_ring_file(text)
    assert info.value.line == line


def test_ring_file_requires_end():
    with pytest.raises(ParseError, match="end"):
        parse_ring_file("field QQ\nvars x\nrelations\nx^2\n")


def test_ring_file_rejects_bad_weights():
    with pytest.raises(ParseError, match="weights"):
        parse_ring_file("field QQ\nvars x y\nweights 1\n")


@pytest.mark.parametrize("field", ["QQ", "GF 7"])
def test_printed_polynomials_parse_back(field):
    ring = make_ring("x y z", field=field)
    rng = random.Random(f"print {field}")
    for _ in range(100):
        f = random_polynomial(rng, ring, 6)
        text = ring.format(f)
        assert ring.parse(text) == f, text
        assert ring.format(ring.parse(text)) == text


def test_addition_and_multiplication_commute_and_associate():
    ring = make_ring("x y z")
    rng = random.Random(3)
    for _ in range(50):
        f, g, h = (random_polynomial(rng, ring, 3) for _ in range(3))
        assert poly_arith("add", f, g) == poly_arith("add", g, f)
        assert poly_arith("mul", f, g) == poly_arith("mul", g, f)
        assert poly_arith("add", poly_arith("add", f, g), h) == poly_arith("add", f, poly_arith("add", g, h))
        assert poly_arith("mul", poly_arith("mul", f, g), h) == poly_arith("mul", f, poly_arith("mul", g, h))
        assert poly_arith("sub", poly_arith("add", f, g), g) == f


def _d(f, var):
    return poly_arith("partial_derivative", f, var=var)


@pytest.mark.parametrize("field", ["QQ", "GF 7"])
def test_partial_derivatives_obey_leibniz(field):
    ring = make_ring("x y z", field=field)
    rng = random.Random(f"leibniz {field}")
    for _ in range(50):
        f = random_polynomial(rng, ring, 3)
        g = random_polynomial(rng, ring, 3)
        for var in range(3):
            assert _d(f * g, var) == f * _d(g, var) + g * _d(f, var)


@pytest.mark.parametrize("field", ["QQ", "GF 7"])
def test_bareiss_and_cofactor_minors_agree(field):
    ring = make_ring("x y z", field=field)
    rng = random.Random(f"minors {field}")
    for _ in range(10):
        rows = [
            [ring.poly_ring.zero if rng.random() < 0.2 else random_polynomial(rng, ring, 2, 3) for _ in range(3)]
            for _ in range(3)
        ]
        matrix = PolyMatrix.from_rows(ring.poly_ring, rows)
        assert determinant(matrix) == determinant(matrix, method="cofactor")
        assert minors(matrix, 2) == minors(matrix, 2, method="cofactor")
