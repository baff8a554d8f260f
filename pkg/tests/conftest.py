"""
Shared fixtures: the worked example rings and a few small presentations
"""

from pathlib import Path

import pytest

from src.groebner.staircase import monomials_of_degree
from src.poly.fields import parse_field
from src.poly.ring import build_ring
from src.poly.ring_file import load_ring_file
from src.utils.config import get_config

RINGS_DIR = Path(__file__).resolve().parent.parent / "rings"


def load_ring(name: str):
    return load_ring_file(RINGS_DIR / f"{name}.ring").presentation


def make_ring(variables: str, relations=(), weights=None, field: str = "QQ"):
    """build_ring from text, e.g. make_ring("x y", ["x^2 - y^3"], [3, 2])"""
    return build_ring(parse_field(field), variables.split(), weights, list(relations))


def _random_coefficient(rng, ring):
    return ring.field.coefficient(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))


def random_polynomial(rng, ring, max_degree: int, max_terms: int = 4):
    """Up to max_terms terms of total degree <= max_degree, never zero"""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exponents = [0] * ring.n
        for _ in range(rng.randint(0, max_degree)):
            exponents[rng.randrange(ring.n)] += 1
        terms[tuple(exponents)] = _random_coefficient(rng, ring)
    return ring.poly_ring.from_dict(terms)


def random_form(rng, ring, degree: int, max_terms: int = 3):
    """Nonzero homogeneous polynomial of standard degree `degree`"""
    monomials = monomials_of_degree(ring.n, degree)
    chosen = rng.sample(monomials, min(len(monomials), rng.randint(1, max_terms)))
    return ring.poly_ring.from_dict({m: _random_coefficient(rng, ring) for m in chosen})


def random_monomial_ideal_text(rng, variables, count: int, max_exponent: int = 2) -> str:
    """e.g. "x^2*z, y" with every generator of positive degree"""
    gens = []
    for _ in range(count):
        exponents = [rng.randint(0, max_exponent) for _ in variables]
        if not any(exponents):
            exponents[rng.randrange(len(variables))] = 1
        gens.append("*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exponents) if e))
    return ", ".join(gens)


@pytest.fixture
def config():
    return get_config()


@pytest.fixture
def ring_path():
    def _path(name: str) -> str:
        return str(RINGS_DIR / f"{name}.ring")
    return _path


@pytest.fixture
def dim41():
    return load_ring("dim41")


@pytest.fixture
def egdimsing1():
    return load_ring("egdimsing1")


@pytest.fixture
def uncountable_cm():
    return load_ring("uncountable_cm")


@pytest.fixture
def dual_numbers():
    return load_ring("dual_numbers")


@pytest.fixture(params=[2, 3, 4, 5])
def depth_zero(request):
    return request.param, load_ring(f"depth_zero_n{request.param}")


@pytest.fixture
def polynomial_ring_3():
    """QQ[x, y, z], no relations"""
    return make_ring("x y z")
