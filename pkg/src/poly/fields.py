"""
Coefficient fields: the rationals and prime fields GF(p)
"""

from dataclasses import dataclass
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import QQ, GF

from ..errors import ParseError

MAX_PRIME = 2**31


@dataclass(frozen=True)
class FieldSpec:
    """
    A coefficient field, either QQ (characteristic 0) or GF(p)

    GF(p) elements are kept in the canonical residue range 0..p-1, so the
    domain is built with `symmetric=False`.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p >= MAX_PRIME or not isprime(p)):
            raise ParseError(f"field characteristic must be 0 or a prime below 2^31, got {p}")

    @cached_property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return GF(self.characteristic, symmetric=False)

    def coefficient(self, numerator: int, denominator: int = 1):
        """
        Build an exact coefficient from an integer fraction.

        Raises:
            ParseError: zero denominator, or a denominator divisible by p
        """
        if denominator == 0:
            raise ParseError("zero denominator in coefficient")
        if self.characteristic == 0:
            return QQ(numerator, denominator)
        domain = self.domain
        if denominator % self.characteristic == 0:
            raise ParseError(
                f"coefficient {numerator}/{denominator} is not reducible mod {self.characteristic}"
            )
        return domain(numerator) / domain(denominator)

    def to_fraction(self, value) -> tuple[int, int]:
        """(numerator, denominator) of a coefficient; GF(p) values as canonical residues"""
        if self.characteristic == 0:
            return int(value.numerator), int(value.denominator)
        return int(value) % self.characteristic, 1

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF {self.characteristic}"


def parse_field(text: str) -> FieldSpec:
    """
    Parse the argument of a `field` directive: `QQ` or `GF <prime>`
    """
    parts = text.split()
    if parts == ["QQ"]:
        return FieldSpec(0)
    if len(parts) == 2 and parts[0] == "GF":
        try:
            p = int(parts[1])
        except ValueError:
            raise ParseError(f"GF expects an integer prime, got {parts[1]!r}")
        return FieldSpec(p)
    raise ParseError(f"unknown field {text!r}; expected 'QQ' or 'GF <prime>'")
