"""
Non-integer values an invariant may take
"""

from dataclasses import dataclass
from functools import total_ordering

# Krull dimension of the empty variety V(R)
EMPTY_DIMENSION = -1


@total_ordering
class _Infinity:
    """Loewy length of a non-artinian ring; compares above every integer"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("infinity")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "infinity"


INFINITY = _Infinity()


@dataclass(frozen=True)
class AtLeast:
    """A search ran out of budget: the true value is at least `bound`"""

    bound: int

    def __str__(self):
        return f">= {self.bound}"


def is_exact(value) -> bool:
    """True for plain integers, False for INFINITY, AtLeast and None"""
    return isinstance(value, int) and not isinstance(value, bool)


def render_value(value):
    """JSON-safe form: ints stay ints, sentinels become strings"""
    if value is None or is_exact(value):
        return value
    return str(value)
