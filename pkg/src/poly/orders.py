"""
Monomial orders used by the Gröbner engine

All orders follow sympy's `MonomialOrder` protocol: calling the order on an
exponent tuple returns a sort key, larger keys are larger monomials. Equality
and hashing include the parameters because `PolyRing` caches rings by order.
"""

from sympy.polys.orderings import MonomialOrder, lex

__all__ = [
    "WeightedGrevlex",
    "EliminationOrder",
    "ModuleOrder",
    "lex",
]


class WeightedGrevlex(MonomialOrder):
    """
    Weighted degree first, ties broken by reverse lexicographic order

    With all weights 1 this is sympy's grevlex.
    """

    alias = "wgrevlex"
    is_global = True
    is_default = False

    def __init__(self, weights):
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise ValueError("monomial weights must be positive")

    def degree(self, monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, monomial))

    def __call__(self, monomial):
        return (self.degree(monomial), tuple(reversed([-e for e in monomial])))

    def __repr__(self):
        return f"WeightedGrevlex({self.weights})"

    def __eq__(self, other):
        return isinstance(other, WeightedGrevlex) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__.__name__, self.weights))


class EliminationOrder(MonomialOrder):
    """
    Block order: monomials compare first on the eliminated variables, then
    on the kept ones, each block under weighted grevlex.

    A Gröbner basis under this order contains a basis of I ∩ k[kept].
    """

    alias = "elim"
    is_global = True
    is_default = False

    def __init__(self, eliminate, weights):
        self.eliminate = tuple(sorted(eliminate))
        self.weights = tuple(weights)
        self.keep = tuple(i for i in range(len(self.weights)) if i not in self.eliminate)
        self._first = WeightedGrevlex([self.weights[i] for i in self.eliminate] or [1])
        self._second = WeightedGrevlex([self.weights[i] for i in self.keep] or [1])

    def __call__(self, monomial):
        first = tuple(monomial[i] for i in self.eliminate) or (0,)
        second = tuple(monomial[i] for i in self.keep) or (0,)
        return (self._first(first), self._second(second))

    def __repr__(self):
        return f"EliminationOrder({self.eliminate}, {self.weights})"

    def __eq__(self, other):
        return (
            isinstance(other, EliminationOrder)
            and self.eliminate == other.eliminate
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.__class__.__name__, self.eliminate, self.weights))


class ModuleOrder(MonomialOrder):
    """
    Order on monomials of a free module F = R^rank.

    A module monomial m·e_i is encoded as an exponent tuple of length
    n + rank whose last `rank` entries are the one-hot position i. Three
    shapes are supported:

    - ``top``: term over position, (base(m), -i)
    - ``pot``: position over term, (-i, base(m))
    - elimination (``head`` > 0): positions below ``head`` dominate every
      tail position; tail positions use a Schreyer order induced by
      ``schreyer[i - head] = (lead monomial, lead position)`` when given.
    """

    alias = "module"
    is_global = True
    is_default = False

    def __init__(self, base, nvars: int, rank: int, kind: str = "top", head: int = 0, schreyer=None):
        if kind not in ("top", "pot"):
            raise ValueError(f"unknown module order kind {kind!r}")
        self.base = base
        self.nvars = nvars
        self.rank = rank
        self.kind = kind
        self.head = head
        self.schreyer = tuple(schreyer) if schreyer is not None else None

    def position(self, monomial) -> int:
        for i in range(self.nvars, self.nvars + self.rank):
            if monomial[i]:
                return i - self.nvars
        return -1

    def _plain(self, ring_part, pos):
        if self.kind == "top":
            return (self.base(ring_part), -pos)
        return (-pos, self.base(ring_part))

    def __call__(self, monomial):
        ring_part = monomial[: self.nvars]
        pos = self.position(monomial)
        if not self.head:
            return self._plain(ring_part, pos)
        if pos < self.head:
            return (1, self._plain(ring_part, pos))
        if self.schreyer is None:
            return (0, self._plain(ring_part, pos))
        lead, lead_pos = self.schreyer[pos - self.head]
        shifted = tuple(a + b for a, b in zip(ring_part, lead))
        return (0, (self.base(shifted), -lead_pos, -pos))

    def __repr__(self):
        return f"ModuleOrder({self.base!r}, {self.nvars}, {self.rank}, {self.kind!r}, {self.head})"

    def _key(self):
        return (self.base, self.nvars, self.rank, self.kind, self.head, self.schreyer)

    def __eq__(self, other):
        return isinstance(other, ModuleOrder) and self._key() == other._key()

    def __hash__(self):
        return hash((self.__class__.__name__, self._key()))
