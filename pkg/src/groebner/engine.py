"""
Buchberger's algorithm with the Gebauer-Möller criteria

The pair bookkeeping follows Becker-Weispfenning (GROEBNERNEWS2) the same way
sympy's `_buchberger` does; the reduction loop is our own so that every
single-term step counts against the configured budget. Module elements are
ordinary ring elements with one-hot position variables, so a `compatible`
predicate keeps pairs with different leading positions out of the queue.
"""

from typing import Callable, Iterable

from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ResourceCapExceeded
from ..utils.config import EngineConfig, get_config


class ReductionBudget:
    """Counts reduction steps and raises once the ceiling is passed"""

    def __init__(self, max_steps: int):
        self.max_steps = max_steps
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.max_steps:
            raise ResourceCapExceeded("Gröbner reduction steps", self.max_steps)


def reduce_polynomial(f: PolyElement, divisors: Iterable[PolyElement], budget: ReductionBudget | None = None) -> PolyElement:
    """
    Fully reduce `f` by `divisors` (remainder of multivariate division).

    No term of the result is divisible by a leading monomial of a divisor.
    """
    ring = f.ring
    leads = [(g.LM, g.LC, g) for g in divisors if g]
    if not f or not leads:
        return f.copy()

    monomial_div = ring.monomial_div
    monomial_mul = ring.monomial_mul
    domain = ring.domain
    zero = domain.zero

    p = f.copy()
    remainder = ring.zero.copy()
    while p:
        m = p.leading_expv()
        c = p[m]
        for lm, lc, g in leads:
            q = monomial_div(m, lm)
            if q is None:
                continue
            if budget is not None:
                budget.tick()
            factor = domain.quo(c, lc)
            for mg, cg in g.items():
                target = monomial_mul(mg, q)
                value = p.get(target, zero) - factor * cg
                if value:
                    p[target] = value
                else:
                    p.pop(target, None)
            break
        else:
            remainder[m] = c
            del p[m]
    return remainder


def spoly(p1: PolyElement, p2: PolyElement) -> PolyElement:
    """
    LCM/LM(p1)*p1 - LCM/LM(p2)*p2 for monic p1, p2
    """
    ring = p1.ring
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    s1 = p1.mul_monom(ring.monomial_div(lcm, p1.LM))
    s2 = p2.mul_monom(ring.monomial_div(lcm, p2.LM))
    return s1 - s2


def buchberger(
    generators: Iterable[PolyElement],
    ring: PolyRing,
    *,
    config: EngineConfig | None = None,
    compatible: Callable[[tuple, tuple], bool] | None = None,
) -> list[PolyElement]:
    """
    Reduced Gröbner basis of the ideal (or submodule) spanned by `generators`.

    Args:
        generators: Elements of `ring`; zeros are ignored
        ring: Polynomial ring carrying the monomial order
        config: Engine caps (defaults from the environment)
        compatible: Predicate on two leading monomials; pairs failing it are
            never formed (module positions)

    Returns:
        Monic reduced basis sorted by descending leading monomial

    Raises:
        ResourceCapExceeded: step or basis-size budget exhausted
    """
    config = config or get_config()
    budget = ReductionBudget(config.max_reduction_steps)
    order = ring.order

    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    f = [g for g in generators if g]
    if not f:
        return []

    def select(pairs):
        # normal strategy: minimal lcm first
        return min(pairs, key=lambda pair: order(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)))

    def normal(g, J):
        h = reduce_polynomial(g, [f[j] for j in J], budget)
        if not h:
            return None
        h = h.monic()
        if h not in I:
            I[h] = len(f)
            f.append(h)
        return h.LM, I[h]

    def update(G, B, ih):
        # [BW] page 230
        h = f[ih]
        mh = h.LM

        C = {ig for ig in G if compatible is None or compatible(mh, f[ig].LM)}
        D = set()

        while C:
            ig = C.pop()
            mg = f[ig].LM
            LCMhg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                # LCM(LM(h), LM(p)) divides LCM(LM(h), LM(g))
                m = monomial_lcm(mh, f[ip].LM)
                return monomial_div(LCMhg, m)

            if monomial_mul(mh, mg) == LCMhg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        while D:
            ih, ig = D.pop()
            mg = f[ig].LM
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.add((ih, ig))

        # drop old pairs made redundant by h
        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1 = f[ig1].LM
            mg2 = f[ig2].LM
            LCM12 = monomial_lcm(mg1, mg2)
            if (
                not monomial_div(LCM12, mh)
                or monomial_lcm(mg1, mh) == LCM12
                or monomial_lcm(mg2, mh) == LCM12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if not monomial_div(f[ig].LM, mh)}
        G_new.add(ih)
        if len(G_new) > config.max_basis_size:
            raise ResourceCapExceeded("Gröbner basis size", config.max_basis_size)
        return G_new, B_new

    # interreduce the input, [BW] page 203
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i, p in enumerate(f):
            r = reduce_polynomial(p, f[:i], budget)
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    I = {}
    F = set()
    G = set()
    CP = set()
    for i, h in enumerate(f):
        I[h] = i
        F.add(i)

    while F:
        ih = min(F, key=lambda i: order(f[i].LM))
        F.remove(ih)
        G, CP = update(G, CP, ih)

    while CP:
        ig1, ig2 = select(CP)
        CP.remove((ig1, ig2))
        h = spoly(f[ig1], f[ig2])
        divisors = sorted(G, key=lambda g: order(f[g].LM))
        ht = normal(h, divisors)
        if ht:
            G, CP = update(G, CP, ht[1])

    reduced = set()
    for ig in sorted(G):
        ht = normal(f[ig], sorted(G - {ig}))
        if ht:
            reduced.add(ht[1])

    return sorted((f[ig] for ig in reduced), key=lambda g: order(g.LM), reverse=True)


def spair_certificate(
    basis: list[PolyElement],
    compatible: Callable[[tuple, tuple], bool] | None = None,
) -> list[tuple[int, int]]:
    """
    Buchberger's criterion check: indices of basis pairs whose S-polynomial
    does not reduce to zero. An empty list certifies a Gröbner basis.
    """
    failures = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if compatible is not None and not compatible(basis[i].LM, basis[j].LM):
                continue
            if reduce_polynomial(spoly(basis[i], basis[j]), basis):
                failures.append((i, j))
    return failures
