"""
Mechanical verification of the hypotheses behind each bound formula

Failures are statuses, never exceptions. A status is "verified" only when a
check actually ran and passed; "attested" echoes a user flag.
"""

from ..errors import UnsupportedInputError
from ..ideals.ideal import zero_ideal
from ..ideals.membership import contained_in_radical
from ..ideals.monomial import monomial_minimal_primes
from ..models import HypothesisStatus, is_usable, weakest
from .context import InvariantContext
from .regularity import regularity_check

EQUIDIMENSIONAL = "equidimensional"
HALF_CM = "half-cohen-macaulay"
SING_IN_V = "sing-in-V(I)"
IN_ANNIHILATOR = "in-annihilator"
V_IS_SING = "V(I)=Sing"
ARTINIAN_QUOTIENT = "artinian-quotient"
SING_DIMENSION_ONE = "dim-sing-one"
REDUCED_REGULAR = "reduced-quotient-regular"
COHEN_MACAULAY = "cohen-macaulay"
COUNTABLE_CM_TYPE = "countable-cm-type"
DEPTH_ZERO = "depth-zero"


def _status(name: str, status: str, evidence: str) -> HypothesisStatus:
    return HypothesisStatus(name=name, status=status, evidence=evidence)


def _attested_or_unverifiable(ctx: InvariantContext, name: str, flag: str, reason: str) -> HypothesisStatus:
    if ctx.attested(flag):
        return _status(name, "attested", f"{reason}; attested ({flag})")
    return _status(name, "unverifiable", f"{reason}; pass --attest {flag} to assume it")


def check_equidimensional(ctx: InvariantContext) -> HypothesisStatus:
    """All minimal primes of R have the same dimension"""
    ring = ctx.ring
    if ring.is_polynomial_ring:
        return _status(EQUIDIMENSIONAL, "verified", "J = 0: R is a polynomial ring")
    if len(ring.relation_basis) == 1:
        return _status(EQUIDIMENSIONAL, "verified", "J is principal: R is a hypersurface")
    if ring.relation_basis.is_monomial:
        primes = monomial_minimal_primes(zero_ideal(ring))
        dims = sorted({ring.n - len(p) for p in primes})
        listing = ", ".join("(" + ", ".join(ring.variables[i] for i in p) + ")" for p in primes)
        if len(dims) == 1:
            return _status(EQUIDIMENSIONAL, "verified", f"monomial J, minimal primes {listing} all of dimension {dims[0]}")
        return _status(EQUIDIMENSIONAL, "failed", f"monomial J, minimal primes {listing} have dimensions {dims}")
    return _attested_or_unverifiable(ctx, EQUIDIMENSIONAL, "equidimensional", "J is neither monomial nor principal")


def check_half_cm(ctx: InvariantContext) -> HypothesisStatus:
    """2 depth R_p >= dim R_p for every prime, checked at the graded maximal ideal"""
    depth, dim = ctx.depth, ctx.dim
    if depth is None:
        return _attested_or_unverifiable(ctx, HALF_CM, "half-cm-local", "depth could not be computed")
    if depth == dim:
        return _status(HALF_CM, "verified", f"depth {depth} = dim {dim}: R is Cohen-Macaulay")
    if 2 * depth >= dim:
        return _attested_or_unverifiable(
            ctx, HALF_CM, "half-cm-local",
            f"2·depth = {2 * depth} >= dim = {dim} at the graded maximal ideal; other primes not checked",
        )
    return _status(HALF_CM, "failed", f"2·depth = {2 * depth} < dim = {dim} at the graded maximal ideal")


def check_sing_in_v(ctx: InvariantContext, equidimensional: HypothesisStatus) -> HypothesisStatus:
    """Sing R ⊆ V(I), via I ⊆ √jac(R) and the Jacobian criterion"""
    jac = ctx.jacobian_ideal
    if ctx.ideal_kind == "jacobian" or ctx.ideal.same_ideal(jac):
        inside, how = True, "I = jac(R)"
    else:
        inside = contained_in_radical(ctx.ideal, jac, config=ctx.config)
        how = "I ⊆ √jac(R)" if inside else "I ⊄ √jac(R)"
    if inside:
        status = weakest("verified", equidimensional.status)
        if is_usable(status):
            return _status(SING_IN_V, status, f"{how}, and V(jac(R)) = Sing R (Jacobian criterion, {equidimensional.status} equidimensional)")
        return _status(SING_IN_V, "unverifiable", f"{how}, but the Jacobian criterion needs R equidimensional")
    if equidimensional.status == "verified":
        return _status(SING_IN_V, "failed", f"{how} while V(jac(R)) = Sing R")
    return _status(SING_IN_V, "unverifiable", f"{how}; Sing R not determined without equidimensionality")


def check_v_is_sing(ctx: InvariantContext, equidimensional: HypothesisStatus) -> HypothesisStatus:
    """V(I) = Sing R: I and jac(R) have the same radical"""
    jac = ctx.jacobian_ideal
    same = ctx.ideal_kind == "jacobian" or ctx.ideal.same_ideal(jac) or (
        contained_in_radical(ctx.ideal, jac, config=ctx.config)
        and contained_in_radical(jac, ctx.ideal, config=ctx.config)
    )
    if not same:
        if equidimensional.status == "verified":
            return _status(V_IS_SING, "failed", "√I ≠ √jac(R) while V(jac(R)) = Sing R")
        return _status(V_IS_SING, "unverifiable", "√I ≠ √jac(R); Sing R not determined")
    status = weakest("verified", equidimensional.status)
    if is_usable(status):
        return _status(V_IS_SING, status, "√I = √jac(R) and V(jac(R)) = Sing R")
    return _status(V_IS_SING, "unverifiable", "√I = √jac(R), but the Jacobian criterion needs R equidimensional")


def check_in_annihilator(
    ctx: InvariantContext,
    equidimensional: HypothesisStatus,
    half_cm: HypothesisStatus | None,
) -> tuple[HypothesisStatus, str]:
    """
    I ⊆ ann_R D_sg(R).

    Returns:
        (status, route) with route "jacobian", "socle" or "attested"
    """
    jac = ctx.jacobian_ideal
    if half_cm is not None and jac.contains_ideal(ctx.ideal):
        base = weakest(equidimensional.status, half_cm.status)
        if is_usable(base):
            return _status(IN_ANNIHILATOR, base, "I ⊆ jac(R) ⊆ ann D_sg(R) for equidimensional half Cohen-Macaulay R"), "jacobian"

    if ctx.ideal_kind == "socle" or ctx.depth == 0:
        socle = ctx.socle
        if socle is not None and socle.depth == 0 and socle.ideal.contains_ideal(ctx.ideal):
            return _status(IN_ANNIHILATOR, "verified", "I ⊆ soc R ⊆ ann D_sg(R) since depth R = 0"), "socle"

    if ctx.attested("in-annihilator"):
        return _status(IN_ANNIHILATOR, "attested", "I ⊆ ann D_sg(R) attested (in-annihilator)"), "attested"
    return _status(
        IN_ANNIHILATOR,
        "unverifiable",
        "I is not inside jac(R) of an equidimensional half Cohen-Macaulay ring nor inside soc R of a "
        "depth-zero ring; pass --attest in-annihilator to assume it",
    ), "none"


def check_artinian_quotient(ctx: InvariantContext) -> HypothesisStatus:
    if ctx.quotient_dim == 0:
        return _status(ARTINIAN_QUOTIENT, "verified", "dim R/I = 0: V(I) is the graded maximal ideal")
    return _status(ARTINIAN_QUOTIENT, "failed", f"dim R/I = {ctx.quotient_dim}")


def check_sing_dimension_one(ctx: InvariantContext) -> HypothesisStatus:
    if ctx.quotient_dim == 1:
        return _status(SING_DIMENSION_ONE, "verified", "dim R/I = 1")
    return _status(SING_DIMENSION_ONE, "failed", f"dim R/I = {ctx.quotient_dim}, expected 1")


def check_reduced_regular(ctx: InvariantContext, t_loewy: int | None = None) -> HypothesisStatus:
    """
    (R/I)_red regular, so its conductor quotient T is 0. A user-supplied
    ℓℓ(T) replaces the check.
    """
    nil = ctx.nil
    if nil.radical is not None and isinstance(nil.nilpotency_index, int):
        try:
            regularity = regularity_check(nil.radical)
        except UnsupportedInputError as e:
            regularity = None
            reason = e.message
        if regularity is not None and regularity.regular:
            status = "attested" if nil.status == "attested" else "verified"
            return _status(REDUCED_REGULAR, status, f"(R/I)_red = R/{nil.radical.describe()}: {regularity.evidence}; T = 0")
        if regularity is not None:
            reason = f"(R/I)_red = R/{nil.radical.describe()} is not regular: {regularity.evidence}"
    else:
        reason = "the nilradical of R/I was not verified"
    if t_loewy is not None:
        return _status(REDUCED_REGULAR, "attested", f"{reason}; ℓℓ(T) = {t_loewy} supplied by the user")
    return _status(REDUCED_REGULAR, "unverifiable", f"{reason}; supply --t-loewy to use the formula")


def check_cohen_macaulay(ctx: InvariantContext) -> HypothesisStatus:
    depth, dim = ctx.depth, ctx.dim
    if depth is None:
        return _status(COHEN_MACAULAY, "unverifiable", "depth could not be computed")
    if depth == dim:
        return _status(COHEN_MACAULAY, "verified", f"depth {depth} = dim {dim}")
    return _status(COHEN_MACAULAY, "failed", f"depth {depth} < dim {dim}")


def check_countable_cm_type(ctx: InvariantContext) -> HypothesisStatus:
    return _attested_or_unverifiable(
        ctx, COUNTABLE_CM_TYPE, "countable-cm-type", "countable CM representation type is not decided mechanically"
    )


def check_depth_zero(ctx: InvariantContext) -> HypothesisStatus:
    if ctx.depth is None:
        return _status(DEPTH_ZERO, "unverifiable", "depth could not be computed")
    if ctx.depth == 0:
        return _status(DEPTH_ZERO, "verified", "depth R = 0 (Auslander-Buchsbaum)")
    return _status(DEPTH_ZERO, "failed", f"depth R = {ctx.depth}")


def verify_hypotheses(
    ctx: InvariantContext,
    formula: str = "main",
    *,
    t_loewy: int | None = None,
) -> list[HypothesisStatus]:
    """
    Check every hypothesis the chosen formula relies on.

    Args:
        ctx: Invariants of (R, I) and the user's attestations
        formula: Formula identifier (see constants.formulas)
        t_loewy: User-supplied ℓℓ(T) for the one-dimensional formulas

    Returns:
        Statuses in a fixed order; the Jacobian route adds the
        equidimensional and half-CM checks it depends on
    """
    equidimensional = check_equidimensional(ctx)
    half_cm = check_half_cm(ctx) if ctx.depth is not None or ctx.attested("half-cm-local") else None
    in_ann, route = check_in_annihilator(ctx, equidimensional, half_cm)

    statuses: list[HypothesisStatus] = []
    if formula in ("main", "main-radius", "verify"):
        statuses += [equidimensional]
        if half_cm is not None:
            statuses.append(half_cm)
        statuses += [check_sing_in_v(ctx, equidimensional), in_ann]
    elif formula in ("liu", "dimsing0"):
        statuses += _route_support(route, equidimensional, half_cm)
        statuses += [check_artinian_quotient(ctx), in_ann]
    elif formula == "dimsing1":
        statuses += _route_support(route, equidimensional, half_cm)
        statuses += [
            in_ann,
            check_v_is_sing(ctx, equidimensional),
            check_sing_dimension_one(ctx),
            check_reduced_regular(ctx, t_loewy),
        ]
    elif formula == "countable-cm":
        statuses += _route_support(route, equidimensional, half_cm)
        statuses += [
            check_cohen_macaulay(ctx),
            check_countable_cm_type(ctx),
            in_ann,
            check_v_is_sing(ctx, equidimensional),
            check_reduced_regular(ctx, t_loewy),
        ]
    elif formula == "depth-zero":
        statuses += [check_depth_zero(ctx), in_ann]
    else:
        raise ValueError(f"unknown formula {formula!r}")
    return statuses


def _route_support(route, equidimensional, half_cm) -> list[HypothesisStatus]:
    if route == "jacobian":
        return [equidimensional] + ([half_cm] if half_cm is not None else [])
    return []


def find_status(statuses: list[HypothesisStatus], name: str) -> HypothesisStatus | None:
    return next((s for s in statuses if s.name == name), None)
