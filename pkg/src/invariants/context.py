"""
Lazily computed invariants of a pair (R, I), shared by hypothesis checks,
derived-ball strategies and bound formulas
"""

from dataclasses import dataclass, field
from functools import cached_property

from ..constants.sentinels import render_value
from ..errors import UnsupportedInputError
from ..ideals.dimension import krull_dimension
from ..ideals.ideal import IdealData, ideal_from_text
from ..ideals.monomial import monomial_height
from ..models import InvariantValues
from ..poly.ring import RingPresentation
from ..resolution.free_resolution import depth_graded
from ..utils import console
from ..utils.config import EngineConfig, get_config
from .artinian import SocleData, loewy_length_or_infinity, socle
from .generators import mu
from .grade import KoszulScan, koszul_scan
from .jacobian import JacobianData, jacobian_data
from .nilpotency import NilData, nilpotency_index

IDEAL_KINDS = ["jacobian", "socle", "custom"]


def resolve_ideal(
    ring: RingPresentation,
    text: str,
    *,
    config: EngineConfig | None = None,
) -> tuple[IdealData, str, JacobianData | SocleData | None]:
    """
    Turn an --ideal value into an ideal of R.

    Args:
        ring: The presented ring
        text: "jacobian", "socle" or a comma separated generator list

    Returns:
        (ideal, kind, data) with kind one of IDEAL_KINDS and data the
        JacobianData or SocleData computed on the way
    """
    keyword = text.strip().lower()
    if keyword in ("jacobian", "jac"):
        data = jacobian_data(ring, config=config)
        return data.ideal, "jacobian", data
    if keyword in ("socle", "soc"):
        data = socle(ring, config=config)
        return data.ideal, "socle", data
    return ideal_from_text(ring, text, config=config), "custom", None


@dataclass
class InvariantContext:
    """
    Every invariant is computed on first access and then kept.

    Values that cannot be computed for the input (for example depth of a
    non-homogeneous ring) come back as None and leave a warning behind.
    """

    ring: RingPresentation
    ideal: IdealData
    ideal_kind: str = "custom"
    attestations: frozenset[str] = frozenset()
    radical_candidates: tuple[IdealData, ...] | None = None
    config: EngineConfig = field(default_factory=get_config)
    warnings: list[str] = field(default_factory=list)

    def attested(self, name: str) -> bool:
        return name in self.attestations

    @cached_property
    def jacobian(self) -> JacobianData:
        return jacobian_data(self.ring, config=self.config)

    @property
    def jacobian_ideal(self) -> IdealData:
        return self.jacobian.ideal

    @cached_property
    def mu(self) -> int:
        return mu(self.ideal, config=self.config)

    @cached_property
    def koszul(self) -> KoszulScan:
        return koszul_scan(self.ideal, config=self.config)

    @cached_property
    def grade(self) -> int:
        return self.ideal.remember("grade", self.koszul.grade)

    @property
    def multiplier(self) -> int:
        """μ(I) - grade I + 1"""
        return self.mu - self.grade + 1

    @cached_property
    def depth(self) -> int | None:
        try:
            return depth_graded(self.ring, config=self.config)
        except UnsupportedInputError as e:
            self.warnings.append(f"depth not computed: {e.message}")
            return None

    @property
    def dim(self) -> int:
        return self.ring.dimension

    @cached_property
    def quotient_dim(self) -> int:
        return krull_dimension(self.ideal)

    @cached_property
    def loewy(self):
        """ℓℓ(R/I), INFINITY when R/I is not artinian, None when undecidable"""
        try:
            return loewy_length_or_infinity(self.ideal)
        except UnsupportedInputError as e:
            self.warnings.append(f"Loewy length not computed: {e.message}")
            return None

    @cached_property
    def nil(self) -> NilData:
        return nilpotency_index(
            self.ideal,
            self.radical_candidates,
            attested_primes=self.attested("prime-candidates"),
            config=self.config,
        )

    @cached_property
    def socle(self) -> SocleData | None:
        try:
            return socle(self.ring, config=self.config)
        except UnsupportedInputError as e:
            self.warnings.append(f"socle not computed: {e.message}")
            return None

    @cached_property
    def height(self) -> int | None:
        """Height of I, available when I + J is a monomial ideal"""
        if not self.ideal.is_monomial or self.ideal.is_unit:
            return None
        return monomial_height(self.ideal)

    def values(self) -> InvariantValues:
        """Snapshot of the invariants computed so far (never triggers work)"""
        computed = self.__dict__
        socle_data = computed.get("socle")
        nil = computed.get("nil")
        return InvariantValues(
            mu=computed.get("mu"),
            grade=computed.get("grade"),
            depth=computed.get("depth"),
            dim=self.dim,
            quotient_dim=computed.get("quotient_dim"),
            loewy=render_value(computed.get("loewy")),
            nilpotency=render_value(nil.nilpotency_index) if nil is not None else None,
            type=socle_data.type if socle_data is not None else None,
        )


def build_context(
    ring: RingPresentation,
    ideal_text: str,
    *,
    attestations=(),
    radical_candidates=None,
    config: EngineConfig | None = None,
) -> InvariantContext:
    """Resolve the ideal and wrap everything in an InvariantContext"""
    config = config or get_config()
    console.step(f"Resolving ideal {ideal_text!r}")
    ideal, kind, data = resolve_ideal(ring, ideal_text, config=config)
    if ideal.is_unit:
        if kind == "jacobian":
            raise UnsupportedInputError("jac(R) = R: the ring is regular and D_sg(R) is trivial")
        raise UnsupportedInputError(
            f"{ideal.describe()} is the unit ideal; the bound formulas need a proper ideal"
        )
    context = InvariantContext(
        ring=ring,
        ideal=ideal,
        ideal_kind=kind,
        attestations=frozenset(attestations),
        radical_candidates=tuple(radical_candidates) if radical_candidates is not None else None,
        config=config,
    )
    # seed the cache with what resolving the ideal already produced
    if isinstance(data, JacobianData):
        context.__dict__["jacobian"] = data
    elif isinstance(data, SocleData):
        context.__dict__["socle"] = data
        context.__dict__["depth"] = data.depth
    return context
