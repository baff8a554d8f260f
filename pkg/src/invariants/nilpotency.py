"""
Nilradical candidates and the nilpotency index n(R/I)
"""

from dataclasses import dataclass, field
from typing import Literal, Sequence

from ..constants.sentinels import AtLeast
from ..ideals.arithmetic import ideal_intersection, ideal_product
from ..ideals.ideal import IdealData, variable_ideal
from ..ideals.membership import radical_membership
from ..utils import console
from ..utils.config import EngineConfig, get_config

CandidateStatus = Literal["verified", "attested", "unverifiable", "failed"]


@dataclass(frozen=True)
class CandidateCheck:
    """How one candidate prime P was accepted or rejected"""

    label: str
    prime_status: CandidateStatus
    contains_ideal: bool
    note: str


@dataclass(frozen=True)
class NilData:
    """
    Verified radical √(I + J) = P_1 ∩ ... ∩ P_s and n(R/I).

    `nilpotency_index` is None when the candidates could not be accepted,
    and AtLeast(cap) when no e <= cap has (∩P_i)^e ⊆ I.
    """

    candidates: tuple[IdealData, ...]
    radical: IdealData | None
    nilpotency_index: int | AtLeast | None
    checks: tuple[CandidateCheck, ...]
    transcript: tuple[str, ...] = field(default=())

    @property
    def verified_radical(self) -> tuple[IdealData, ...]:
        return self.candidates if isinstance(self.nilpotency_index, int) else ()

    @property
    def status(self) -> CandidateStatus:
        if not self.checks or any(c.prime_status == "failed" or not c.contains_ideal for c in self.checks):
            return "failed"
        if any(c.prime_status == "unverifiable" for c in self.checks):
            return "unverifiable"
        if isinstance(self.nilpotency_index, int):
            if any(c.prime_status == "attested" for c in self.checks):
                return "attested"
            return "verified"
        return "unverifiable"

    @property
    def is_single_prime(self) -> bool:
        return len(self.candidates) == 1


def variable_indices(ideal: IdealData) -> tuple[int, ...] | None:
    """
    Indices of the variables generating `ideal` when I + J is exactly a
    set of variables (then the ideal is prime), else None.
    """
    indices = []
    for g in ideal.lifted.elements:
        if len(g) != 1 or sum(g.LM) != 1:
            return None
        indices.append(g.LM.index(1))
    return tuple(sorted(indices))


def auto_candidate(ideal: IdealData, *, config: EngineConfig | None = None) -> IdealData:
    """The variables lying in √(I + J), as one variable-generated ideal"""
    ring = ideal.ring
    inside = [i for i, x in enumerate(ring.gens) if radical_membership(x, ideal, config=config)]
    return variable_ideal(ring, inside)


def _check_candidate(ideal: IdealData, prime: IdealData, attested: bool) -> CandidateCheck:
    if prime.is_unit:
        return CandidateCheck(prime.describe(), "failed", ideal.is_unit, "the unit ideal is not prime")
    if variable_indices(prime) is not None:
        prime_status, note = "verified", "generated by variables, hence prime"
    elif attested:
        prime_status, note = "attested", "primality attested (prime-candidates)"
    else:
        prime_status, note = "unverifiable", "primality of a non-variable ideal needs --attest prime-candidates"
    contains = prime.contains_ideal(ideal)
    if not contains:
        note += f"; I is not contained in {prime.describe()}"
    return CandidateCheck(prime.describe(), prime_status, contains, note)


def nilpotency_index(
    ideal: IdealData,
    radical_candidates: Sequence[IdealData] | None = None,
    *,
    cap: int | None = None,
    attested_primes: bool = False,
    config: EngineConfig | None = None,
) -> NilData:
    """
    Find n(R/I) = least e with (∩ P_i)^e ⊆ I + J.

    I ⊆ ∩ P_i with every P_i prime gives √I ⊆ ∩ P_i, and (∩ P_i)^e ⊆ I gives
    the reverse inclusion, so a successful search also certifies the radical.

    Args:
        ideal: Proper ideal I of R
        radical_candidates: Primes P_i; default is the variables in √(I + J)
        cap: Largest e tried (default EngineConfig.nilpotency_cap)
        attested_primes: Accept non-variable candidates as prime
        config: Engine caps

    Returns:
        NilData with the index, per-candidate checks and a transcript
    """
    config = config or get_config()
    cap = cap if cap is not None else config.nilpotency_cap
    transcript: list[str] = []

    if radical_candidates is None:
        candidates = (auto_candidate(ideal, config=config),)
        transcript.append(f"auto candidate: variables in √I give {candidates[0].describe()}")
    else:
        candidates = tuple(radical_candidates)
    if not candidates:
        return NilData((), None, None, (), ("no radical candidates supplied",))

    checks = tuple(_check_candidate(ideal, p, attested_primes) for p in candidates)
    for check in checks:
        transcript.append(f"{check.label}: prime {check.prime_status}, contains I: {check.contains_ideal}")
    if any(c.prime_status in ("failed", "unverifiable") or not c.contains_ideal for c in checks):
        console.warning("radical candidates rejected")
        return NilData(candidates, None, None, checks, tuple(transcript))

    radical = candidates[0]
    for other in candidates[1:]:
        radical = ideal_intersection(radical, other, config=config)

    console.step(f"Searching n(S) with P = {radical.describe()} up to e = {cap}")
    power = radical
    for e in range(1, cap + 1):
        if ideal.contains_ideal(power):
            transcript.append(f"P^{e} ⊆ I" + (f", P^{e - 1} ⊄ I" if e > 1 else ""))
            console.success(f"n(S) = {e}")
            return NilData(candidates, radical, e, checks, tuple(transcript))
        power = ideal_product(power, radical, config=config)

    transcript.append(f"P^{cap} ⊄ I: search capped")
    console.warning(f"nilpotency search stopped at the cap {cap}")
    return NilData(candidates, radical, AtLeast(cap), checks, tuple(transcript))
