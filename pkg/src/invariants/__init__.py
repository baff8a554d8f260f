"""
Invariants of a presented ring R and an ideal I, and the hypothesis checks
built on them
"""

from .jacobian import JACOBIAN_LABEL, JacobianData, jacobian_data, jacobian_ideal
from .generators import minimal_generators, mu
from .grade import KoszulScan, koszul_scan, grade_koszul
from .artinian import (
    SOCLE_LABEL,
    SocleData,
    ArtinianData,
    loewy_length,
    loewy_length_or_infinity,
    socle,
    artinian_data,
)
from .nilpotency import CandidateCheck, NilData, nilpotency_index
from .regularity import RegularityData, regularity_check
from .context import IDEAL_KINDS, InvariantContext, resolve_ideal, build_context
from .hypotheses import verify_hypotheses, find_status

__all__ = [
    "JACOBIAN_LABEL",
    "JacobianData",
    "jacobian_data",
    "jacobian_ideal",
    "minimal_generators",
    "mu",
    "KoszulScan",
    "koszul_scan",
    "grade_koszul",
    "SOCLE_LABEL",
    "SocleData",
    "ArtinianData",
    "loewy_length",
    "loewy_length_or_infinity",
    "socle",
    "artinian_data",
    "CandidateCheck",
    "NilData",
    "nilpotency_index",
    "RegularityData",
    "regularity_check",
    "IDEAL_KINDS",
    "InvariantContext",
    "resolve_ideal",
    "build_context",
    "verify_hypotheses",
    "find_status",
]
