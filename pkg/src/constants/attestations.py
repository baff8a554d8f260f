"""
User attestations accepted on the command line

An attestation records a hypothesis the user vouches for because no
mechanical check exists for it here. Reports echo them verbatim.
"""

VALID_ATTESTATIONS = [
    "half-cm-local",
    "equidimensional",
    "prime-candidates",
    "in-annihilator",
    "countable-cm-type",
]

ATTESTATION_DESCRIPTIONS = {
    "half-cm-local": "2·depth R_p ≥ dim R_p holds at every prime, not only at the graded maximal ideal",
    "equidimensional": "every minimal prime of R has the same dimension",
    "prime-candidates": "the ideals passed with --radical are prime",
    "in-annihilator": "the chosen ideal I annihilates the singularity category of R",
    "countable-cm-type": "R is Cohen-Macaulay of countable CM representation type",
}


def validate_attestations(attestations: list[str]) -> tuple[bool, list[str]]:
    """
    Check attestation names against the accepted list

    Args:
        attestations: Names as typed by the user

    Returns:
        Tuple of (is_valid, list_of_unknown_names)
    """
    unknown = [name for name in attestations if name not in VALID_ATTESTATIONS]
    return len(unknown) == 0, unknown


def parse_attestations(text: str | None) -> list[str]:
    """Split a comma separated --attest value, dropping blanks and duplicates"""
    if not text:
        return []
    names = []
    for part in text.split(","):
        name = part.strip()
        if name and name not in names:
            names.append(name)
    return names


def get_attestations_list() -> str:
    """Formatted list for --help output"""
    return "\n".join(f"  - {name}: {ATTESTATION_DESCRIPTIONS[name]}" for name in VALID_ATTESTATIONS)
