"""
Derived-category ball strategies for a quotient S = R/I
"""

# Order matters: "auto" breaks radius ties by this order
VALID_STRATEGIES = [
    "artinian",
    "regular",
    "nilpotent-filtration",
    "socle-split",
]

STRATEGY_CHOICES = ["auto", *VALID_STRATEGIES]

STRATEGY_DESCRIPTIONS = {
    "artinian": "dim S = 0: D^b(S) = <S/rad S>_{ll(S)}",
    "regular": "S regular: D^b(S) = <S>_{dim S + 1}",
    "nilpotent-filtration": "verified nilradical P with S/P regular: <S/P>_{n(S)(dim S/P + 1)}",
    "socle-split": "unique minimal prime p, S/(0:p) artinian, S/p regular: <k>_{ll} * <S/p>_{dim + 1}",
}

# provenance tag attached to strategies whose validity is only known for an example shape
EXAMPLE_PATTERN_STRATEGIES = {"socle-split"}


def validate_strategy(name: str) -> tuple[bool, list[str]]:
    """
    Args:
        name: Strategy name from the command line

    Returns:
        Tuple of (is_valid, list_of_invalid_names)
    """
    if name in STRATEGY_CHOICES:
        return True, []
    return False, [name]
