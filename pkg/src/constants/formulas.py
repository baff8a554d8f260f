"""
Bound formulas the calculator can evaluate and what each one cites
"""

VALID_FORMULAS = [
    "main",
    "main-radius",
    "liu",
    "dimsing0",
    "dimsing1",
    "countable-cm",
    "depth-zero",
]

FORMULA_DESCRIPTIONS = {
    "main": "D_sg(R) = <D^b(R/I) ball>_{radius·(mu(I) - grade I + 1)} when I annihilates D_sg(R); "
            "otherwise <filt{R/p : p in V(I)}>_{mu(I) - grade I + 1}",
    "main-radius": "D_sg(R) = <G>_{(radius(mod R/I) + 1)(mu(I) - grade I + 1)} for a supplied module radius",
    "liu": "D_sg(R) = <k>_{(mu(I) - depth R + 1)·ll(R/I)} for R/I artinian",
    "dimsing0": "dim D_sg(R) <= ll(R/I)(mu(I) - grade I + 1) - 1 for R/I artinian",
    "dimsing1": "dim D_sg(R) <= 2n(S)(ll(T) + 1)(mu(I) - grade I + 1) - 1 for dim Sing R <= 1",
    "countable-cm": "min{(ll(R/I) + 1)(mu(I) - dim R + 1) - 1, 2n(S)(ll(T) + 1)(mu(I) - grade I + 1) - 1}",
    "depth-zero": "depth R = 0: D_sg(R) = <mod(R/soc R)>, radius taken from D^b(R/soc R)",
}


def validate_formula(name: str) -> tuple[bool, list[str]]:
    if name in VALID_FORMULAS:
        return True, []
    return False, [name]
