"""
Polynomial arithmetic on sympy ring elements
"""

from sympy.polys.rings import PolyElement


def strip_zeros(f: PolyElement) -> PolyElement:
    """Drop explicitly stored zero coefficients (sympy's diff may leave them mod p)"""
    if all(f.values()):
        return f
    return f.ring.from_dict({m: c for m, c in f.items() if c})


def partial_derivative(f: PolyElement, index: int) -> PolyElement:
    """∂f/∂X_index"""
    return strip_zeros(f.diff(f.ring.gens[index]))


def poly_arith(op: str, *args, var: int | None = None) -> PolyElement:
    """
    Evaluate one arithmetic operation.

    Args:
        op: One of "add", "sub", "mul", "scalar_mul", "partial_derivative"
        *args: Operands; scalar_mul takes (scalar, f)
        var: Variable index for partial_derivative

    Returns:
        The canonical result
    """
    if op == "add":
        f, g = args
        return f + g
    if op == "sub":
        f, g = args
        return f - g
    if op == "mul":
        f, g = args
        return f * g
    if op == "scalar_mul":
        scalar, f = args
        return f.mul_ground(f.ring.domain.convert(scalar))
    if op == "partial_derivative":
        (f,) = args
        if var is None:
            raise ValueError("partial_derivative needs a variable index")
        return partial_derivative(f, var)
    raise ValueError(f"unknown polynomial operation {op!r}")
