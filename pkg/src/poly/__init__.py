"""
Exact polynomial arithmetic, monomial orders and presented rings
"""

from .fields import FieldSpec, parse_field
from .orders import WeightedGrevlex, EliminationOrder, ModuleOrder
from .arith import poly_arith, partial_derivative
from .parser import parse_polynomial, format_polynomial, split_top_level
from .matrices import PolyMatrix, jacobian_matrix, minors, determinant
from .ring import RingPresentation, build_ring
from .ring_file import RingFile, parse_ring_file, load_ring_file, emit_ring_file

__all__ = [
    "FieldSpec",
    "parse_field",
    "WeightedGrevlex",
    "EliminationOrder",
    "ModuleOrder",
    "poly_arith",
    "partial_derivative",
    "parse_polynomial",
    "format_polynomial",
    "split_top_level",
    "PolyMatrix",
    "jacobian_matrix",
    "minors",
    "determinant",
    "RingPresentation",
    "build_ring",
    "RingFile",
    "parse_ring_file",
    "load_ring_file",
    "emit_ring_file",
]
