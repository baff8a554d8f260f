"""
Gröbner bases, normal forms, syzygies and elimination
"""

from .basis import GroebnerBasis, reduced_groebner, normal_form
from .engine import buchberger, reduce_polynomial, spoly, spair_certificate
from .modules import ModuleElement, FreeModuleEncoding, ModuleGroebnerBasis, submodule_basis
from .syzygy import SyzygyBasis, syzygies
from .elimination import eliminate, intersect_ideals, adjoin_variables, lift, restrict

__all__ = [
    "GroebnerBasis",
    "reduced_groebner",
    "normal_form",
    "buchberger",
    "reduce_polynomial",
    "spoly",
    "spair_certificate",
    "ModuleElement",
    "FreeModuleEncoding",
    "ModuleGroebnerBasis",
    "submodule_basis",
    "SyzygyBasis",
    "syzygies",
    "eliminate",
    "intersect_ideals",
    "adjoin_variables",
    "lift",
    "restrict",
]
