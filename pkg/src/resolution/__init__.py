"""
Free resolutions, depth and homology over presented rings
"""

from .free_resolution import (
    FreeResolution,
    minimal_free_resolution,
    iter_resolution_maps,
    resolve_ring,
    depth_graded,
    quotient_presentation,
    prune_units,
)
from .homology import homology_vanishes, koszul_differential, koszul_homology_vanishes
from .ext_oracle import grade_ext_oracle

__all__ = [
    "FreeResolution",
    "minimal_free_resolution",
    "iter_resolution_maps",
    "resolve_ring",
    "depth_graded",
    "quotient_presentation",
    "prune_units",
    "homology_vanishes",
    "koszul_differential",
    "koszul_homology_vanishes",
    "grade_ext_oracle",
]
