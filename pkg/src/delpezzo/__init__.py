"""Exact computations on del Pezzo lattices, Weyl groups, (-2)-curve
configurations, regular elements of gl_n, spectral curves and cameral covers."""

from .lattice import LatticeVector, canonical_class, inner
from .roots import enumerate_lines, enumerate_roots, standard_simple_system
from .singularities import RootConfig, classify_ADE, torus_connected
from .weyl import group_order, reflection

__all__ = [
    "LatticeVector",
    "RootConfig",
    "canonical_class",
    "classify_ADE",
    "enumerate_lines",
    "enumerate_roots",
    "group_order",
    "inner",
    "reflection",
    "standard_simple_system",
    "torus_connected",
]
