"""Kostant homology for (G2, P1) and the curvature module of (2,3,5)-geometries."""

from .complexes import (
    Chain,
    Cochain,
    act_chain,
    act_cochain,
    hodge_decompose,
    laplacian,
    partial,
    partial_star,
    to_chain,
    to_cochain,
)
from .curvature_module import NAMES, CurvatureModule, curvature_module, generate_E, quartic_covariants

__all__ = [
    "NAMES",
    "Chain",
    "Cochain",
    "CurvatureModule",
    "act_chain",
    "act_cochain",
    "curvature_module",
    "generate_E",
    "hodge_decompose",
    "laplacian",
    "partial",
    "partial_star",
    "quartic_covariants",
    "to_chain",
    "to_cochain",
]
