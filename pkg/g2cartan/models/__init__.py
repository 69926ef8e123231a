"""Multiply-transitive algebraic models, their verification, holonomy and dictionaries."""

from .catalog import AlgebraicModel, build_model, curvature_coefficients
from .dictionary import ROWS, verify_dictionary
from .holonomy import HolonomySubspace, almost_einstein_dim, holonomy
from .iii6 import replicate_iii6_obstruction
from .lie import StructureTable
from .verify import harmonic_curvature, verify_model

__all__ = [
    "ROWS",
    "AlgebraicModel",
    "HolonomySubspace",
    "StructureTable",
    "almost_einstein_dim",
    "build_model",
    "curvature_coefficients",
    "harmonic_curvature",
    "holonomy",
    "replicate_iii6_obstruction",
    "verify_dictionary",
    "verify_model",
]
