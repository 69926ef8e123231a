"""Anti-involutions, real fixed-point algebras and the real model tables."""

from .fixed import (
    PRINTED_BASES,
    RealFixedAlgebra,
    classification_labels,
    classify_real_models,
    fixed_point_algebra,
    printed_basis_algebra,
    real_holonomy,
    verify_anti_involution,
    verify_real_tables,
)
from .maps import BasisMap, a_lambda, a_tilde, all_anti_involutions, anti_involution, psi, psi_tilde, tau
from .signature import HOLONOMY_TYPES, MODEL_TYPES, killing_signature
from .so13 import so13_models, verify_so13

__all__ = [
    "HOLONOMY_TYPES",
    "MODEL_TYPES",
    "PRINTED_BASES",
    "BasisMap",
    "RealFixedAlgebra",
    "a_lambda",
    "a_tilde",
    "all_anti_involutions",
    "anti_involution",
    "classification_labels",
    "classify_real_models",
    "fixed_point_algebra",
    "killing_signature",
    "printed_basis_algebra",
    "psi",
    "psi_tilde",
    "real_holonomy",
    "so13_models",
    "tau",
    "verify_anti_involution",
    "verify_real_tables",
    "verify_so13",
]
