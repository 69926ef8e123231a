"""The rolling-sphere distribution as an algebraic model."""

from .algebra import RollingAlgebra, involution_failures
from .embedding import (
    EmbeddingSolution,
    classify_rolling,
    classifying_invariant,
    invariant_monotonicity_check,
    solve_embedding,
    verify_rolling,
)

__all__ = [
    "EmbeddingSolution",
    "RollingAlgebra",
    "classify_rolling",
    "classifying_invariant",
    "invariant_monotonicity_check",
    "involution_failures",
    "solve_embedding",
    "verify_rolling",
]
