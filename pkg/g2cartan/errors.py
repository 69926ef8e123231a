"""Exception hierarchy for G2Cartan."""

from typing import Any, Optional


class G2CartanError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


class DivisionByZero(G2CartanError, ZeroDivisionError):
    """Exact division by a zero scalar."""


class IncompatibleExtensions(G2CartanError):
    """Two scalars carry different adjoined square roots."""


class NotReal(G2CartanError):
    """A sign was requested for a scalar outside the real subfield."""


class NotInFiltrand(G2CartanError):
    """An element does not lie in the requested filtrand."""


class NotNilpotent(G2CartanError):
    """The adjoint series did not terminate."""


class NotInG0(G2CartanError):
    """An element is not in the degree-zero part of the grading."""


class ZeroQuartic(G2CartanError):
    """The zero quartic has no Tanaka prolongation of interest."""


class NotInE(G2CartanError):
    """A cochain does not lie in the curvature module."""


class UnknownLabel(G2CartanError, KeyError):
    """A model, row or anti-involution label is not in the catalog."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


class RealityViolation(G2CartanError):
    """A model parameter fails the reality condition for an anti-involution."""


class StructureViolation(G2CartanError):
    """A map fails to be an anti-involution of the algebra or model."""


class NotClosed(G2CartanError):
    """A proposed real basis does not close under the bracket."""


class NotRealMatrix(G2CartanError):
    """A Killing matrix has entries outside the real subfield."""


class ExceptionalRatio(G2CartanError):
    """The rolling ratio hits the exceptional value or a pole of the invariant."""

    def __init__(self, message: str, symmetry_dim: int = 14) -> None:
        super().__init__(message)
        self.symmetry_dim = symmetry_dim


class ResidualNonzero(G2CartanError):
    """A fitted bracket relation left a nonzero residual."""
