"""Univariate polynomials over Q(i) in one formal parameter, backed by ``sympy.Poly``."""

from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ_I

from ..errors import DivisionByZero, IncompatibleExtensions
from .scalar_tower import ZERO, Scalar, ScalarLike, as_scalar


def _gaussian(value: Scalar) -> Any:
    if not value.is_gaussian():
        raise IncompatibleExtensions(
            f"formal parameters take coefficients in Q(i), got {value}", witness=value
        )
    return value.to_gaussian()


class ParamPoly:
    """Immutable polynomial sum(coeffs[k] * name^k) with Gaussian coefficients."""

    __slots__ = ("_poly", "_name")

    def __init__(self, coeffs: Iterable[ScalarLike], name: str = "a") -> None:
        scalars: List[Scalar] = [as_scalar(c) for c in coeffs]
        symbol = sympy.Symbol(name)
        if any(scalars):
            rep = [_gaussian(c) for c in reversed(scalars)]
            self._poly = sympy.Poly.from_list(rep, symbol, domain=QQ_I)
        else:
            self._poly = sympy.Poly(0, symbol, domain=QQ_I)
        self._name = name

    @classmethod
    def from_poly(cls, poly: sympy.Poly) -> "ParamPoly":
        out = cls.__new__(cls)
        out._poly = poly.set_domain(QQ_I)
        out._name = poly.gens[0].name
        return out

    @classmethod
    def from_sympy(cls, expr: Any, name: str = "a") -> "ParamPoly":
        return cls.from_poly(sympy.Poly(expr, sympy.Symbol(name), domain=QQ_I))

    @classmethod
    def variable(cls, name: str = "a") -> "ParamPoly":
        return cls([0, 1], name)

    @classmethod
    def constant(cls, value: ScalarLike, name: str = "a") -> "ParamPoly":
        return cls([value], name)

    @property
    def name(self) -> str:
        return self._name

    @property
    def poly(self) -> sympy.Poly:
        return self._poly

    @property
    def coeffs(self) -> Sequence[Scalar]:
        """Coefficients in increasing degree, without trailing zeros."""
        if self._poly.is_zero:
            return ()
        return tuple(
            Scalar.from_gaussian(QQ_I.from_sympy(c))
            for c in reversed(self._poly.all_coeffs())
        )

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self._poly.is_zero else int(self._poly.degree())

    def leading(self) -> Scalar:
        coeffs = self.coeffs
        return coeffs[-1] if coeffs else ZERO

    def is_constant(self) -> bool:
        return self.degree <= 0

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        coeffs = self.coeffs
        return coeffs[0] if coeffs else ZERO

    def evaluate(self, value: Any) -> Any:
        """Horner evaluation at a Scalar or at another ParamPoly."""
        result: Any = ZERO
        for coeff in reversed(self.coeffs):
            result = result * value + coeff
        return result

    def conj(self) -> "ParamPoly":
        """Conjugate the coefficients, treating the parameter as real."""
        return ParamPoly([c.conj() for c in self.coeffs], self._name)

    def to_sympy(self) -> sympy.Expr:
        return self._poly.as_expr()

    # -- arithmetic ---------------------------------------------------

    def _lift(self, other: Any) -> Optional["ParamPoly"]:
        if isinstance(other, ParamPoly):
            if other._name == self._name:
                return other
            if other.degree > 0 and self.degree > 0:
                raise ValueError(
                    f"cannot mix parameters {self._name!r} and {other._name!r}"
                )
            if other.degree <= 0:
                return ParamPoly(other.coeffs, self._name)
            return other
        scalar = Scalar.coerce(other)
        if scalar is None:
            return None
        return ParamPoly([scalar], self._name)

    def _align(self, other: "ParamPoly") -> Tuple[sympy.Poly, sympy.Poly, str]:
        if other._name == self._name:
            return self._poly, other._poly, self._name
        # self is constant here
        return ParamPoly(self.coeffs, other._name)._poly, other._poly, other._name

    def _wrap(self, poly: sympy.Poly) -> "ParamPoly":
        return ParamPoly.from_poly(poly)

    def __add__(self, other: Any) -> "ParamPoly":
        y = self._lift(other)
        if y is None:
            return NotImplemented
        a, b, _ = self._align(y)
        return self._wrap(a + b)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return self._wrap(-self._poly)

    def __sub__(self, other: Any) -> "ParamPoly":
        y = self._lift(other)
        if y is None:
            return NotImplemented
        a, b, _ = self._align(y)
        return self._wrap(a - b)

    def __rsub__(self, other: Any) -> "ParamPoly":
        y = self._lift(other)
        if y is None:
            return NotImplemented
        a, b, _ = self._align(y)
        return self._wrap(b - a)

    def __mul__(self, other: Any) -> "ParamPoly":
        y = self._lift(other)
        if y is None:
            return NotImplemented
        a, b, _ = self._align(y)
        return self._wrap(a * b)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        return self._wrap(self._poly**n)

    def divmod(self, other: "ParamPoly") -> "Tuple[ParamPoly, ParamPoly]":
        """Euclidean division over Q(i)."""
        if not other:
            raise DivisionByZero("polynomial division by zero")
        a, b, _ = self._align(other)
        quotient, remainder = a.div(b)
        return self._wrap(quotient), self._wrap(remainder)

    def __truediv__(self, other: Any) -> "ParamPoly":
        """Exact division; raises ValueError when the division leaves a remainder."""
        y = self._lift(other)
        if y is None:
            return NotImplemented
        quotient, remainder = self.divmod(y)
        if remainder:
            raise ValueError(f"{self} is not divisible by {y}")
        return quotient

    # -- comparison ---------------------------------------------------

    def __bool__(self) -> bool:
        return not self._poly.is_zero

    def __eq__(self, other: Any) -> bool:
        try:
            y = self._lift(other)
        except ValueError:
            return False
        if y is None:
            return NotImplemented
        return tuple(self.coeffs) == tuple(y.coeffs)

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((tuple(self.coeffs), self._name))

    def __str__(self) -> str:
        coeffs = self.coeffs
        if not coeffs:
            return "0"
        terms = []
        for k in range(len(coeffs) - 1, -1, -1):
            c = coeffs[k]
            if not c:
                continue
            if k == 0:
                power = ""
            elif k == 1:
                power = self._name
            else:
                power = f"{self._name}^{k}"
            if not power:
                body = c.to_literal()
            elif c == 1:
                body = power
            elif c == -1:
                body = f"-{power}"
            elif c.is_rational():
                body = f"{c.to_literal()}*{power}"
            else:
                body = f"({c.to_literal()})*{power}"
            terms.append(body)
        text = terms[0]
        for body in terms[1:]:
            text += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return text

    def __repr__(self) -> str:
        return f"ParamPoly({str(self)!r})"


def poly(*coeffs: Any, name: str = "a") -> ParamPoly:
    """Shorthand: poly(9, 0, 4) is 4*a^2 + 9."""
    return ParamPoly([Fraction(c) if isinstance(c, int) else c for c in coeffs], name)
