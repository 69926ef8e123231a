"""Exact scalars in the tower Q -> Q(i) -> Q(i)(s), with s^2 = r.

A ``Scalar`` is p + q*s with p, q in sympy's Gaussian rationals ``QQ_I``.
The adjoined root s is always the positive real square root of a positive,
non-square rational r; imaginary roots are written i*s.  Values without an
s-part carry no extension at all, so two scalars only clash when both have
a nonzero s-part over different r.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Tuple, Union

import sympy
from sympy.polys.domains import QQ, QQ_I

from ..errors import DivisionByZero, IncompatibleExtensions, NotReal

Rational = Union[int, Fraction]
Gaussian = Any  # element of QQ_I


def _qq(value: Any) -> Any:
    q = Fraction(value)
    return QQ(q.numerator, q.denominator)


def _fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def gaussian(re_part: Rational = 0, im_part: Rational = 0) -> Gaussian:
    return QQ_I(_qq(re_part), _qq(im_part))


def is_rational_square(q: Fraction) -> bool:
    """True when q >= 0 is the square of a rational number."""
    if q < 0:
        return False
    return bool(sympy.sqrt(sympy.Rational(q.numerator, q.denominator)).is_Rational)


def rational_sqrt(q: Fraction) -> Fraction:
    """Square root of a rational square."""
    root = sympy.sqrt(sympy.Rational(q.numerator, q.denominator))
    if q < 0 or not root.is_Rational:
        raise ValueError(f"{q} is not the square of a rational")
    return Fraction(int(root.p), int(root.q))


def validate_extension(r: Rational) -> Fraction:
    return _validated(Fraction(r))


@lru_cache(maxsize=None)
def _validated(r: Fraction) -> Fraction:
    if r <= 0:
        raise ValueError(f"extension root must be positive, got {r}")
    if is_rational_square(r):
        raise ValueError(f"extension root {r} is already a rational square")
    return r


def root_expr(r: Fraction) -> sympy.Expr:
    """The positive square root of r as a sympy expression."""
    return sympy.sqrt(sympy.Rational(r.numerator, r.denominator))


class Scalar:
    """Immutable element of Q(i)(s)."""

    __slots__ = ("_p", "_q", "_r")

    def __init__(
        self,
        c0: Rational = 0,
        c1: Rational = 0,
        c2: Rational = 0,
        c3: Rational = 0,
        r: Optional[Rational] = None,
    ) -> None:
        self._init(gaussian(c0, c1), gaussian(c2, c3), r)

    def _init(self, p: Gaussian, q: Gaussian, r: Optional[Rational]) -> None:
        if not _nonzero(q):
            ext = None
        elif r is None:
            raise IncompatibleExtensions("s-coordinates require an active extension")
        else:
            ext = validate_extension(r)
        self._p = p
        self._q = q
        self._r = ext

    @classmethod
    def _make(cls, p: Gaussian, q: Gaussian, r: Optional[Rational]) -> "Scalar":
        out = cls.__new__(cls)
        out._init(p, q, r)
        return out

    # -- constructors -------------------------------------------------

    @classmethod
    def i(cls) -> "Scalar":
        return cls(0, 1)

    @classmethod
    def root(cls, r: Rational) -> "Scalar":
        """The adjoined positive root s with s^2 = r."""
        return cls(0, 0, 1, 0, r)

    @classmethod
    def from_gaussian(cls, value: Gaussian) -> "Scalar":
        return cls._make(QQ_I.convert(value), QQ_I.zero, None)

    @classmethod
    def from_sympy(cls, expr: Any, r: Optional[Rational] = None) -> "Scalar":
        """Read an exact sympy number a + b*sqrt(r) with Gaussian a, b."""
        expanded = sympy.expand(sympy.sympify(expr))
        if r is None:
            return cls.from_gaussian(QQ_I.from_sympy(expanded))
        ext = validate_extension(r)
        scale, radical = root_expr(ext).as_coeff_Mul()
        tail = expanded.coeff(radical)
        lead = sympy.expand(expanded - tail * radical)
        return cls._make(
            QQ_I.from_sympy(lead), QQ_I.from_sympy(sympy.expand(tail / scale)), ext
        )

    @classmethod
    def coerce(cls, value: Any) -> Optional["Scalar"]:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        return None

    # -- accessors ----------------------------------------------------

    @property
    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        p, q = self._p, self._q
        return (_fraction(p.x), _fraction(p.y), _fraction(q.x), _fraction(q.y))

    @property
    def ext(self) -> Optional[Fraction]:
        return self._r

    def is_real(self) -> bool:
        return self._p.y == 0 and self._q.y == 0

    def is_rational(self) -> bool:
        return self._p.y == 0 and not _nonzero(self._q)

    def is_gaussian(self) -> bool:
        return self._r is None

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return _fraction(self._p.x)

    def to_gaussian(self) -> Gaussian:
        if not self.is_gaussian():
            raise IncompatibleExtensions(f"{self} is not in Q(i)", witness=self)
        return self._p

    def to_sympy(self) -> sympy.Expr:
        value = QQ_I.to_sympy(self._p)
        if self._r is not None:
            value = value + QQ_I.to_sympy(self._q) * root_expr(self._r)
        return value

    def conj(self) -> "Scalar":
        return Scalar._make(_conjugate(self._p), _conjugate(self._q), self._r)

    def real_part(self) -> "Scalar":
        return Scalar._make(QQ_I(self._p.x, 0), QQ_I(self._q.x, 0), self._r)

    def imag_part(self) -> "Scalar":
        return Scalar._make(QQ_I(self._p.y, 0), QQ_I(self._q.y, 0), self._r)

    # -- arithmetic ---------------------------------------------------

    def _join(self, other: "Scalar") -> Optional[Fraction]:
        if self._r is None:
            return other._r
        if other._r is None or other._r == self._r:
            return self._r
        raise IncompatibleExtensions(
            f"cannot combine s^2={self._r} with s^2={other._r}",
            witness=(self, other),
        )

    def __add__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        r = self._join(y)
        return Scalar._make(self._p + y._p, self._q + y._q, r)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self._p, -self._q, self._r)

    def __pos__(self) -> "Scalar":
        return self

    def __sub__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        return y + (-self)

    def __mul__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        r = self._join(y)
        lead = self._p * y._p
        if r is not None:
            lead = lead + self._q * y._q * gaussian(r)
        tail = self._p * y._q + self._q * y._p
        return Scalar._make(lead, tail, r)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("division by zero scalar")
        norm = self._p * self._p
        if self._r is not None:
            # p^2 - r q^2 is nonzero since r is not a square in Q(i)
            norm = norm - self._q * self._q * gaussian(self._r)
        inv = QQ_I.one / norm
        return Scalar._make(self._p * inv, -self._q * inv, self._r)

    def __truediv__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        return self * y.inverse()

    def __rtruediv__(self, other: Any) -> "Scalar":
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        return y * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = Scalar(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    # -- comparison ---------------------------------------------------

    def __bool__(self) -> bool:
        return _nonzero(self._p) or _nonzero(self._q)

    def __eq__(self, other: Any) -> bool:
        y = Scalar.coerce(other)
        if y is None:
            return NotImplemented
        return self.coords == y.coords and (self._r == y._r or not _nonzero(self._q))

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.coords, self._r))

    # -- rendering ----------------------------------------------------

    def to_literal(self) -> str:
        """Render in the literal grammar, e.g. ``1/2 - 3*i + 2/7*i*s``."""
        pieces = []
        for coeff, suffix in zip(self.coords, ("", "*i", "*s", "*i*s")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, f"{abs(coeff)}{suffix}"))
        if not pieces:
            return "0"
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        if self._r is None:
            return f"Scalar({self.to_literal()!r})"
        return f"Scalar({self.to_literal()!r}, s^2={self._r})"


def _nonzero(value: Gaussian) -> bool:
    return value.x != 0 or value.y != 0


def _conjugate(value: Gaussian) -> Gaussian:
    return QQ_I(value.x, -value.y)


ScalarLike = Union[int, Fraction, Scalar]

ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar.i()  # noqa: E741


def as_scalar(value: ScalarLike) -> Scalar:
    result = Scalar.coerce(value)
    if result is None:
        raise TypeError(f"cannot interpret {value!r} as a Scalar")
    return result


def scalar_arith(x: ScalarLike, y: ScalarLike, op: str) -> Scalar:
    """Apply one of add, sub, mul, div to two scalars."""
    a, b = as_scalar(x), as_scalar(y)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def real_sign(x: ScalarLike) -> int:
    """Exact sign of a real scalar c0 + c2*sqrt(r)."""
    value = as_scalar(x)
    if not value.is_real():
        raise NotReal(f"{value} is not real", witness=value)
    c0, _, c2, _ = value.coords
    s0 = (c0 > 0) - (c0 < 0)
    s2 = (c2 > 0) - (c2 < 0)
    if s2 == 0:
        return s0
    if s0 == 0 or s0 == s2:
        return s2
    r = value.ext
    assert r is not None
    lhs, rhs = c0 * c0, c2 * c2 * r
    # c0^2 != c2^2 r since r is not a rational square
    return s0 if lhs > rhs else s2


def sqrt_scalar(q: Rational) -> Scalar:
    """A square root of the rational q inside the tower.

    Squares give rationals, negatives of squares give Gaussian values, and
    everything else adjoins s with s^2 = |q|, multiplied by i when q < 0.
    """
    q = Fraction(q)
    if q == 0:
        return ZERO
    magnitude = abs(q)
    if is_rational_square(magnitude):
        root = Scalar(rational_sqrt(magnitude))
    else:
        root = Scalar.root(magnitude)
    return root if q > 0 else I * root


_TERM = re.compile(r"[+-]?[^+-]+")
_NUMBER = re.compile(r"^\d+(/\d+)?$")


def parse_scalar(text: str, ext: Optional[Rational] = None) -> Scalar:
    """Parse the literal grammar ``p/q``, ``p/q*i``, ``p/q*s``, ``p/q*i*s`` joined by +/-."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty scalar literal")
    if compact[0] not in "+-":
        compact = "+" + compact
    terms = _TERM.findall(compact)
    if "".join(terms) != compact:
        raise ValueError(f"malformed scalar literal {text!r}")
    total = ZERO
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term[1:]
        if not body:
            raise ValueError(f"malformed scalar literal {text!r}")
        coeff = Fraction(sign)
        has_i = has_s = False
        for factor in body.split("*"):
            if factor == "i" and not has_i:
                has_i = True
            elif factor == "s" and not has_s:
                has_s = True
            elif _NUMBER.match(factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"unexpected factor {factor!r} in {text!r}")
        if has_s and ext is None:
            raise ValueError(f"literal {text!r} uses s but no extension was declared")
        piece = Scalar(coeff)
        if has_i:
            piece = piece * I
        if has_s:
            piece = piece * Scalar.root(ext)  # type: ignore[arg-type]
        total = total + piece
    return total
