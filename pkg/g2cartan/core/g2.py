"""The complex Lie algebra of G2 in its graded Chevalley-type basis."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..algebra.linalg import vec_add, vec_scale
from ..algebra.param_poly import ParamPoly
from ..algebra.scalar_tower import ONE, ZERO, Scalar, as_scalar
from ..errors import UnknownLabel
from ..types import RootDatum

LABELS: Tuple[str, ...] = (
    "f32",
    "f31",
    "f21",
    "f11",
    "f10",
    "f01",
    "Z1",
    "Z2",
    "e01",
    "e10",
    "e11",
    "e21",
    "e31",
    "e32",
)
INDEX: Dict[str, int] = {label: k for k, label in enumerate(LABELS)}

POSITIVE_ROOTS: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
CARTAN_LABELS = ("Z1", "Z2")


def _root_weight(label: str) -> Tuple[int, int]:
    if label in CARTAN_LABELS:
        return (0, 0)
    s, t = int(label[1]), int(label[2])
    return (s, t) if label[0] == "e" else (-s, -t)


WEIGHTS: Dict[str, Tuple[int, int]] = {label: _root_weight(label) for label in LABELS}

# Directed entries [a, b]; the reversed pair is filled in by antisymmetry.
_TABLE: Dict[Tuple[str, str], Dict[str, int]] = {
    ("Z1", "e10"): {"e10": 1},
    ("Z1", "e11"): {"e11": 1},
    ("Z1", "e21"): {"e21": 2},
    ("Z1", "e31"): {"e31": 3},
    ("Z1", "e32"): {"e32": 3},
    ("Z1", "f10"): {"f10": -1},
    ("Z1", "f11"): {"f11": -1},
    ("Z1", "f21"): {"f21": -2},
    ("Z1", "f31"): {"f31": -3},
    ("Z1", "f32"): {"f32": -3},
    ("Z2", "e01"): {"e01": 1},
    ("Z2", "e11"): {"e11": 1},
    ("Z2", "e21"): {"e21": 1},
    ("Z2", "e31"): {"e31": 1},
    ("Z2", "e32"): {"e32": 2},
    ("Z2", "f01"): {"f01": -1},
    ("Z2", "f11"): {"f11": -1},
    ("Z2", "f21"): {"f21": -1},
    ("Z2", "f31"): {"f31": -1},
    ("Z2", "f32"): {"f32": -2},
    ("e01", "e10"): {"e11": -1},
    ("e01", "e31"): {"e32": 1},
    ("e01", "f01"): {"Z1": -1, "Z2": 2},
    ("e01", "f11"): {"f10": 1},
    ("e01", "f32"): {"f31": -1},
    ("e10", "e11"): {"e21": 2},
    ("e10", "e21"): {"e31": -3},
    ("e10", "f10"): {"Z1": 2, "Z2": -3},
    ("e10", "f11"): {"f01": -3},
    ("e10", "f21"): {"f11": -2},
    ("e10", "f31"): {"f21": 1},
    ("e11", "e21"): {"e32": 3},
    ("e11", "f01"): {"e10": 1},
    ("e11", "f10"): {"e01": -3},
    ("e11", "f11"): {"Z1": -1, "Z2": 3},
    ("e11", "f21"): {"f10": 2},
    ("e11", "f32"): {"f21": -1},
    ("e21", "f10"): {"e11": -2},
    ("e21", "f11"): {"e10": 2},
    ("e21", "f21"): {"Z1": 1},
    ("e21", "f31"): {"f10": -1},
    ("e21", "f32"): {"f11": 1},
    ("e31", "f10"): {"e21": 1},
    ("e31", "f21"): {"e10": -1},
    ("e31", "f31"): {"Z1": 1, "Z2": -1},
    ("e31", "f32"): {"f01": 1},
    ("e32", "f01"): {"e31": -1},
    ("e32", "f11"): {"e21": -1},
    ("e32", "f21"): {"e11": 1},
    ("e32", "f31"): {"e01": 1},
    ("e32", "f32"): {"Z2": 1},
    ("f01", "f10"): {"f11": 1},
    ("f01", "f31"): {"f32": -1},
    ("f10", "f11"): {"f21": -2},
    ("f10", "f21"): {"f31": 3},
    ("f11", "f21"): {"f32": -3},
}


def _build_structure_constants() -> Dict[Tuple[str, str], Dict[str, Scalar]]:
    table: Dict[Tuple[str, str], Dict[str, Scalar]] = {}
    for (a, b), image in _TABLE.items():
        table[(a, b)] = {label: Scalar(c) for label, c in image.items()}
        table[(b, a)] = {label: Scalar(-c) for label, c in image.items()}
    return table


STRUCTURE_CONSTANTS = _build_structure_constants()


def bracket_labels(a: str, b: str) -> Dict[str, Scalar]:
    """[a, b] for two basis labels, as a sparse coefficient map."""
    if a not in INDEX:
        raise UnknownLabel(f"unknown basis label {a!r}")
    if b not in INDEX:
        raise UnknownLabel(f"unknown basis label {b!r}")
    return STRUCTURE_CONSTANTS.get((a, b), {})


def _coerce_coeff(value: Any) -> Any:
    if isinstance(value, ParamPoly):
        return value.constant_value() if value.is_constant() else value
    return as_scalar(value)


class G2Element:
    """Immutable element of g, stored sparsely by basis label."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[str, Any]] = None) -> None:
        data: Dict[str, Any] = {}
        for label, value in (coeffs or {}).items():
            if label not in INDEX:
                raise UnknownLabel(f"unknown basis label {label!r}")
            c = _coerce_coeff(value)
            if c:
                data[label] = c
        self._coeffs = data

    @classmethod
    def basis(cls, label: str) -> "G2Element":
        return cls({label: ONE})

    @classmethod
    def of(cls, **coeffs: Any) -> "G2Element":
        """Keyword constructor: G2Element.of(f10=1, e10=c)."""
        return cls(coeffs)

    @classmethod
    def zero(cls) -> "G2Element":
        return cls()

    def coeff(self, label: str) -> Any:
        if label not in INDEX:
            raise UnknownLabel(f"unknown basis label {label!r}")
        return self._coeffs.get(label, ZERO)

    def items(self) -> Iterator[Tuple[str, Any]]:
        """Nonzero coefficients in canonical label order."""
        for label in sorted(self._coeffs, key=INDEX.__getitem__):
            yield label, self._coeffs[label]

    @property
    def support(self) -> List[str]:
        return [label for label, _ in self.items()]

    def to_vector(self) -> Dict[str, Any]:
        return dict(self._coeffs)

    def coords(self) -> List[Any]:
        """Dense coordinates in canonical order."""
        return [self._coeffs.get(label, ZERO) for label in LABELS]

    def map(self, fn: Callable[[Any], Any]) -> "G2Element":
        return G2Element({label: fn(c) for label, c in self._coeffs.items()})

    def evaluate(self, value: Any) -> "G2Element":
        """Substitute a value for the formal parameter in every coefficient."""
        return self.map(lambda c: c.evaluate(value) if isinstance(c, ParamPoly) else c)

    def conj(self) -> "G2Element":
        return self.map(lambda c: c.conj())

    def is_parametric(self) -> bool:
        return any(isinstance(c, ParamPoly) for c in self._coeffs.values())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Any) -> "G2Element":
        if not isinstance(other, G2Element):
            return NotImplemented
        return G2Element(vec_add(self._coeffs, other._coeffs))

    def __sub__(self, other: Any) -> "G2Element":
        if not isinstance(other, G2Element):
            return NotImplemented
        return G2Element(vec_add(self._coeffs, vec_scale(-ONE, other._coeffs)))

    def __neg__(self) -> "G2Element":
        return G2Element(vec_scale(-ONE, self._coeffs))

    def __mul__(self, scalar: Any) -> "G2Element":
        if isinstance(scalar, G2Element):
            return NotImplemented
        if isinstance(scalar, (int, Fraction)):
            scalar = Scalar(scalar)
        return G2Element({label: c * scalar for label, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "G2Element":
        return self * as_scalar(scalar).inverse()

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, G2Element):
            return NotImplemented
        return not (self - other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for label, c in self.items():
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            elif isinstance(c, Scalar) and c.is_rational():
                parts.append(f"{c}*{label}")
            else:
                parts.append(f"({c})*{label}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __repr__(self) -> str:
        return f"G2Element({str(self)!r})"


def element(*terms: Tuple[Any, str]) -> G2Element:
    """Build sum(c * label) from (c, label) pairs."""
    total = G2Element()
    for c, label in terms:
        total = total + G2Element({label: c})
    return total


BASIS: Dict[str, G2Element] = {label: G2Element.basis(label) for label in LABELS}


def bracket(x: G2Element, y: G2Element) -> G2Element:
    """Bilinear antisymmetric extension of the structure constants."""
    out: Dict[str, Any] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            image = STRUCTURE_CONSTANTS.get((a, b))
            if not image:
                continue
            out = vec_add(out, vec_scale(ca * cb, image))
    return G2Element(out)


def ad(x: G2Element) -> Callable[[G2Element], G2Element]:
    return lambda y: bracket(x, y)


def coroot(root: str) -> G2Element:
    """h_st := [e_st, f_st]."""
    return bracket(BASIS[f"e{root}"], BASIS[f"f{root}"])


def killing_form(x: G2Element, y: G2Element) -> Any:
    """B(x, y) = tr(ad_x ad_y), computed from the structure constants."""
    total: Any = ZERO
    for label in LABELS:
        total = total + bracket(x, bracket(y, BASIS[label])).coeff(label)
    return total


_KILLING_WEIGHT = {"01": 8, "31": 8, "32": 8, "10": 24, "11": 24, "21": 24}


def killing_closed_form(x: G2Element, y: G2Element) -> Any:
    """The explicit quadratic expression for B on the basis coordinates."""
    xz1, xz2, yz1, yz2 = x.coeff("Z1"), x.coeff("Z2"), y.coeff("Z1"), y.coeff("Z2")
    total = 48 * xz1 * yz1 + 24 * (xz1 * yz2 + xz2 * yz1) + 16 * xz2 * yz2
    for root, w in _KILLING_WEIGHT.items():
        e, f = f"e{root}", f"f{root}"
        total = total + w * (x.coeff(e) * y.coeff(f) + x.coeff(f) * y.coeff(e))
    return total


def jacobiator(x: G2Element, y: G2Element, z: G2Element) -> G2Element:
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def jacobi_failures(labels: Iterable[str] = LABELS) -> List[Tuple[str, str, str]]:
    """Basis triples on which the Jacobi identity fails."""
    return [
        (a, b, c)
        for a, b, c in combinations(list(labels), 3)
        if jacobiator(BASIS[a], BASIS[b], BASIS[c])
    ]


# -- root data ----------------------------------------------------------


def _killing_on_cartan() -> List[List[Fraction]]:
    return [
        [killing_form(BASIS[a], BASIS[b]).to_fraction() for b in CARTAN_LABELS]
        for a in CARTAN_LABELS
    ]


@lru_cache(maxsize=None)
def weight_inner_matrix() -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """<,> on h* in the basis {alpha1, alpha2}: the inverse of B restricted to h."""
    (p, q), (r, s) = _killing_on_cartan()
    det = p * s - q * r
    return ((s / det, -q / det), (-r / det, p / det))


def weight_inner(lam: Tuple[Any, Any], mu: Tuple[Any, Any]) -> Fraction:
    m = weight_inner_matrix()
    return sum(
        (Fraction(lam[i]) * m[i][j] * Fraction(mu[j]) for i in range(2) for j in range(2)),
        Fraction(0),
    )


def cartan_matrix() -> Tuple[Tuple[int, int], Tuple[int, int]]:
    simple = ((1, 0), (0, 1))
    rows = []
    for ai in simple:
        row = []
        for aj in simple:
            value = 2 * weight_inner(ai, aj) / weight_inner(aj, aj)
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)  # type: ignore[return-value]


def fundamental_weights() -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """Weights with 2<lam_i, alpha_j>/<alpha_j, alpha_j> = delta_ij, in simple-root coordinates."""
    simple = ((1, 0), (0, 1))
    # linear system in the coordinates (x, y) of lam = x alpha1 + y alpha2
    coeffs = [
        [2 * weight_inner(basis, aj) / weight_inner(aj, aj) for basis in simple]
        for aj in simple
    ]
    (p, q), (r, s) = coeffs
    det = p * s - q * r
    result = []
    for target in ((1, 0), (0, 1)):
        x = (target[0] * s - q * target[1]) / det
        y = (p * target[1] - r * target[0]) / det
        result.append((x, y))
    return tuple(result)  # type: ignore[return-value]


def root_decomposition() -> Dict[Tuple[int, int], str]:
    """Root (s, t), meaning s*alpha1 + t*alpha2, to its root vector label."""
    return {WEIGHTS[label]: label for label in LABELS if label not in CARTAN_LABELS}


def root_datum() -> RootDatum:
    lam1, lam2 = fundamental_weights()
    return RootDatum(
        simple_roots=[(1, 0), (0, 1)],
        positive_roots=list(POSITIVE_ROOTS),
        cartan_matrix=[list(row) for row in cartan_matrix()],
        fundamental_weights=[
            (int(lam1[0]), int(lam1[1])),
            (int(lam2[0]), int(lam2[1])),
        ],
    )


def eigenvalue_failures() -> List[Tuple[str, str]]:
    """(h, label) pairs where [h, e_alpha] != alpha(h) e_alpha, for h in {Z1, Z2}."""
    failures = []
    for label in LABELS:
        weight = WEIGHTS[label]
        for k, h in enumerate(CARTAN_LABELS):
            expected = BASIS[label] * weight[k]
            if bracket(BASIS[h], BASIS[label]) != expected:
                failures.append((h, label))
    return failures
