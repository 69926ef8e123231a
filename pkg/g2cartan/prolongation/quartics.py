"""Binary quartics, the g0-action on them and the Tanaka prolongation of their annihilators."""

import random
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.linalg import LinearCoordinates
from ..algebra.scalar_tower import ZERO, as_scalar
from ..core.g2 import BASIS, G2Element, bracket
from ..core.parabolic import G0, graded_component
from ..errors import NotInG0, ZeroQuartic
from ..types import RootType

MONOMIALS: Tuple[str, ...] = ("y^4", "x*y^3", "x^2*y^2", "x^3*y", "x^4")


class BinaryQuartic:
    """sum c_k x^k y^(4-k), stored as (c_0, .., c_4)."""

    __slots__ = ("coeffs", "tag")

    def __init__(self, coeffs: Sequence[Any], tag: Optional[RootType] = None) -> None:
        if len(coeffs) != 5:
            raise ValueError(f"a binary quartic has 5 coefficients, got {len(coeffs)}")
        self.coeffs: Tuple[Any, ...] = tuple(
            c if hasattr(c, "evaluate") else as_scalar(c) for c in coeffs
        )
        self.tag = tag

    @classmethod
    def monomial(cls, k: int) -> "BinaryQuartic":
        coeffs: List[Any] = [0] * 5
        coeffs[k] = 1
        return cls(coeffs)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, BinaryQuartic):
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "BinaryQuartic") -> "BinaryQuartic":
        return BinaryQuartic([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, scalar: Any) -> "BinaryQuartic":
        return BinaryQuartic([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def to_vector(self) -> Dict[int, Any]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def is_proportional_to(self, other: "BinaryQuartic") -> bool:
        """True when both are nonzero and span the same line."""
        if not self or not other:
            return False
        return LinearCoordinates([other.to_vector()]).contains(self.to_vector())

    def __str__(self) -> str:
        terms = [
            f"{c}*{m}" if c != 1 else m
            for c, m in zip(self.coeffs, MONOMIALS)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"BinaryQuartic({str(self)!r})"


def _normal_forms(k: Fraction = Fraction(-1)) -> Dict[RootType, BinaryQuartic]:
    return {
        RootType.N: BinaryQuartic([1, 0, 0, 0, 0], RootType.N),
        RootType.III: BinaryQuartic([0, 1, 0, 0, 0], RootType.III),
        RootType.D: BinaryQuartic([0, 0, 1, 0, 0], RootType.D),
        # x^2 y (x - y)
        RootType.II: BinaryQuartic([0, 0, -1, 1, 0], RootType.II),
        # x y (x - y)(x - k y)
        RootType.I: BinaryQuartic([0, k, -(1 + k), 1, 0], RootType.I),
    }


NORMAL_FORMS = _normal_forms()


def normal_form(tag: RootType, k: Fraction = Fraction(-1)) -> BinaryQuartic:
    if tag == RootType.I and k in (0, 1):
        raise ValueError("type I needs k outside {0, 1}")
    return _normal_forms(k)[tag]


def g0_action(x: G2Element, phi: BinaryQuartic) -> BinaryQuartic:
    """Action of x in g0 via Z1 -> 4, Z2 -> x d/dx, e01 -> x d/dy, f01 -> y d/dx."""
    outside = [label for label in x.support if label not in G0]
    if outside:
        raise NotInG0(f"{x} has components outside g0: {outside}", witness=x)
    out: List[Any] = [ZERO] * 5
    z1, z2, e, f = (x.coeff(label) for label in ("Z1", "Z2", "e01", "f01"))
    for k, c in enumerate(phi.coeffs):
        if not c:
            continue
        out[k] = out[k] + (4 * z1 + k * z2) * c
        if k < 4:
            out[k + 1] = out[k + 1] + (4 - k) * e * c
        if k > 0:
            out[k - 1] = out[k - 1] + k * f * c
    return BinaryQuartic(out)


def exp_g0_action(n: G2Element, phi: BinaryQuartic) -> BinaryQuartic:
    """exp(n) acting on phi for nilpotent n in g0."""
    total = phi
    term = phi
    for k in range(1, 6):
        term = g0_action(n, term) * as_scalar(Fraction(1, k))
        if not term:
            return total
        total = total + term
    return total


def _g0_basis() -> List[G2Element]:
    return [BASIS[label] for label in G0]


def annihilator(phi: BinaryQuartic) -> List[G2Element]:
    """Basis of ann(phi) = {x in g0 : x.phi = 0}."""
    basis = _g0_basis()
    coords = LinearCoordinates([g0_action(b, phi).to_vector() for b in basis])
    out = []
    for relation in coords.relations:
        total = G2Element()
        for index, c in relation.items():
            total = total + basis[index] * c
        out.append(total)
    return out


def same_span(first: Iterable[G2Element], second: Iterable[G2Element]) -> bool:
    a = [x.to_vector() for x in first]
    b = [x.to_vector() for x in second]
    span_a, span_b = LinearCoordinates(a), LinearCoordinates(b)
    return span_a.dim == span_b.dim and all(span_a.contains(v) for v in b)


class Prolongation:
    """Graded subalgebra a^phi = g- + ann(phi) + a_1 + a_2 + a_3."""

    def __init__(self, phi: BinaryQuartic) -> None:
        if not phi:
            raise ZeroQuartic("the zero quartic has no Tanaka prolongation of interest")
        self.phi = phi
        self.components: Dict[int, List[G2Element]] = {
            k: [BASIS[label] for label in graded_component(k)] for k in (-3, -2, -1)
        }
        self.components[0] = annihilator(phi)
        for k in (1, 2, 3):
            self.components[k] = _prolong_step(graded_component(k), self.components[k - 1])

    @property
    def dim(self) -> int:
        return sum(len(v) for v in self.components.values())

    @property
    def positive_dim(self) -> int:
        return sum(len(self.components[k]) for k in (1, 2, 3))

    @property
    def rigid(self) -> bool:
        return self.positive_dim == 0

    def dims(self) -> Dict[int, int]:
        return {k: len(v) for k, v in sorted(self.components.items())}


def _prolong_step(labels: Sequence[str], previous: Sequence[G2Element]) -> List[G2Element]:
    """{x in span(labels) : [x, g_-1] inside span(previous)}."""
    below = LinearCoordinates([p.to_vector() for p in previous])
    images = []
    for label in labels:
        defect: Dict[Any, Any] = {}
        for y in graded_component(-1):
            residual, _ = below.reduce(bracket(BASIS[label], BASIS[y]).to_vector())
            for key, c in residual.items():
                defect[(y, key)] = c
        images.append(defect)
    out = []
    for relation in LinearCoordinates(images).relations:
        total = G2Element()
        for index, c in relation.items():
            total = total + BASIS[labels[index]] * c
        out.append(total)
    return out


def tanaka_prolong(phi: BinaryQuartic) -> Prolongation:
    return Prolongation(phi)


def random_quartic(rng: random.Random, bound: int = 9) -> BinaryQuartic:
    """Nonzero quartic with small random rational coefficients."""
    while True:
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(5)]
        phi = BinaryQuartic(coeffs)
        if phi:
            return phi


def rigidity_sweep(count: int, seed: int = 0) -> List[BinaryQuartic]:
    """Random quartics whose prolongation has a positive part (expected empty)."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        phi = random_quartic(rng)
        prolongation = Prolongation(phi)
        if not prolongation.rigid or prolongation.dim != 5 + len(prolongation.components[0]):
            failures.append(phi)
    return failures

