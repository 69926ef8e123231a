"""Chains on p+ and cochains on g- with values in g, and their differentials.

Both are stored as maps from strictly increasing label tuples to G2Element
values.  Chain slots are ordered e10, e11, e21, e31, e32 and cochain slots
f10, f11, f21, f31, f32, so the Killing identification between them
introduces no signs.
"""

from itertools import combinations
from typing import (
    Any,
    Callable,
    ClassVar,
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Type,
    TypeVar,
    Union,
)

from pydantic import BaseModel

from ..algebra.linalg import LinearCoordinates, Vector
from ..algebra.scalar_tower import ONE, as_scalar
from ..core.g2 import BASIS, LABELS, WEIGHTS, G2Element, bracket
from ..core.parabolic import COSET, DEGREE, P_LABELS, P_PLUS, PAIRING

T = TypeVar("T", bound="_Alternating")
Key = Tuple[str, ...]


def sort_with_sign(labels: Sequence[str], order: Mapping[str, int]) -> Tuple[int, Key]:
    """Sort labels, returning the permutation sign; sign 0 on a repeated label."""
    items = list(labels)
    if len(set(items)) < len(items):
        return 0, ()
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if order[items[j]] > order[items[j + 1]]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


class _Alternating:
    """Alternating g-valued tensor on an ordered list of slot labels."""

    SLOTS: ClassVar[Tuple[str, ...]] = ()
    STAR: ClassVar[str] = ""

    __slots__ = ("_degree", "_data")

    def __init__(self, degree: int, data: Optional[Mapping[Key, G2Element]] = None) -> None:
        self._degree = degree
        clean: Dict[Key, G2Element] = {}
        for key, value in (data or {}).items():
            if len(key) != degree:
                raise ValueError(f"slot tuple {key} does not have length {degree}")
            sign, normal = sort_with_sign(key, self._order())
            if sign == 0:
                continue
            merged = clean.get(normal, G2Element()) + (value if sign > 0 else -value)
            if merged:
                clean[normal] = merged
            else:
                clean.pop(normal, None)
        self._data = clean

    @classmethod
    def _order(cls) -> Dict[str, int]:
        return {label: k for k, label in enumerate(cls.SLOTS)}

    @classmethod
    def term(
        cls: Type[T], coeff: Any, slots: Sequence[str], value: Union[str, G2Element]
    ) -> T:
        """coeff * (slot wedge) (x) value."""
        v = BASIS[value] if isinstance(value, str) else value
        return cls(len(slots), {tuple(slots): v * coeff})

    @classmethod
    def zero(cls: Type[T], degree: int) -> T:
        return cls(degree)

    @classmethod
    def basis(cls: Type[T], degree: int) -> List[T]:
        return [
            cls.term(ONE, slots, label)
            for slots in combinations(cls.SLOTS, degree)
            for label in LABELS
        ]

    @classmethod
    def from_vector(cls: Type[T], degree: int, vector: Vector) -> T:
        data: Dict[Key, Dict[str, Any]] = {}
        for (slots, label), c in vector.items():
            data.setdefault(slots, {})[label] = c
        return cls(degree, {slots: G2Element(coeffs) for slots, coeffs in data.items()})

    @property
    def degree(self) -> int:
        return self._degree

    def items(self) -> Iterator[Tuple[Key, G2Element]]:
        order = self._order()
        for key in sorted(self._data, key=lambda k: [order[s] for s in k]):
            yield key, self._data[key]

    def value(self, *slots: str) -> G2Element:
        """Evaluate on (or read the coefficient of) the given slot labels, with sign."""
        sign, key = sort_with_sign(slots, self._order())
        if sign == 0:
            return G2Element()
        v = self._data.get(key, G2Element())
        return v if sign > 0 else -v

    def to_vector(self) -> Vector:
        out: Vector = {}
        for key, v in self._data.items():
            for label, c in v.items():
                out[(key, label)] = c
        return out

    def map_values(self: T, fn: Callable[[G2Element], G2Element]) -> T:
        return type(self)(self._degree, {key: fn(v) for key, v in self._data.items()})

    def evaluate(self: T, value: Any) -> T:
        return self.map_values(lambda v: v.evaluate(value))

    def conj(self: T) -> T:
        return self.map_values(lambda v: v.conj())

    def homogeneities(self) -> List[int]:
        """Sorted Z1-eigenvalues occurring in the tensor."""
        found = set()
        for key, v in self._data.items():
            for label in v.support:
                found.add(self._slot_weight(key, DEGREE.__getitem__) + DEGREE[label])
        return sorted(found)

    def weights(self) -> List[Tuple[int, int]]:
        found = set()
        for key, v in self._data.items():
            for label in v.support:
                w = WEIGHTS[label]
                s0 = self._slot_weight(key, lambda s: WEIGHTS[s][0])
                s1 = self._slot_weight(key, lambda s: WEIGHTS[s][1])
                found.add((s0 + w[0], s1 + w[1]))
        return sorted(found)

    def _slot_weight(self, key: Key, weight: Callable[[str], int]) -> int:
        raise NotImplementedError

    # -- linear structure ---------------------------------------------

    def _check(self, other: Any) -> bool:
        return isinstance(other, type(self)) and other._degree == self._degree

    def __add__(self: T, other: Any) -> T:
        if not self._check(other):
            return NotImplemented
        data = dict(self._data)
        for key, v in other._data.items():
            data[key] = data.get(key, G2Element()) + v
        return type(self)(self._degree, data)

    def __neg__(self: T) -> T:
        return self.map_values(lambda v: -v)

    def __sub__(self: T, other: Any) -> T:
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self: T, scalar: Any) -> T:
        if isinstance(scalar, (_Alternating, G2Element)):
            return NotImplemented
        return self.map_values(lambda v: v * scalar)

    __rmul__ = __mul__

    def __truediv__(self: T, scalar: Any) -> T:
        inv = as_scalar(scalar).inverse()
        return self * inv

    def __bool__(self) -> bool:
        return bool(self._data)

    def __eq__(self, other: Any) -> bool:
        if not self._check(other):
            return NotImplemented
        return not (self - other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._data:
            return "0"
        parts = []
        for key, v in self.items():
            wedge = "∧".join(s + self.STAR for s in key) if key else "1"
            parts.append(f"{wedge}⊗({v})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class Chain(_Alternating):
    """Element of the chain space of wedge^k p+ (x) g."""

    SLOTS = P_PLUS

    def _slot_weight(self, key: Key, weight: Callable[[str], int]) -> int:
        return sum(weight(s) for s in key)


class Cochain(_Alternating):
    """Element of the cochain space of wedge^k (g-)^* (x) g, evaluated on coset labels."""

    SLOTS = COSET
    STAR = "*"

    def _slot_weight(self, key: Key, weight: Callable[[str], int]) -> int:
        return -sum(weight(s) for s in key)


Chain2 = Chain
Cochain2 = Cochain


# -- Killing identification ---------------------------------------------


def _pairing(slots: Key) -> int:
    c = 1
    for s in slots:
        c *= PAIRING[s[1:]]
    return c


def to_cochain(chain: Chain) -> Cochain:
    """Phi: e_st -> c_st f_st^* on every slot."""
    data = {}
    for key, v in chain.items():
        data[tuple("f" + s[1:] for s in key)] = v * _pairing(key)
    return Cochain(chain.degree, data)


def to_chain(cochain: Cochain) -> Chain:
    data = {}
    for key, v in cochain.items():
        data[tuple("e" + s[1:] for s in key)] = v / _pairing(key)
    return Chain(cochain.degree, data)


# -- differentials --------------------------------------------------------


def _insert(label: str, rest: Key) -> Tuple[int, Key]:
    """label wedge rest, normalized."""
    return sort_with_sign((label,) + rest, Chain._order())


def partial_star(chain: Chain) -> Chain:
    """Homology differential on wedge^k p+ (x) g.

    d*(X1..Xk (x) v) = sum_i (-1)^i (..^Xi..) (x) [Xi, v]
                     + sum_{i<j} (-1)^(i+j) [Xi, Xj] (..^Xi..^Xj..) (x) v
    with 1-indexed slots.
    """
    k = chain.degree
    if k == 0:
        return Chain(0)
    data: Dict[Key, G2Element] = {}

    def accumulate(key: Key, value: G2Element) -> None:
        data[key] = data.get(key, G2Element()) + value

    for key, v in chain.items():
        for i in range(k):
            rest = key[:i] + key[i + 1:]
            sign = -1 if (i + 1) % 2 else 1
            accumulate(rest, bracket(BASIS[key[i]], v) * sign)
        for i in range(k):
            for j in range(i + 1, k):
                sign = 1 if (i + j + 2) % 2 == 0 else -1
                rest = tuple(s for n, s in enumerate(key) if n not in (i, j))
                for label, c in bracket(BASIS[key[i]], BASIS[key[j]]).items():
                    s2, merged = _insert(label, rest)
                    if s2:
                        accumulate(merged, v * (c * sign * s2))
    return Chain(k - 1, data)


def partial(cochain: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential on C^k(g-, g)."""
    k = cochain.degree
    data: Dict[Key, G2Element] = {}
    for args in combinations(COSET, k + 1):
        total = G2Element()
        for i in range(k + 1):
            rest = args[:i] + args[i + 1:]
            term = bracket(BASIS[args[i]], cochain.value(*rest))
            total = total + (term if i % 2 == 0 else -term)
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                rest = tuple(s for n, s in enumerate(args) if n not in (i, j))
                inner = bracket(BASIS[args[i]], BASIS[args[j]])
                for label, c in inner.items():
                    term = cochain.value(label, *rest) * c
                    total = total + (term if (i + j) % 2 == 0 else -term)
        if total:
            data[args] = total
    return Cochain(k + 1, data)


def partial_star_cochain(cochain: Cochain) -> Cochain:
    """d* transported to cochains through the Killing identification."""
    return to_cochain(partial_star(to_chain(cochain)))


def laplacian(cochain: Cochain) -> Cochain:
    """Box = d d* + d* d."""
    up = partial_star_cochain(partial(cochain))
    if cochain.degree == 0:
        return up
    return partial(partial_star_cochain(cochain)) + up


# -- p-actions -------------------------------------------------------------


def act_chain(z: G2Element, chain: Chain) -> Chain:
    """Tensor product action of z in p: ad on every p+ slot and on the value."""
    data: Dict[Key, G2Element] = {}
    for key, v in chain.items():
        data[key] = data.get(key, G2Element()) + bracket(z, v)
        for i, s in enumerate(key):
            for label, c in bracket(z, BASIS[s]).items():
                new_key = key[:i] + (label,) + key[i + 1:]
                sign, normal = sort_with_sign(new_key, Chain._order())
                if sign:
                    data[normal] = data.get(normal, G2Element()) + v * (c * sign)
    return Chain(chain.degree, data)


def act_cochain(z: G2Element, cochain: Cochain) -> Cochain:
    """(z.phi)(a, ..) = [z, phi(a, ..)] - sum phi(.., pi[z, a], ..), pi the coset projection."""
    coset = set(COSET)
    data: Dict[Key, G2Element] = {}
    for args in combinations(COSET, cochain.degree):
        total = bracket(z, cochain.value(*args))
        for i, s in enumerate(args):
            for label, c in bracket(z, BASIS[s]).items():
                if label not in coset:
                    continue
                replaced = args[:i] + (label,) + args[i + 1:]
                total = total - cochain.value(*replaced) * c
        if total:
            data[args] = total
    return Cochain(cochain.degree, data)


# -- Hodge decomposition ----------------------------------------------------


def _span(tensors: Sequence[_Alternating]) -> LinearCoordinates:
    return LinearCoordinates([t.to_vector() for t in tensors])


def kernel(
    basis: Sequence[Cochain], operator: Callable[[Cochain], _Alternating]
) -> List[Cochain]:
    """Kernel of a linear operator, spanned by combinations of the given basis."""
    images = [operator(b) for b in basis]
    coords = LinearCoordinates([img.to_vector() for img in images])
    degree = basis[0].degree
    out = []
    for relation in coords.relations:
        total = Cochain(degree)
        for index, c in relation.items():
            total = total + basis[index] * c
        out.append(total)
    return out


def image(basis: Sequence[_Alternating], operator: Callable[[Any], _Alternating]) -> List[Any]:
    images = [operator(b) for b in basis]
    coords = LinearCoordinates([img.to_vector() for img in images])
    return [images[i] for i in coords.independent]


class HodgeDecomposition(BaseModel):
    """Dimensions of the pieces of C^k = im(d) + ker(Box) + im(d*)."""

    degree: int
    total: int
    image_partial: int
    harmonic: int
    image_partial_star: int
    direct: bool


class HodgeSpaces:
    """Spanning cochains for the three Hodge summands of C^k."""

    def __init__(self, degree: int) -> None:
        self.degree = degree
        self.basis = Cochain.basis(degree)
        self.image_partial: List[Cochain] = (
            image(Cochain.basis(degree - 1), partial) if degree > 0 else []
        )
        self.harmonic: List[Cochain] = kernel(self.basis, laplacian)
        self.image_partial_star: List[Cochain] = image(
            Cochain.basis(degree + 1), partial_star_cochain
        )

    def summary(self) -> HodgeDecomposition:
        pieces = self.image_partial + self.harmonic + self.image_partial_star
        combined = _span(pieces).dim if pieces else 0
        return HodgeDecomposition(
            degree=self.degree,
            total=len(self.basis),
            image_partial=len(self.image_partial),
            harmonic=len(self.harmonic),
            image_partial_star=len(self.image_partial_star),
            direct=combined == len(pieces),
        )

    def project_harmonic(self, cochain: Cochain) -> Cochain:
        """Component of a cochain along ker(Box) in the Hodge decomposition."""
        pieces = self.harmonic + self.image_partial + self.image_partial_star
        coords = _span(pieces).coordinates(cochain.to_vector())
        if coords is None:
            raise ValueError("cochain is not in the span of the Hodge summands")
        total = Cochain(self.degree)
        for index, c in coords.items():
            if index < len(self.harmonic):
                total = total + self.harmonic[index] * c
        return total


def hodge_decompose(degree: int = 2) -> HodgeSpaces:
    return HodgeSpaces(degree)


def cohomology_dims(degree: int) -> Dict[str, int]:
    """dim ker d, dim im d from below and dim H^k = ker/im on C^k."""
    basis = Cochain.basis(degree)
    ker = len(kernel(basis, partial))
    im = len(image(Cochain.basis(degree - 1), partial)) if degree > 0 else 0
    return {"kernel": ker, "image": im, "cohomology": ker - im}


def zero_cohomology() -> List[str]:
    """Labels v with [x, v] = 0 for all x in g-."""
    return [
        label
        for label in LABELS
        if not any(bracket(BASIS[x], BASIS[label]) for x in COSET)
    ]


def first_cohomology_homogeneities() -> List[int]:
    """Z1-eigenvalues on harmonic 1-cochains."""
    harmonic = kernel(Cochain.basis(1), laplacian)
    found = set()
    for h in harmonic:
        found.update(h.homogeneities())
    return sorted(found)


def lowest_weight_vector() -> Chain:
    """phi0 = e10 ∧ e31 ⊗ f01."""
    return Chain.term(ONE, ("e10", "e31"), "f01")


def p_basis() -> List[Tuple[str, G2Element]]:
    return [(label, BASIS[label]) for label in P_LABELS]


__all__ = [
    "Chain",
    "Chain2",
    "Cochain",
    "Cochain2",
    "HodgeDecomposition",
    "HodgeSpaces",
    "act_chain",
    "act_cochain",
    "cohomology_dims",
    "first_cohomology_homogeneities",
    "hodge_decompose",
    "laplacian",
    "lowest_weight_vector",
    "partial",
    "partial_star",
    "partial_star_cochain",
    "to_chain",
    "to_cochain",
    "zero_cohomology",
]
