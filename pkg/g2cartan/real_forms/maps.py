"""Automorphisms and anti-involutions of g given by their action on basis vectors."""

from typing import Any, Dict, List, Optional, Tuple

from ..algebra.linalg import LinearCoordinates
from ..algebra.scalar_tower import ONE, I, Scalar, as_scalar
from ..core.g2 import BASIS, LABELS, WEIGHTS, G2Element, bracket, element
from ..core.parabolic import P_LABELS
from ..errors import UnknownLabel

ZETAS = ("1", "-1", "i", "-i")
# tau is an antilinear homomorphism only for zeta^2 = 1
TAU_ZETAS = ("1", "-1")


class BasisMap:
    """Linear or conjugate-linear map of g fixed by the images of the 14 basis vectors."""

    def __init__(self, label: str, images: Dict[str, G2Element], antilinear: bool = False) -> None:
        missing = set(LABELS) - set(images)
        if missing:
            raise ValueError(f"{label} leaves {sorted(missing)} without an image")
        self.label = label
        self.images = images
        self.antilinear = antilinear

    def __call__(self, x: G2Element) -> G2Element:
        total = G2Element()
        for label, c in x.items():
            coeff = c.conj() if self.antilinear else c
            total = total + self.images[label] * coeff
        return total

    def compose(self, other: "BasisMap", label: Optional[str] = None) -> "BasisMap":
        """self after other."""
        images = {name: self(other.images[name]) for name in LABELS}
        return BasisMap(label or f"{self.label}*{other.label}", images, self.antilinear != other.antilinear)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, BasisMap):
            return NotImplemented
        return self.antilinear == other.antilinear and all(
            self.images[n] == other.images[n] for n in LABELS
        )

    __hash__ = None  # type: ignore[assignment]

    def square_failures(self) -> List[str]:
        return [n for n in LABELS if self(self.images[n]) != BASIS[n]]

    def homomorphism_failures(self) -> List[Tuple[str, str]]:
        return [
            (a, b)
            for a in LABELS
            for b in LABELS
            if self(bracket(BASIS[a], BASIS[b])) != bracket(self.images[a], self.images[b])
        ]

    def parabolic_failures(self) -> List[str]:
        keep = set(P_LABELS)
        return [n for n in P_LABELS if not set(self.images[n].support) <= keep]

    def __repr__(self) -> str:
        return f"BasisMap({self.label!r}, antilinear={self.antilinear})"


def parse_zeta(text: str) -> Scalar:
    if text not in ZETAS:
        raise UnknownLabel(f"zeta must be one of {list(ZETAS)}, got {text!r}", witness=text)
    return {"1": ONE, "-1": -ONE, "i": I, "-i": -I}[text]


def _scaled(pairs: Dict[str, Tuple[Any, str]]) -> Dict[str, G2Element]:
    return {name: BASIS[target] * as_scalar(c) for name, (c, target) in pairs.items()}


def a_lambda(lam: Any) -> BasisMap:
    """A_lambda: a torus automorphism scaling each root vector by a power of lambda."""
    lam = as_scalar(lam)
    inv = lam.inverse()
    images = _scaled({
        "f32": (lam, "f32"), "f31": (lam * lam, "f31"), "f21": (lam, "f21"),
        "f11": (ONE, "f11"), "f10": (lam, "f10"), "f01": (inv, "f01"),
        "Z1": (ONE, "Z1"), "Z2": (ONE, "Z2"),
        "e01": (lam, "e01"), "e10": (inv, "e10"), "e11": (ONE, "e11"),
        "e21": (inv, "e21"), "e31": (inv * inv, "e31"), "e32": (inv, "e32"),
    })  # fmt: skip
    return BasisMap(f"A_{lam}", images)


def a_tilde() -> BasisMap:
    images = _scaled({
        "f32": (1, "f31"), "f31": (1, "f32"), "f21": (-1, "f21"),
        "f11": (1, "f10"), "f10": (1, "f11"), "f01": (1, "e01"),
        "Z1": (1, "Z1"), "e01": (1, "f01"),
        "e10": (1, "e11"), "e11": (1, "e10"), "e21": (-1, "e21"),
        "e31": (1, "e32"), "e32": (1, "e31"),
    })  # fmt: skip
    images["Z2"] = element((1, "Z1"), (-1, "Z2"))
    return BasisMap("A~", images)


def psi(zeta: str) -> BasisMap:
    z = parse_zeta(zeta)
    w = z.inverse()
    images = _scaled({
        "f32": (z ** 3, "f32"), "f31": (z ** 3, "f31"), "f21": (z ** 2, "f21"),
        "f11": (z, "f11"), "f10": (z, "f10"), "f01": (1, "f01"),
        "Z1": (1, "Z1"), "Z2": (1, "Z2"), "e01": (1, "e01"),
        "e10": (w, "e10"), "e11": (w, "e11"), "e21": (w ** 2, "e21"),
        "e31": (w ** 3, "e31"), "e32": (w ** 3, "e32"),
    })  # fmt: skip
    return BasisMap(f"psi_{zeta}", images, antilinear=True)


def psi_tilde(zeta: str) -> BasisMap:
    z = parse_zeta(zeta)
    w = z.inverse()
    images = _scaled({
        "f32": (z ** 3, "f31"), "f31": (z ** 3, "f32"), "f21": (-(z ** 2), "f21"),
        "f11": (z, "f10"), "f10": (z, "f11"), "f01": (1, "e01"),
        "Z1": (1, "Z1"), "e01": (1, "f01"),
        "e10": (w, "e11"), "e11": (w, "e10"), "e21": (-(w ** 2), "e21"),
        "e31": (w ** 3, "e32"), "e32": (w ** 3, "e31"),
    })  # fmt: skip
    images["Z2"] = element((1, "Z1"), (-1, "Z2"))
    return BasisMap(f"tilde_{zeta}", images, antilinear=True)


def tau(zeta: str) -> BasisMap:
    if zeta not in TAU_ZETAS:
        raise UnknownLabel(f"tau takes zeta in {list(TAU_ZETAS)}, got {zeta!r}", witness=f"tau_{zeta}")
    z = parse_zeta(zeta)
    images = _scaled({
        "f32": (z, "f32"), "f31": (1, "f31"), "f21": (z, "f21"),
        "f11": (1, "f11"), "f10": (z, "f10"), "f01": (z, "f01"),
        "Z1": (1, "Z1"), "Z2": (1, "Z2"), "e01": (z, "e01"),
        "e10": (z, "e10"), "e11": (1, "e11"), "e21": (z, "e21"),
        "e31": (1, "e31"), "e32": (z, "e32"),
    })  # fmt: skip
    return BasisMap(f"tau_{zeta}", images, antilinear=True)


KINDS = {"psi": psi, "tilde": psi_tilde, "tau": tau}
KIND_ZETAS = {"psi": ZETAS, "tilde": ZETAS, "tau": TAU_ZETAS}


def anti_involution(label: str) -> BasisMap:
    """Parse labels like psi_1, tilde_-i or tau_-1."""
    kind, _, zeta = label.partition("_")
    if kind not in KINDS:
        raise UnknownLabel(f"unknown anti-involution {label!r}; expected psi_, tilde_ or tau_", witness=label)
    return KINDS[kind](zeta)


def all_anti_involutions() -> List[BasisMap]:
    return [KINDS[kind](zeta) for kind in KINDS for zeta in KIND_ZETAS[kind]]


def torus_sign() -> BasisMap:
    """exp(i pi ad Z2): multiplies a basis vector of weight (s, t) by (-1)^t."""
    images = {n: BASIS[n] * (-1 if WEIGHTS[n][1] % 2 else 1) for n in LABELS}
    return BasisMap("S", images)


def inverse(a: BasisMap) -> BasisMap:
    """Inverse of a linear basis map, by solving on the images."""
    if a.antilinear:
        raise ValueError("inverse is only solved for linear maps")
    order = list(LABELS)
    coords = LinearCoordinates([a.images[n].to_vector() for n in order])
    images = {}
    for n in LABELS:
        combo = coords.coordinates({n: ONE})
        if combo is None:
            raise ValueError(f"{a.label} is not invertible")
        images[n] = sum((BASIS[order[k]] * c for k, c in combo.items()), G2Element())
    return BasisMap(f"{a.label}^-1", images, a.antilinear)
