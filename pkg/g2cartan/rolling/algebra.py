"""so(3) x so(3) with the rolling filtration for the radius ratio rho."""

from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Tuple

from ..algebra.linalg import LinearCoordinates, vec_combine
from ..algebra.scalar_tower import I, Scalar, as_scalar
from ..errors import G2CartanError
from ..models.lie import NamedVector, StructureTable, structure_from_basis

FRAME = ("v0", "v1", "v2", "v3", "v4", "v5")
DEGREES: Dict[str, int] = {"v0": 0, "v1": -1, "v2": -1, "v3": -2, "v4": -3, "v5": -3}


def so3_pair() -> StructureTable:
    """(i, j, k) on each factor with [i, j] = k, [j, k] = i, [k, i] = j."""
    table = {}
    for f in ("1", "2"):
        table[("i" + f, "j" + f)] = {"k" + f: 1}
        table[("j" + f, "k" + f)] = {"i" + f: 1}
        table[("k" + f, "i" + f)] = {"j" + f: 1}
    return StructureTable(("i1", "j1", "k1", "i2", "j2", "k2"), table)


def _pair(first: str, second: str, scale: Any) -> NamedVector:
    return {n: as_scalar(c) for n, c in ((first + "1", 1), (second + "2", scale)) if c}


class RollingAlgebra:
    """The adapted frame v0..v5 of so(3) x so(3) for a rational rho != 0, +-1."""

    def __init__(self, rho: Any) -> None:
        rho = Fraction(rho)
        if rho in (0, 1, -1):
            raise G2CartanError(f"rho = {rho} does not give a (2,3,5) filtration", witness=str(rho))
        self.rho = rho
        self.ambient = so3_pair()
        r = as_scalar(rho)
        self.frame: Dict[str, NamedVector] = {
            "v0": _pair("k", "k", 1),
            "v1": _pair("i", "i", -r),
            "v2": _pair("j", "j", -r),
            "v3": _pair("k", "k", r ** 2),
            "v4": _pair("j", "j", -(r ** 3)),
            "v5": _pair("i", "i", -(r ** 3)),
        }
        self.table = structure_from_basis(
            [self.frame[n] for n in FRAME], FRAME, self.ambient.bracket, lambda v: v
        )

    def bracket(self, x: Mapping[str, Any], y: Mapping[str, Any]) -> NamedVector:
        return self.ambient.bracket(x, y)

    def combine(self, *terms: Tuple[Any, str]) -> NamedVector:
        """Complex combination of frame vectors, in ambient coordinates."""
        return vec_combine((as_scalar(c), self.frame[v]) for c, v in terms)

    def derived_flag(self) -> List[int]:
        """Dimensions of f^-1, f^-2, f^-3 under f^(i-1) = f^i + [f^-1, f^i]."""
        first = self.filtrand(-1)
        span = LinearCoordinates(first)
        current = list(first)
        dims = [span.dim]
        for _ in range(2):
            for z in [self.bracket(x, y) for x in first for y in current]:
                if z and span.add(z):
                    current.append(z)
            dims.append(span.dim)
        return dims

    def filtrand(self, degree: int) -> List[NamedVector]:
        return [self.frame[n] for n in FRAME if DEGREES[n] >= degree]

    def __repr__(self) -> str:
        return f"RollingAlgebra(rho={self.rho})"


def swap_factors(v: Mapping[str, Any]) -> NamedVector:
    """(x, y) -> (y, x); carries the rho filtration to the 1/rho one."""
    return {n[0] + ("2" if n[1] == "1" else "1"): c for n, c in v.items()}


_FLIP = {"i1": 1, "j1": -1, "k1": -1, "i2": -1, "j2": 1, "k2": -1}


def flip_orientations(v: Mapping[str, Any]) -> NamedVector:
    """(i, j, k) -> (i, -j, -k) on the first factor and (-i, j, -k) on the second; rho -> -rho."""
    return {n: c * _FLIP[n] for n, c in v.items()}


def involution_failures(rho: Any) -> List[str]:
    """Both involutions are automorphisms carrying f^0 and f^-1 to those of 1/rho and -rho."""
    source = RollingAlgebra(rho)
    failures = []
    targets: List[Tuple[str, Callable[[Mapping[str, Any]], NamedVector], RollingAlgebra]] = [
        ("swap", swap_factors, RollingAlgebra(1 / Fraction(rho))),
        ("flip", flip_orientations, RollingAlgebra(-Fraction(rho))),
    ]
    names = source.ambient.names
    for label, f, target in targets:
        for a in names:
            for b in names:
                lhs = f(source.bracket({a: 1}, {b: 1}))
                rhs = source.bracket(f({a: 1}), f({b: 1}))
                if vec_combine([(1, lhs), (-1, rhs)]):
                    failures.append(f"{label} is not a homomorphism on ({a}, {b})")
                    break
        for degree in (0, -1):
            span = LinearCoordinates(target.filtrand(degree))
            if not all(span.contains(f(v)) for v in source.filtrand(degree)):
                failures.append(f"{label} does not carry f^{degree} to rho = {target.rho}")
    return failures


def ad_t_eigen_failures(rho: Any) -> List[str]:
    """T = i v0 acts by 0, 0, 1, -1, 1, -1 on v0, v3, v1 + i v2, v1 - i v2, v4 - i v5, v4 + i v5."""
    alg = RollingAlgebra(rho)
    t = alg.combine((I, "v0"))
    vectors: List[Tuple[str, NamedVector, Scalar]] = [
        ("v0", alg.combine((1, "v0")), as_scalar(0)),
        ("v3", alg.combine((1, "v3")), as_scalar(0)),
        ("v1+iv2", alg.combine((1, "v1"), (I, "v2")), as_scalar(1)),
        ("v1-iv2", alg.combine((1, "v1"), (-I, "v2")), as_scalar(-1)),
        ("v4-iv5", alg.combine((1, "v4"), (-I, "v5")), as_scalar(1)),
        ("v4+iv5", alg.combine((1, "v4"), (I, "v5")), as_scalar(-1)),
    ]
    failures = [
        label for label, w, value in vectors if vec_combine([(1, alg.bracket(t, w)), (-value, w)])
    ]
    if LinearCoordinates([w for _, w, _ in vectors]).dim != 6:
        failures.append("eigenvectors are dependent")
    return failures
