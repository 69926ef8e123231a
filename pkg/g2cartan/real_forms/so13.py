"""so(1,3)-invariant models: the two isotropy cases and their D.6 parameter."""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..algebra.linalg import vec_combine
from ..algebra.scalar_tower import ONE, ZERO, I, Scalar, as_scalar, real_sign, sqrt_scalar
from ..errors import G2CartanError
from ..models.catalog import AlgebraicModel, build_model
from ..models.lie import NamedVector, StructureTable, table_mismatches
from ..types import IsotropyCase, ModelLabel, Report
from .fixed import fixed_point_algebra
from .signature import killing_signature, model_type

Brackets = Dict[Tuple[str, str], Dict[str, Any]]


def realified(names: Tuple[str, str, str], brackets: Brackets) -> StructureTable:
    """g_R for a complex g: basis u, Iu with [Iu, v] = I[u, v] and [Iu, Iv] = -[u, v]."""
    table: Brackets = {}
    for (u, v), image in brackets.items():
        table[(u, v)] = dict(image)
        table[("I" + u, v)] = {"I" + w: c for w, c in image.items()}
        table[(u, "I" + v)] = {"I" + w: c for w, c in image.items()}
        table[("I" + u, "I" + v)] = {w: -c for w, c in image.items()}
    return StructureTable(list(names) + ["I" + n for n in names], table)


def sl2c() -> StructureTable:
    return realified(("H", "X", "Y"), {("H", "X"): {"X": 2}, ("H", "Y"): {"Y": -2}, ("X", "Y"): {"H": 1}})


def so3c() -> StructureTable:
    return realified(("A", "B", "C"), {("A", "B"): {"C": 1}, ("B", "C"): {"A": 1}, ("C", "A"): {"B": 1}})


def parameter_squared(alpha: Any) -> Fraction:
    """a^2 = -9 (alpha^2 - 1)^2 / ((alpha^2 + 4)(4 alpha^2 + 1))."""
    q = Fraction(alpha) ** 2
    return -9 * (q - 1) ** 2 / ((q + 4) * (4 * q + 1))


def psi_label(case: IsotropyCase, alpha: Any) -> str:
    if case == IsotropyCase.H:
        return "psi_i"
    q = Fraction(alpha) ** 2
    return "tilde_i" if q <= 1 else "tilde_-i"


def _frame(case: IsotropyCase, alpha: Scalar) -> Dict[str, NamedVector]:
    if case == IsotropyCase.H:
        raw = {
            "v0": {"H": Fraction(1, 2)},
            "v1": {"X": 1, "IX": alpha},
            "v2": {"Y": 1, "IY": alpha},
            "v3": {"IH": 1},
            "v4": {"X": alpha, "IX": -1},
            "v5": {"Y": alpha, "IY": -1},
        }
    else:
        raw = {
            "v0": {"C": -I},
            "v1": {"A": 1, "IA": alpha},
            "v2": {"B": 1, "IB": alpha},
            "v3": {"IC": 1},
            "v4": {"B": -alpha, "IB": 1},
            "v5": {"A": alpha, "IA": -1},
        }
    return {k: {n: as_scalar(c) for n, c in v.items()} for k, v in raw.items()}


def coefficients(case: IsotropyCase, alpha: Scalar, a: Scalar, s1: Scalar = ONE) -> Dict[str, Scalar]:
    """Solved (s2, s3, s4, s5, t1, t2, t3) of the ansatz."""
    q = alpha * alpha
    names = ("s2", "s3", "s4", "s5", "t1", "t2", "t3")
    if q == ONE:
        if case == IsotropyCase.H:
            values = (3 * I / (2 * s1), -3 * I * alpha / 2, -I * alpha * s1, 3 * alpha / (2 * s1), ZERO, ZERO, ZERO)
        else:
            values = (3 * I / (2 * s1), 3 * alpha, -alpha * s1, 3 * I * alpha / (2 * s1), ZERO, ZERO, ZERO)
        return dict(zip(names, values))
    d = q - 1
    e = (q + 4) * (4 * q + 1)
    if case == IsotropyCase.H:
        values = (
            -5 * a / (2 * s1 * d),
            5 * a * alpha / (2 * d),
            5 * a * s1 * alpha / (3 * d),
            75 * alpha / (2 * s1 * e),
            -a,
            -a * s1 / 3,
            -15 * d / (2 * s1 * e),
        )
    else:
        values = (
            5 * a / (2 * s1 * d),
            -5 * I * a * alpha / d,
            5 * I * a * s1 * alpha / (3 * d),
            75 * I * alpha / (2 * s1 * e),
            -a,
            -a * s1 / 3,
            15 * d / (2 * s1 * e),
        )
    return dict(zip(names, values))


def ansatz(case: IsotropyCase, alpha: Any, a: Scalar, s1: Scalar = ONE) -> Dict[str, NamedVector]:
    """T, X1..X5 in the complexified so(1,3)."""
    alpha = as_scalar(alpha)
    v = _frame(case, alpha)
    k = coefficients(case, alpha, a, s1)

    def combo(*terms: Tuple[Any, NamedVector]) -> NamedVector:
        return vec_combine((as_scalar(c), u) for c, u in terms)

    if case == IsotropyCase.H:
        x1, x2 = v["v1"], v["v2"]
        y1, y2 = v["v4"], v["v5"]
    else:
        x1 = combo((1, v["v1"]), (-I, v["v2"]))
        x2 = combo((1, v["v1"]), (I, v["v2"]))
        y1 = combo((1, v["v4"]), (-I, v["v5"]))
        y2 = combo((1, v["v4"]), (I, v["v5"]))
    return {
        "T": v["v0"],
        "X1": combo((s1, x1)),
        "X2": combo((k["s2"], x2)),
        "X3": combo((k["s3"], v["v3"]), (k["t1"], v["v0"])),
        "X4": combo((k["s4"], y1), (k["t2"], x1)),
        "X5": combo((k["s5"], y2), (k["t3"], x2)),
    }


class So13Model:
    """A solved so(1,3) ansatz matching the D.6_a table."""

    def __init__(self, case: IsotropyCase, alpha: Fraction, a: Scalar, images: Dict[str, NamedVector]) -> None:
        self.case = case
        self.alpha = alpha
        self.a = a
        self.images = images
        self.algebra = sl2c() if case == IsotropyCase.H else so3c()
        self.model: AlgebraicModel = build_model(ModelLabel.D6, {"a": a})

    @property
    def a_squared(self) -> Fraction:
        return (self.a * self.a).to_fraction()

    @property
    def psi(self) -> str:
        return psi_label(self.case, self.alpha)

    def mismatches(self) -> List[Tuple[str, str]]:
        expected: Mapping[Tuple[str, str], Dict[str, Any]] = {
            (u, w): self.model.table.bracket_names(u, w) for u in self.model.names for w in self.model.names
        }
        return table_mismatches(self.algebra, self.images, expected, self.model.names)


def so13_models(case: Any, alpha: Any) -> So13Model:
    """Solve the ansatz with s1 = 1; a is the square root of a^2 that makes every bracket match."""
    case = IsotropyCase(case)
    alpha = Fraction(alpha)
    if alpha == 0:
        raise G2CartanError("alpha must be nonzero", witness=str(alpha))
    root = sqrt_scalar(parameter_squared(alpha))
    candidates = [So13Model(case, alpha, sign * root, ansatz(case, alpha, sign * root)) for sign in (1, -1)]
    return min(candidates, key=lambda m: len(m.mismatches()))


def _normalized(a: Scalar) -> Scalar:
    """The representative of +-a in i[0, oo)."""
    return a if not a or real_sign(a / I) >= 0 else -a


def verify_so13(case: Any, alpha: Any, report: Optional[Report] = None) -> Report:
    report = report or Report(command="realform so13")
    solved = so13_models(case, alpha)
    failures = solved.mismatches()
    report.add(
        f"so13.{solved.case.value}.brackets",
        not failures,
        witness=str(failures[0]) if failures else None,
        count=15,
    )
    signature = killing_signature(solved.algebra.killing_matrix())
    report.add("so13.signature", model_type(signature) == "so(1,3)", witness=str(list(signature)))
    report.add(
        "so13.parameter_range",
        Fraction(-9, 4) < solved.a_squared <= 0,
        witness=str(solved.a_squared),
    )
    real = fixed_point_algebra(solved.psi, build_model(ModelLabel.D6, {"a": _normalized(solved.a)}))
    report.add(f"so13.{solved.psi}.real_form", real.type == "so(1,3)", witness=str(list(real.signature)))
    report.data.update(
        case=solved.case.value,
        alpha=str(solved.alpha),
        a=solved.a.to_literal(),
        a2=str(solved.a_squared),
        psi=solved.psi,
    )
    return report
