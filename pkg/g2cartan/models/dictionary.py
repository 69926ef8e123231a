"""Dictionaries from abstract Lie algebras to the catalog models.

Each row names an abstract algebra by its brackets, a frame v0..v5 in it and
T (or N), X1..X5 as combinations of that frame.  A row holds when the images
satisfy the bracket table of the catalog model they are claimed to realize.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from ..algebra.linalg import vec_combine
from ..algebra.scalar_tower import I, Scalar, as_scalar, sqrt_scalar
from ..errors import UnknownLabel
from ..types import ModelLabel, Report
from .catalog import AlgebraicModel, build_model
from .lie import NamedVector, StructureTable, table_mismatches

ROOT2 = Scalar.root(2)


def sl2_brackets(h: str, x: str, y: str) -> Dict[Tuple[str, str], Dict[str, Any]]:
    return {(h, x): {x: 2}, (h, y): {y: -2}, (x, y): {h: 1}}


def sl2_sl2() -> StructureTable:
    return StructureTable(
        ("H", "X", "Y", "H'", "X'", "Y'"),
        {**sl2_brackets("H", "X", "Y"), **sl2_brackets("H'", "X'", "Y'")},
    )


def sl2_e2() -> StructureTable:
    return StructureTable(
        ("H", "X", "Y", "Z", "V1", "V2"),
        {**sl2_brackets("H", "X", "Y"), ("Z", "V1"): {"V1": 1}, ("Z", "V2"): {"V2": -1}},
    )


def euclidean3() -> StructureTable:
    return StructureTable(
        ("R1", "R2", "R3", "V1", "V2", "V3"),
        {
            ("R1", "R2"): {"R3": 1},
            ("R2", "R3"): {"R1": 1},
            ("R3", "R1"): {"R2": 1},
            ("R1", "V2"): {"V3": 1},
            ("R1", "V3"): {"V2": -1},
            ("R2", "V3"): {"V1": 1},
            ("R2", "V1"): {"V3": -1},
            ("R3", "V1"): {"V2": 1},
            ("R3", "V2"): {"V1": -1},
        },
    )


def sl2_heis3() -> StructureTable:
    return StructureTable(
        ("H", "X", "Y", "S", "T", "U"),
        {
            **sl2_brackets("H", "X", "Y"),
            ("H", "S"): {"S": 1},
            ("H", "T"): {"T": -1},
            ("X", "T"): {"S": 1},
            ("Y", "S"): {"T": 1},
            ("S", "T"): {"U": 1},
        },
    )


def _combo(frame: Mapping[str, NamedVector], *terms: Tuple[Any, str]) -> NamedVector:
    return vec_combine((as_scalar(c) if not isinstance(c, Scalar) else c, frame[v]) for c, v in terms)


class DictionaryRow:
    """An abstract algebra, a frame in it and the images of the model basis."""

    def __init__(
        self,
        row: str,
        algebra: StructureTable,
        frame: Dict[str, NamedVector],
        images: Dict[str, NamedVector],
        model: AlgebraicModel,
    ) -> None:
        self.row = row
        self.algebra = algebra
        self.frame = frame
        self.images = images
        self.model = model

    def mismatches(self) -> List[Tuple[str, str]]:
        expected = {}
        for k, u in enumerate(self.model.names):
            for v in self.model.names[k + 1:]:
                expected[(u, v)] = self.model.table.bracket_names(u, v)
        return table_mismatches(self.algebra, self.images, expected, self.model.names)


def _generic_frame(lam: Any) -> Dict[str, NamedVector]:
    return {
        "v0": {"H": 1, "H'": 1},
        "v1": {"X": 1, "X'": -lam},
        "v2": {"Y": 1, "Y'": -1},
        "v3": {"H": 1, "H'": lam},
        "v4": {"X": 1, "X'": -lam * lam},
        "v5": {"Y": 1, "Y'": -lam},
    }


def generic_parameter_squared(lam: Any) -> Any:
    """a^2 = 4 (lam + 1)^2 / ((lam - 9)(lam - 1/9))."""
    lam = as_scalar(lam)
    return 4 * (lam + 1) ** 2 / ((lam - 9) * (lam - as_scalar(Fraction(1, 9))))


def _d6_generic(lam: Any, a: Scalar) -> DictionaryRow:
    lam = as_scalar(lam)
    frame = _generic_frame(lam)
    k = 5 * a / (lam + 1)
    half, third, sixth = (as_scalar(Fraction(1, n)) for n in (2, 3, 6))
    images = {
        "T": _combo(frame, (half, "v0")),
        "X1": _combo(frame, (1, "v1")),
        "X2": _combo(frame, (k, "v2")),
        "X3": _combo(frame, (-k * half, "v3"), (3 * a / 4, "v0")),
        "X4": _combo(frame, (k * third, "v4"), (-7 * a * sixth, "v1")),
        "X5": _combo(frame, (k * k * third, "v5"), (-7 * a * k * sixth, "v2")),
    }
    return DictionaryRow("D.6-generic", sl2_sl2(), frame, images, build_model(ModelLabel.D6, {"a": a}))


def _d6_lambda_minus_one() -> DictionaryRow:
    frame = _generic_frame(as_scalar(-1))
    images = {
        "T": _combo(frame, (Fraction(1, 2), "v0")),
        "X1": _combo(frame, (1, "v1")),
        "X2": _combo(frame, (3, "v2")),
        "X3": _combo(frame, (Fraction(-3, 2), "v3")),
        "X4": _combo(frame, (1, "v4")),
        "X5": _combo(frame, (3, "v5")),
    }
    return DictionaryRow("D.6-lambda=-1", sl2_sl2(), frame, images, build_model(ModelLabel.D6, {"a": 0}))


def _d6_a2_equals_4() -> DictionaryRow:
    frame = {
        "v0": {"H": Fraction(1, 2), "Z": 1},
        "v1": {"X": 1, "V1": 1},
        "v2": {"Y": 1, "V2": 1},
        "v3": {"H": 1},
        "v4": {"X": 1},
        "v5": {"Y": 1},
    }
    frame = {k: {n: as_scalar(c) for n, c in v.items()} for k, v in frame.items()}
    images = {
        "T": _combo(frame, (1, "v0")),
        "X1": _combo(frame, (1, "v1")),
        "X2": _combo(frame, (10, "v2")),
        "X3": _combo(frame, (-5, "v3"), (3, "v0")),
        "X4": _combo(frame, (Fraction(10, 3), "v4"), (Fraction(-7, 3), "v1")),
        "X5": _combo(frame, (Fraction(100, 3), "v5"), (Fraction(-70, 3), "v2")),
    }
    return DictionaryRow("D.6-a2=4", sl2_e2(), frame, images, build_model(ModelLabel.D6, {"a": 2}))


def _e3() -> DictionaryRow:
    frame = {
        "v0": {"R1": 1},
        "v1": {"R2": 1, "V2": 1},
        "v2": {"R3": 1, "V3": 1},
        "v3": {"V1": 1},
        "v4": {"V2": 1},
        "v5": {"V3": 1},
    }
    frame = {k: {n: as_scalar(c) for n, c in v.items()} for k, v in frame.items()}
    q = as_scalar
    images = {
        "T": _combo(frame, (I, "v0")),
        "X1": _combo(frame, (q(Fraction(3, 2)), "v1"), (q(Fraction(3, 2)) * I, "v2")),
        "X2": _combo(frame, (q(Fraction(5, 2)) * I, "v1"), (q(Fraction(5, 2)), "v2")),
        "X3": _combo(frame, (Fraction(-15, 2), "v3"), (Fraction(-3, 2), "v0")),
        "X4": _combo(
            frame,
            (q(Fraction(-15, 4)) * I, "v4"),
            (q(Fraction(15, 4)), "v5"),
            (q(Fraction(3, 4)) * I, "v1"),
            (q(Fraction(-3, 4)), "v2"),
        ),
        "X5": _combo(
            frame,
            (Fraction(25, 4), "v4"),
            (q(Fraction(-25, 4)) * I, "v5"),
            (Fraction(-5, 4), "v1"),
            (q(Fraction(5, 4)) * I, "v2"),
        ),
    }
    a = q(Fraction(-3, 2)) * I
    return DictionaryRow("e3", euclidean3(), frame, images, build_model(ModelLabel.D6, {"a": a}))


def _n6() -> DictionaryRow:
    frame = {
        "v0": {"X": 1},
        "v1": {"Y": 1, "S": -1, "U": -1},
        "v2": {"H": 1},
        "v3": {"S": 3, "U": 2},
        "v4": {"T": 1},
        "v5": {"U": 1},
    }
    frame = {k: {n: as_scalar(c) for n, c in v.items()} for k, v in frame.items()}
    r = I * ROOT2
    q = as_scalar
    images = {
        "N": _combo(frame, (r / 4, "v0")),
        "X1": _combo(frame, (-2 * r, "v1"), (3 * r, "v0")),
        "X2": _combo(frame, (1, "v2")),
        "X3": _combo(frame, (r, "v3"), (r * q(Fraction(15, 4)), "v0")),
        "X4": _combo(frame, (4, "v4"), (-1, "v2")),
        "X5": _combo(frame, (r * q(Fraction(2, 3)), "v5"), (-r / 3, "v3"), (-r / 4, "v0")),
    }
    return DictionaryRow("N.6", sl2_heis3(), frame, images, build_model(ModelLabel.N6))


ROWS: Dict[str, Callable[..., DictionaryRow]] = {
    "D.6-generic": _d6_generic,
    "D.6-lambda=-1": _d6_lambda_minus_one,
    "D.6-a2=4": _d6_a2_equals_4,
    "e3": _e3,
    "N.6": _n6,
}


def build_row(row: str, lam: Optional[Any] = None, sign: int = 1) -> DictionaryRow:
    if row not in ROWS:
        raise UnknownLabel(f"unknown dictionary row {row!r}; expected one of {sorted(ROWS)}", witness=row)
    if row != "D.6-generic":
        return ROWS[row]()
    lam = as_scalar(2 if lam is None else lam)
    a = 2 * (lam + 1) / sqrt_scalar(((lam - 9) * (lam - as_scalar(Fraction(1, 9)))).to_fraction())
    return _d6_generic(lam, a * sign)


def verify_dictionary(row: str, lam: Optional[Any] = None, report: Optional[Report] = None) -> Report:
    """Check a dictionary row; the generic row tries both square roots of a^2."""
    report = report or Report(command="model dictionary")
    candidates = [build_row(row, lam, s) for s in ((1, -1) if row == "D.6-generic" else (1,))]
    best = min(candidates, key=lambda c: len(c.mismatches()))
    failures = best.mismatches()
    report.add(
        f"dictionary.{row}",
        not failures,
        witness=str(failures[0]) if failures else None,
        count=len(best.model.names) * (len(best.model.names) - 1) // 2,
    )
    jacobi = best.algebra.jacobi_failures()
    report.add(f"dictionary.{row}.jacobi", not jacobi, witness=str(jacobi[0]) if jacobi else None)
    report.data.update(row=row, model=best.model.label.value, params={k: str(v) for k, v in best.model.params.items()})
    if row == "D.6-generic":
        a = best.model.params["a"]
        report.add(
            "dictionary.parameter_relation",
            a * a == generic_parameter_squared(lam if lam is not None else 2),
            witness=str(a * a),
        )
    return report
