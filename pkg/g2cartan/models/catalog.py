"""Catalog of multiply-transitive algebraic models (f; g, p).

Every model is stored as a filtered basis of f inside g, the curvature
cochain kappa on g/p assembled from the named kappa_i cochains, and the
bracket table of [.,.]_f = [.,.] - kappa(.,.) on the model basis.
"""

from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.linalg import LinearCoordinates
from ..algebra.param_poly import ParamPoly
from ..algebra.scalar_tower import ZERO, Scalar, as_scalar
from ..core.g2 import BASIS, LABELS, STRUCTURE_CONSTANTS, G2Element, bracket, coroot, element
from ..core.parabolic import COSET, DEGREE, project
from ..errors import UnknownLabel
from ..homology.complexes import Cochain
from ..types import ModelLabel
from .lie import StructureTable

H01 = coroot("01")

Param = Union[Scalar, ParamPoly]
Table = Dict[Tuple[str, str], Dict[str, Any]]

X_NAMES: Tuple[str, ...] = ("X1", "X2", "X3", "X4", "X5")
X_DEGREES: Dict[str, int] = {"X1": -1, "X2": -1, "X3": -2, "X4": -3, "X5": -3}

PARAMETERS: Dict[ModelLabel, Tuple[str, ...]] = {
    ModelLabel.N7: ("c",),
    ModelLabel.N6: (),
    ModelLabel.D6: ("a",),
    ModelLabel.B0: ("a",),
    ModelLabel.FLAT: (),
}

# Constant relations to Cartan's coframing, recorded but not verified.
METADATA: Dict[ModelLabel, Dict[str, str]] = {
    ModelLabel.N7: {"cartan_a": "6^(-1/4)", "cartan_I_squared": "(3/2)*c^2"},
}


def _wedge(a: str, b: str, value: Union[str, G2Element], coeff: Any = 1) -> Cochain:
    return Cochain.term(coeff, ("f" + a, "f" + b), value)


def _sum(terms: Sequence[Cochain]) -> Cochain:
    total = Cochain(2)
    for t in terms:
        total = total + t
    return total


# -- the named curvature cochains ------------------------------------------


def n_family() -> Dict[str, Cochain]:
    """kappa_4 .. kappa~_9 used by the type N models."""
    return {
        "kappa4": _wedge("10", "31", "f01"),
        "kappa5": _sum([_wedge("10", "31", "e10"), _wedge("21", "31", "f01", -2)]),
        "kappa6": _sum([
            _wedge("10", "31", "e21", -1),
            _wedge("21", "31", "e10", -2),
            _wedge("31", "32", "f01"),
        ]),
        "kappa7": _sum([
            _wedge("10", "32", "e31"),
            _wedge("11", "31", "e31", -1),
            _wedge("10", "31", "e32", -2),
            _wedge("21", "31", "e21", 6),
            _wedge("31", "32", "e10", 3),
        ]),
        "kappa~7": _wedge("10", "31", "e31"),
        "kappa8": _sum([
            _wedge("21", "31", "e32"),
            _wedge("21", "32", "e31", -1),
            _wedge("31", "32", "e21", -1),
        ]),
        "kappa~8": _wedge("21", "31", "e31"),
        "kappa~9": _wedge("31", "32", "e31"),
    }  # fmt: skip


def d_family() -> Dict[str, Cochain]:
    """kappa_4, kappa_6, kappa_8, kappa~_8 used by the type D models."""
    return {
        "kappa4": _sum([
            _wedge("10", "32", H01),
            _wedge("11", "31", H01, -1),
            _wedge("10", "31", "e01", -1),
            _wedge("11", "32", "f01", -1),
        ]),
        "kappa6": _sum([
            _wedge("11", "31", "e21"),
            _wedge("10", "32", "e21", -1),
            _wedge("21", "32", "e10", -2),
            _wedge("21", "31", "e11", 2),
            _wedge("31", "32", H01),
        ]),
        "kappa8": n_family()["kappa8"],
        "kappa~8": _sum([_wedge("21", "32", "e31"), _wedge("21", "31", "e32")]),
    }  # fmt: skip


def combine(family: Mapping[str, Cochain], coeffs: Mapping[str, Any]) -> Cochain:
    return _sum([family[name] * c for name, c in coeffs.items() if c])


# -- evaluation helpers ------------------------------------------------------


def evaluate_cochain(kappa: Cochain, x: G2Element, y: G2Element) -> G2Element:
    """kappa(x, y) through the coset projections of x and y."""
    total = G2Element()
    for a, b in combinations(COSET, 2):
        det = x.coeff(a) * y.coeff(b) - x.coeff(b) * y.coeff(a)
        if det:
            total = total + kappa.value(a, b) * det
    return total


class AlgebraicModel:
    """Filtered subspace f of g with curvature kappa and bracket table of [.,.]_f."""

    def __init__(
        self,
        label: ModelLabel,
        params: Mapping[str, Param],
        basis: Mapping[str, G2Element],
        degrees: Mapping[str, int],
        curvature: Cochain,
        table: Table,
        family: Optional[str] = None,
        printed: Optional[Mapping[str, Any]] = None,
    ) -> None:
        self.label = label
        self.params: Dict[str, Param] = dict(params)
        self.names: Tuple[str, ...] = tuple(basis)
        self.basis: Dict[str, G2Element] = dict(basis)
        self.degrees: Dict[str, int] = dict(degrees)
        self.curvature = curvature
        self.table = StructureTable(self.names, table)
        self.family = family
        self.printed: Dict[str, Any] = dict(printed or {})

    @property
    def formal(self) -> bool:
        return any(isinstance(p, ParamPoly) for p in self.params.values())

    @property
    def f0(self) -> List[str]:
        return [n for n in self.names if self.degrees[n] >= 0]

    @property
    def quotient(self) -> List[str]:
        return [n for n in self.names if self.degrees[n] < 0]

    @property
    def dim(self) -> int:
        return len(self.names)

    def kappa(self, x: G2Element, y: G2Element) -> G2Element:
        return evaluate_cochain(self.curvature, x, y)

    def ambient(self, u: str, v: str) -> G2Element:
        return bracket(self.basis[u], self.basis[v])

    def deficit(self, u: str, v: str) -> G2Element:
        """[u, v] - kappa(u, v) computed in g."""
        return self.ambient(u, v) - self.kappa(self.basis[u], self.basis[v])

    def table_element(self, u: str, v: str) -> G2Element:
        """[u, v]_f read from the bracket table and expanded in g."""
        total = G2Element()
        for w, c in self.table.bracket_names(u, v).items():
            total = total + self.basis[w] * c
        return total

    def coset_projection(self, name: str) -> G2Element:
        return project(self.basis[name], COSET)

    def evaluate(self, value: Any) -> "AlgebraicModel":
        """Substitute a concrete value for the formal parameter."""
        params = {k: p.evaluate(value) if isinstance(p, ParamPoly) else p for k, p in self.params.items()}
        table = {
            (u, v): {w: c.evaluate(value) if isinstance(c, ParamPoly) else c for w, c in image.items()}
            for (u, v) in combinations(self.names, 2)
            for image in [self.table.bracket_names(u, v)]
            if image
        }
        return AlgebraicModel(
            self.label,
            params,
            {n: b.evaluate(value) for n, b in self.basis.items()},
            self.degrees,
            self.curvature.evaluate(value),
            table,
            self.family,
            {k: c.evaluate(value) if isinstance(c, ParamPoly) else c for k, c in self.printed.items()},
        )

    def __repr__(self) -> str:
        bound = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"AlgebraicModel({self.label.value}{'; ' + bound if bound else ''})"


# -- builders ---------------------------------------------------------------


def _n7(c: Param) -> AlgebraicModel:
    basis = {
        "T": BASIS["Z2"],
        "N": BASIS["f01"],
        "X1": element((1, "f10"), (c, "e10")),
        "X2": BASIS["f11"],
        "X3": BASIS["f21"],
        "X4": BASIS["f31"],
        "X5": BASIS["f32"],
    }
    table: Table = {
        ("T", "N"): {"N": -1},
        ("T", "X2"): {"X2": -1},
        ("T", "X3"): {"X3": -1},
        ("T", "X4"): {"X4": -1},
        ("T", "X5"): {"X5": -2},
        ("N", "X1"): {"X2": 1},
        ("N", "X4"): {"X5": -1},
        ("X1", "X2"): {"N": -3 * c, "X3": -2},
        ("X1", "X3"): {"X2": -2 * c, "X4": 3},
        ("X1", "X4"): {"N": -1, "X3": c},
        ("X2", "X3"): {"X5": -3},
    }
    printed = {"kappa4": 1}
    kappa = combine(n_family(), printed)
    return AlgebraicModel(
        ModelLabel.N7, {"c": c}, basis, {"T": 0, "N": 0, **X_DEGREES}, kappa, table, "N", printed
    )


def _n6() -> AlgebraicModel:
    basis = {
        "N": BASIS["f01"],
        "X1": element((1, "f10"), (1, "e01"), (6, "e10"), (2, "e32")),
        "X2": element((1, "f11"), (1, "Z1"), (-2, "Z2"), (2, "e31")),
        "X3": element((1, "f21"), (9, "e10"), (2, "e21")),
        "X4": element((1, "f31"), (-2, "Z1"), (1, "Z2"), (-1, "e11"), (-4, "e31")),
        "X5": element((1, "f32"), (-1, "e10")),
    }
    table: Table = {
        ("N", "X1"): {"X2": 1},
        ("N", "X2"): {"N": -2},
        ("N", "X4"): {"X5": -1, "N": 1},
        ("X1", "X2"): {"N": -18, "X1": 2, "X3": -2},
        ("X1", "X3"): {"X2": -12, "X4": 3},
        ("X1", "X4"): {"X1": -2, "X3": 6, "N": -42},
        ("X1", "X5"): {"X4": -1},
        ("X2", "X3"): {"N": 27, "X5": -3},
        ("X2", "X4"): {"X2": -1, "X4": -1},
        ("X2", "X5"): {"N": -1, "X5": 1},
        ("X3", "X4"): {"N": -60, "X3": 6},
        ("X4", "X5"): {"N": -24, "X3": 2, "X5": 4},
    }
    printed = {"kappa4": 42, "kappa5": -30, "kappa6": 20, "kappa7": -4, "kappa8": 6}
    kappa = combine(n_family(), printed)
    return AlgebraicModel(ModelLabel.N6, {}, basis, {"N": 0, **X_DEGREES}, kappa, table, "N", printed)


def _d_table(a: Param, t45: Any, t15: Any, t34: Any) -> Table:
    """Shared shape of the D.6_a and b = 0 tables."""
    return {
        ("T", "X1"): {"X1": 1},
        ("T", "X2"): {"X2": -1},
        ("T", "X4"): {"X4": 1},
        ("T", "X5"): {"X5": -1},
        ("X1", "X2"): {"T": 3 * a, "X3": -2},
        ("X1", "X3"): {"X1": 2 * a, "X4": 3},
        ("X1", "X5"): {"T": t15, "X3": -a},
        ("X2", "X3"): {"X2": -2 * a, "X5": -3},
        ("X2", "X4"): {"T": -t15, "X3": a},
        ("X3", "X4"): {"X1": -t34},
        ("X3", "X5"): {"X2": t34},
        ("X4", "X5"): t45,
    }


def _d6(a: Param) -> AlgebraicModel:
    cube = a * (a * a + as_scalar(1) / 3)
    basis = {
        "T": H01,
        "X1": element((1, "f10"), (a, "e11"), (1, "e32")),
        "X2": element((1, "f11"), (a, "e10"), (1, "e31")),
        "X3": element((1, "f21"), (a * a + 1, "e21")),
        "X4": element((1, "f31"), (1, "e11"), (cube, "e32")),
        "X5": element((1, "f32"), (1, "e10"), (cube, "e31")),
    }
    table = _d_table(a, {"T": a * (a * a - 1), "X3": -2}, 6, a * a + 3)
    printed = {"kappa4": -4, "kappa6": a * (as_scalar(4) / 3), "kappa8": -2 * a * a}
    kappa = combine(d_family(), printed)
    return AlgebraicModel(ModelLabel.D6, {"a": a}, basis, {"T": 0, **X_DEGREES}, kappa, table, "D", printed)


def _b0(a: Param) -> AlgebraicModel:
    basis = {
        "T": H01,
        "X1": element((1, "f10"), (a, "e11")),
        "X2": element((1, "f11"), (a, "e10")),
        "X3": element((1, "f21"), (a * a, "e21")),
        "X4": element((1, "f31"), (a * a * a, "e32")),
        "X5": element((1, "f32"), (a * a * a, "e31")),
    }
    table = _d_table(a, {"T": a * a * a}, 0, a * a)
    return AlgebraicModel(ModelLabel.B0, {"a": a}, basis, {"T": 0, **X_DEGREES}, Cochain(2), table, "D", {})


def _flat() -> AlgebraicModel:
    table: Table = {
        (u, v): dict(STRUCTURE_CONSTANTS[(u, v)])
        for u, v in combinations(LABELS, 2)
        if STRUCTURE_CONSTANTS.get((u, v))
    }
    return AlgebraicModel(ModelLabel.FLAT, {}, dict(BASIS), DEGREE, Cochain(2), table)


def parse_label(label: Union[str, ModelLabel]) -> ModelLabel:
    if isinstance(label, ModelLabel):
        return label
    text = label.strip()
    for prefix, model in (("N.7", ModelLabel.N7), ("D.6", ModelLabel.D6)):
        if text.startswith(prefix):
            return model
    try:
        return ModelLabel(text)
    except ValueError:
        raise UnknownLabel(f"unknown model label {label!r}; expected one of "
                           f"{[m.value for m in ModelLabel]}", witness=label)


def build_model(
    label: Union[str, ModelLabel],
    params: Optional[Mapping[str, Any]] = None,
    formal: bool = False,
) -> AlgebraicModel:
    """Model from the catalog; formal=True keeps c or a as a polynomial variable."""
    model = parse_label(label)
    values: Dict[str, Param] = {}
    for name in PARAMETERS[model]:
        if formal:
            values[name] = ParamPoly.variable(name)
        else:
            raw = (params or {}).get(name, 0)
            values[name] = raw if isinstance(raw, ParamPoly) else as_scalar(raw)
    if model == ModelLabel.N7:
        return _n7(values["c"])
    if model == ModelLabel.N6:
        return _n6()
    if model == ModelLabel.D6:
        return _d6(values["a"])
    if model == ModelLabel.B0:
        return _b0(values["a"])
    return _flat()


def family_cochains(model: AlgebraicModel) -> Dict[str, Cochain]:
    if model.family == "N":
        return n_family()
    if model.family == "D":
        return d_family()
    return {}


def curvature_coefficients(model: AlgebraicModel) -> Optional[Dict[str, Any]]:
    """Coefficients of kappa against the named cochains of its family, recovered by solving."""
    family = family_cochains(model)
    if not family:
        return {} if not model.curvature else None
    names = list(family)
    coords = LinearCoordinates([family[n].to_vector() for n in names])
    solved = coords.coordinates(model.curvature.to_vector())
    if solved is None:
        return None
    return {n: solved.get(k, ZERO) for k, n in enumerate(names)}


def deficit_cochain(model: AlgebraicModel) -> Cochain:
    """kappa rebuilt from the bracket table as [x, y] - [x, y]_f on g/p."""
    quotient = model.quotient
    projections = LinearCoordinates([model.coset_projection(n).to_vector() for n in quotient])
    inverse: Dict[str, Dict[str, Any]] = {}
    for label in COSET:
        combo = projections.coordinates({label: 1}) or {}
        inverse[label] = {quotient[k]: c for k, c in combo.items()}
    data: Dict[Tuple[str, str], G2Element] = {}
    for a, b in combinations(COSET, 2):
        total = G2Element()
        for u, cu in inverse[a].items():
            for v, cv in inverse[b].items():
                if u != v:
                    total = total + (model.ambient(u, v) - model.table_element(u, v)) * (cu * cv)
        if total:
            data[(a, b)] = total
    return Cochain(2, data)


__all__ = [
    "AlgebraicModel",
    "H01",
    "PARAMETERS",
    "X_NAMES",
    "build_model",
    "combine",
    "curvature_coefficients",
    "d_family",
    "deficit_cochain",
    "evaluate_cochain",
    "family_cochains",
    "n_family",
    "parse_label",
]
