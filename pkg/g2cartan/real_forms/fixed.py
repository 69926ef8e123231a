"""Anti-involutions of algebraic models, their real fixed-point algebras and the real tables."""

from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from rich.console import Console

from ..algebra.linalg import LinearCoordinates, vec_combine
from ..algebra.param_poly import ParamPoly
from ..algebra.scalar_tower import ONE, I, Scalar, as_scalar, real_sign
from ..core.g2 import LABELS, G2Element, bracket
from ..core.parabolic import COSET
from ..errors import RealityViolation, StructureViolation, UnknownLabel
from ..models.catalog import AlgebraicModel, build_model, parse_label
from ..models.holonomy import holonomy
from ..models.lie import NamedVector, StructureTable, structure_from_basis
from ..types import ModelLabel, Report
from .maps import (
    BasisMap,
    a_lambda,
    a_tilde,
    all_anti_involutions,
    anti_involution,
    inverse,
    psi,
    psi_tilde,
    torus_sign,
)
from .signature import MODEL_TYPES, Signature, holonomy_type, killing_signature

console = Console(stderr=True)

Involution = Union[str, BasisMap]


def _as_map(psi_: Involution) -> BasisMap:
    return psi_ if isinstance(psi_, BasisMap) else anti_involution(psi_)


def _conj(c: Any) -> Scalar:
    return as_scalar(c).conj()


def _reality_parameter(model: AlgebraicModel) -> Optional[Scalar]:
    name = {ModelLabel.N7: "c", ModelLabel.D6: "a", ModelLabel.B0: "a"}.get(model.label)
    if name is None:
        return None
    value = model.params[name]
    if isinstance(value, ParamPoly):
        raise RealityViolation(f"{name} must be a concrete value to test reality", witness=str(value))
    return value


def check_reality(model: AlgebraicModel) -> None:
    """Models admitting an anti-involution have a^2 (or c^2) real."""
    value = _reality_parameter(model)
    if value is not None and not (value * value).is_real():
        name = "c" if model.label == ModelLabel.N7 else "a"
        raise RealityViolation(f"{name}^2 = {value * value} is not real", witness=str(value))


def model_images(psi_: BasisMap, model: AlgebraicModel) -> Tuple[Dict[str, NamedVector], List[str]]:
    """psi on each model basis vector, in model coordinates; names whose image leaves f."""
    coords = LinearCoordinates([model.basis[n].to_vector() for n in model.names])
    images: Dict[str, NamedVector] = {}
    outside = []
    for name in model.names:
        combo = coords.coordinates(psi_(model.basis[name]).to_vector())
        if combo is None:
            outside.append(name)
            continue
        images[name] = {model.names[k]: c for k, c in combo.items()}
    return images, outside


def apply_on_model(images: Dict[str, NamedVector], v: NamedVector) -> NamedVector:
    """Conjugate-linear extension of the model images."""
    return vec_combine((_conj(c), images[n]) for n, c in v.items())


def verify_anti_involution(
    psi_: Involution,
    model: Optional[AlgebraicModel] = None,
    report: Optional[Report] = None,
) -> Report:
    """Square, homomorphism on all basis pairs, psi(p) = p and, given a model, psi(f) = f and psi kappa = kappa psi."""
    m = _as_map(psi_)
    report = report or Report(command="realform")
    if model is not None:
        check_reality(model)

    square = m.square_failures()
    report.add("realform.square", not square, witness=square[0] if square else None, count=len(LABELS))
    hom = m.homomorphism_failures()
    report.add(
        "realform.homomorphism",
        not hom,
        witness=str(hom[0]) if hom else None,
        count=len(LABELS) ** 2,
    )
    parabolic = m.parabolic_failures()
    report.add("realform.preserves_p", not parabolic, witness=parabolic[0] if parabolic else None)

    if model is not None:
        _, outside = model_images(m, model)
        report.add("realform.preserves_f", not outside, witness=outside[0] if outside else None)
        kappa = [
            (a, b)
            for a, b in combinations(COSET, 2)
            if m(model.curvature.value(a, b)) != model.kappa(m.images[a], m.images[b])
        ]
        report.add("realform.preserves_kappa", not kappa, witness=str(kappa[0]) if kappa else None)

    report.data.update(psi=m.label, model=repr(model) if model is not None else None)
    if not report.passed:
        failed = ", ".join(c.name for c in report.failures())
        console.print(f"[red]❌ {m.label} is not an anti-involution here: {failed}[/red]")
    return report


def _require(psi_: BasisMap, model: AlgebraicModel) -> Dict[str, NamedVector]:
    report = verify_anti_involution(psi_, model)
    if not report.passed:
        failed = report.failures()[0]
        raise StructureViolation(
            f"{psi_.label} is not an anti-involution of {model!r} ({failed.name})", witness=failed.witness
        )
    images, _ = model_images(psi_, model)
    return images


class RealFixedAlgebra:
    """Real form spanned by psi-fixed vectors, with its real bracket table and Killing signature."""

    def __init__(self, psi_label: str, basis: List[Any], table: StructureTable) -> None:
        self.psi_label = psi_label
        self.basis = basis
        self.table = table
        self.signature: Signature = killing_signature(table.killing_matrix())
        self.type: Optional[str] = MODEL_TYPES.get(self.signature) if self.dim == 6 else None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def describe(self) -> Dict[str, Any]:
        return {
            "psi": self.psi_label,
            "dim": self.dim,
            "signature": list(self.signature),
            "type": self.type,
            "basis": [_show(v) for v in self.basis],
        }

    def __repr__(self) -> str:
        return f"RealFixedAlgebra({self.psi_label}, signature={list(self.signature)}, type={self.type})"


def _show(v: Any) -> str:
    if isinstance(v, G2Element):
        return str(v)
    return " + ".join(f"({c})*{n}" for n, c in v.items())


def _select(candidates: List[Any], to_vector: Any) -> List[Any]:
    span = LinearCoordinates([])
    chosen = []
    for v in candidates:
        if to_vector(v) and span.add(to_vector(v)):
            chosen.append(v)
    return chosen


def fixed_point_algebra(psi_: Involution, model: AlgebraicModel) -> RealFixedAlgebra:
    """f^psi with a real basis in model coordinates; raises NotClosed off the real subfield."""
    m = _as_map(psi_)
    images = _require(m, model)
    candidates = []
    for n in model.names:
        candidates.append(vec_combine([(ONE, {n: ONE}), (ONE, images[n])]))
        candidates.append(vec_combine([(I, {n: ONE}), (-I, images[n])]))
    basis = _select(candidates, lambda v: v)
    names = [f"r{k}" for k in range(len(basis))]
    table = structure_from_basis(basis, names, model.table.bracket, lambda v: v, lambda c: as_scalar(c).is_real())
    return RealFixedAlgebra(m.label, basis, table)


# -- printed real bases of the D.6 anti-involutions ------------------------

_H = Scalar(1, 1)  # 1 + i
_HC = Scalar(1, -1)  # 1 - i

PRINTED_BASES: Dict[str, List[NamedVector]] = {
    "psi_1": [{"T": ONE}, {"X1": ONE}, {"X2": ONE}, {"X3": ONE}, {"X4": ONE}, {"X5": ONE}],
    "tilde_1": [
        {"T": I},
        {"X1": ONE, "X2": ONE},
        {"X1": I, "X2": -I},
        {"X3": I},
        {"X4": ONE, "X5": ONE},
        {"X4": I, "X5": -I},
    ],
    "tilde_-1": [
        {"T": I},
        {"X1": ONE, "X2": -ONE},
        {"X1": I, "X2": I},
        {"X3": I},
        {"X4": ONE, "X5": -ONE},
        {"X4": I, "X5": I},
    ],
    "psi_i": [{"T": ONE}, {"X1": _H}, {"X2": _H}, {"X3": I}, {"X4": _HC}, {"X5": _HC}],
    "tilde_i": [
        {"T": I},
        {"X1": ONE, "X2": I},
        {"X2": ONE, "X1": I},
        {"X3": ONE},
        {"X4": ONE, "X5": -I},
        {"X5": ONE, "X4": -I},
    ],
    "tilde_-i": [
        {"T": I},
        {"X1": ONE, "X2": -I},
        {"X2": ONE, "X1": -I},
        {"X3": ONE},
        {"X4": ONE, "X5": I},
        {"X5": ONE, "X4": I},
    ],
}


def printed_basis_algebra(psi_label: str, model: AlgebraicModel) -> RealFixedAlgebra:
    """The printed real basis, checked psi-fixed and closed over the reals."""
    if psi_label not in PRINTED_BASES:
        raise UnknownLabel(f"no printed basis for {psi_label!r}", witness=psi_label)
    m = anti_involution(psi_label)
    images = _require(m, model)
    basis = PRINTED_BASES[psi_label]
    moved = [k for k, v in enumerate(basis) if apply_on_model(images, v) != {n: c for n, c in v.items() if c}]
    if moved:
        raise StructureViolation(f"printed basis vector {moved[0]} is not fixed by {psi_label}", witness=moved[0])
    names = [f"r{k}" for k in range(len(basis))]
    table = structure_from_basis(basis, names, model.table.bracket, lambda v: v, lambda c: as_scalar(c).is_real())
    return RealFixedAlgebra(psi_label, list(basis), table)


# -- classification -------------------------------------------------------


def _normalized(value: Scalar, name: str) -> Tuple[bool, Scalar]:
    """(is_real, t) with value = t or value = i t and t >= 0."""
    if value.is_real():
        if real_sign(value) < 0:
            raise RealityViolation(f"normalize {name} to [0, oo) or i[0, oo), got {value}", witness=str(value))
        return True, value
    if value.real_part():
        raise RealityViolation(f"{name}^2 = {value * value} is not real", witness=str(value))
    t = value.imag_part()
    if real_sign(t) < 0:
        raise RealityViolation(f"normalize {name} to [0, oo) or i[0, oo), got {value}", witness=str(value))
    return False, t


def classification_labels(family: Union[str, ModelLabel], param: Any = 0) -> List[str]:
    """Inequivalent anti-involutions for a normalized parameter."""
    label = parse_label(family)
    if label == ModelLabel.N6:
        return ["tau_1", "tau_-1"]
    if label not in (ModelLabel.N7, ModelLabel.D6):
        raise UnknownLabel(f"no real classification for {label.value}", witness=label.value)
    name = "c" if label == ModelLabel.N7 else "a"
    value = as_scalar(param)
    real, _ = _normalized(value, name)
    if label == ModelLabel.N7:
        if not value:
            return ["psi_1", "psi_i"]
        return ["psi_1", "psi_-1"] if real else ["psi_i", "psi_-i"]
    if not value:
        return ["psi_1", "psi_i", "tilde_1", "tilde_i"]
    return ["psi_1", "tilde_1", "tilde_-1"] if real else ["psi_i", "tilde_i", "tilde_-i"]


def expected_d6_types(a: Any) -> Dict[str, str]:
    """Fixed-algebra types by parameter range for the normalized D.6 parameter."""
    value = as_scalar(a)
    real, t = _normalized(value, "a")
    out: Dict[str, str] = {}
    if real:
        cut = real_sign(t * t - 4)
        out.update(
            zip(
                ("psi_1", "tilde_1", "tilde_-1"),
                {
                    -1: ("sl(2,R)xsl(2,R)", "sl(2,R)xso(3)", "sl(2,R)xso(3)"),
                    0: ("sl(2,R)xe(1,1)", "sl(2,R)xe(2)", "so(3)xe(2)"),
                    1: ("sl(2,R)xsl(2,R)", "sl(2,R)xsl(2,R)", "so(3)xso(3)"),
                }[cut],
            )
        )
    if not real or not value:
        cut = real_sign(t * t - as_scalar(9) / 4)
        out.update(
            zip(
                ("psi_i", "tilde_i", "tilde_-i"),
                {
                    -1: ("so(1,3)", "so(1,3)", "so(1,3)"),
                    0: ("e(1,2)", "e(3)", "e(1,2)"),
                    1: ("sl(2,R)xsl(2,R)", "so(3)xso(3)", "sl(2,R)xsl(2,R)"),
                }[cut],
            )
        )
    return out


def classify_real_models(
    family: Union[str, ModelLabel],
    param: Any = 0,
    report: Optional[Report] = None,
) -> Report:
    """Every inequivalent anti-involution with the signature and type of its fixed algebra."""
    label = parse_label(family)
    report = report or Report(command="realform classify")
    labels = classification_labels(label, param)
    values = {"c": param} if label == ModelLabel.N7 else {"a": param} if label == ModelLabel.D6 else {}
    model = build_model(label, values)
    expected = expected_d6_types(param) if label == ModelLabel.D6 else {}
    rows = []
    for psi_label in labels:
        algebra = fixed_point_algebra(psi_label, model)
        row = algebra.describe()
        rows.append(row)
        report.add(f"realform.{psi_label}.closed", algebra.dim == model.dim, count=algebra.dim)
        if psi_label in expected:
            report.add(
                f"realform.{psi_label}.type",
                algebra.type == expected[psi_label],
                witness=f"{list(algebra.signature)} -> {algebra.type}",
            )
            printed = printed_basis_algebra(psi_label, model)
            report.add(
                f"realform.{psi_label}.printed_basis",
                printed.signature == algebra.signature,
                witness=str(list(printed.signature)),
            )
    report.data.update(family=label.value, param=str(as_scalar(param)), models=rows)
    return report


# -- real holonomy --------------------------------------------------------


def real_holonomy(psi_: Involution, model: AlgebraicModel) -> RealFixedAlgebra:
    """Fixed points of psi on the complex holonomy, tagged by signature or nilpotency."""
    m = _as_map(psi_)
    _require(m, model)
    hol = holonomy(model)
    moved = [str(h) for h in hol.basis if not hol.contains(m(h))]
    if moved:
        raise StructureViolation(f"{m.label} does not preserve the holonomy", witness=moved[0])
    candidates = []
    for h in hol.basis:
        ph = m(h)
        candidates.extend([h + ph, (h - ph) * I])
    basis = _select(candidates, lambda x: x.to_vector())
    names = [f"h{k}" for k in range(len(basis))]
    table = structure_from_basis(basis, names, bracket, lambda x: x.to_vector(), lambda c: as_scalar(c).is_real())
    algebra = RealFixedAlgebra(m.label, basis, table)
    tag = holonomy_type(algebra.signature)
    if tag is None and table.is_two_step_nilpotent() and table.center_dim() == 1 and table.derived_dim() == 1:
        tag = f"heis{algebra.dim}"
    algebra.type = tag
    return algebra


# -- redundancy and automorphisms -----------------------------------------


def _same_span(first: Sequence[G2Element], second: Sequence[G2Element]) -> bool:
    span = LinearCoordinates([x.to_vector() for x in second])
    return len(first) == len(second) and all(span.contains(x.to_vector()) for x in first)


def redundancy_failures() -> List[str]:
    """Conjugations relating equivalent real models, checked as identities of maps on g."""
    failures = []
    a_i = a_lambda(I)
    a_i_inv = inverse(a_i)
    for zeta, opposite in (("1", "-1"), ("-1", "1"), ("i", "-i"), ("-i", "i")):
        if a_i.compose(psi(zeta)).compose(a_i_inv) != torus_sign().compose(psi(opposite)):
            failures.append(f"A_i psi_{zeta} A_i^-1 != S psi_{opposite}")
    flip = a_lambda(-1)
    for zeta, opposite in (("1", "-1"), ("-1", "1"), ("i", "-i"), ("-i", "i")):
        if flip.compose(psi_tilde(zeta)).compose(flip) != psi_tilde(opposite):
            failures.append(f"A_-1 tilde_{zeta} A_-1 != tilde_{opposite}")
        if flip.compose(psi(zeta)).compose(flip) != psi(zeta):
            failures.append(f"A_-1 psi_{zeta} A_-1 != psi_{zeta}")
    return failures


def parameter_action_failures(samples: Sequence[Any] = (1, 2, Scalar(0, 1))) -> List[str]:
    """A_i sends N.7_c to N.7_-c, A_-1 sends D.6_a to D.6_-a and A~ fixes D.6_a."""
    failures = []
    for value in samples:
        v = as_scalar(value)
        n7, n7_neg = build_model(ModelLabel.N7, {"c": v}), build_model(ModelLabel.N7, {"c": -v})
        if not _same_span([a_lambda(I)(x) for x in n7.basis.values()], list(n7_neg.basis.values())):
            failures.append(f"A_i N.7_{v}")
        d6, d6_neg = build_model(ModelLabel.D6, {"a": v}), build_model(ModelLabel.D6, {"a": -v})
        if not _same_span([a_lambda(-1)(x) for x in d6.basis.values()], list(d6_neg.basis.values())):
            failures.append(f"A_-1 D.6_{v}")
        if not _same_span([a_tilde()(x) for x in d6.basis.values()], list(d6.basis.values())):
            failures.append(f"A~ D.6_{v}")
    return failures


def verify_real_tables(report: Optional[Report] = None) -> Report:
    """Every listed anti-involution of g, automorphism sanity and the redundancy identities."""
    report = report or Report(command="realform tables")
    for m in all_anti_involutions():
        hom = m.homomorphism_failures()
        square = m.square_failures()
        report.add(
            f"realform.{m.label}",
            not hom and not square and not m.parabolic_failures(),
            witness=str(hom[0] if hom else square[0]) if hom or square else None,
            count=len(LABELS) ** 2,
        )
    for aut in (a_lambda(2), a_lambda(I), a_tilde()):
        hom = aut.homomorphism_failures()
        report.add(f"realform.automorphism.{aut.label}", not hom, witness=str(hom[0]) if hom else None)
    redundancy = redundancy_failures()
    report.add("realform.redundancy", not redundancy, witness=redundancy[0] if redundancy else None)
    actions = parameter_action_failures()
    report.add("realform.parameter_action", not actions, witness=actions[0] if actions else None)
    return report


__all__ = [
    "PRINTED_BASES",
    "RealFixedAlgebra",
    "check_reality",
    "classification_labels",
    "classify_real_models",
    "expected_d6_types",
    "fixed_point_algebra",
    "printed_basis_algebra",
    "real_holonomy",
    "verify_anti_involution",
    "verify_real_tables",
]
