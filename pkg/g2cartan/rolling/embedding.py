"""The rolling distribution as a D.6 model, its classifying invariant and the 3:1 ratio."""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.console import Console

from ..algebra.scalar_tower import ONE, I, Scalar, as_scalar, real_sign, sqrt_scalar
from ..errors import ExceptionalRatio, G2CartanError, ResidualNonzero
from ..models.catalog import AlgebraicModel, build_model
from ..models.lie import NamedVector, table_mismatches
from ..real_forms.fixed import fixed_point_algebra
from ..real_forms.signature import killing_signature, model_type
from ..types import ModelLabel, Report
from .algebra import RollingAlgebra, ad_t_eigen_failures, involution_failures

console = Console(stderr=True)

EXCEPTIONAL = Fraction(3)
POLES = (Fraction(3), Fraction(-3), Fraction(1, 3), Fraction(-1, 3))


def classifying_invariant(rho: Any) -> Fraction:
    """I(rho) = 4 (rho^2 + 1)^2 / ((rho + 3)(rho - 3)(rho + 1/3)(rho - 1/3))."""
    rho = Fraction(rho)
    if rho == 0:
        raise G2CartanError("rho must be nonzero", witness="0")
    if rho in POLES:
        raise ExceptionalRatio(f"rho = {rho} is the exceptional ratio; the symmetry is 14-dimensional")
    if rho in (1, -1):
        console.print(f"[yellow]⚠️ rho = {rho} gives a holonomic distribution[/yellow]")
    third = Fraction(1, 3)
    return 4 * (rho * rho + 1) ** 2 / ((rho + 3) * (rho - 3) * (rho + third) * (rho - third))


def adjoined_parameter(rho: Any) -> Scalar:
    """a with a^2 = I(rho): sqrt(I) when positive, i sqrt(|I|) otherwise."""
    return sqrt_scalar(classifying_invariant(rho))


class EmbeddingSolution:
    """Solved (s, t) with s1 = 1 and the images of T, X1..X5 in so(3) x so(3) over C."""

    def __init__(
        self,
        rho: Fraction,
        a: Scalar,
        coeffs: Dict[str, Scalar],
        images: Dict[str, NamedVector],
        model: AlgebraicModel,
        algebra: RollingAlgebra,
    ) -> None:
        self.rho = rho
        self.a = a
        self.coeffs = coeffs
        self.images = images
        self.model = model
        self.algebra = algebra

    @property
    def exceptional(self) -> bool:
        return self.model.label == ModelLabel.B0

    @property
    def a_squared(self) -> Fraction:
        return (self.a * self.a).to_fraction()

    def residuals(self) -> List[Tuple[str, str]]:
        """Table pairs of the target model that fail in the rolling algebra."""
        expected = {}
        names = self.model.names
        for k, u in enumerate(names):
            for v in names[k + 1:]:
                expected[(u, v)] = self.model.table.bracket_names(u, v)
        return table_mismatches(self.algebra.ambient, self.images, expected, names)


def embedding_coefficients(rho: Fraction, a: Scalar, s1: Scalar = ONE) -> Dict[str, Scalar]:
    m = as_scalar(rho * rho + 1)
    return {
        "s1": s1,
        "s2": -5 * a / (s1 * m),
        "s3": -5 * I * a / m,
        "s4": 5 * I * s1 * a / (3 * m),
        "s5": 25 * I * a * a / (3 * s1 * m * m),
        "t1": 3 * a / 2,
        "t2": -7 * a * s1 / 6,
        "t3": 35 * a * a / (6 * s1 * m),
    }


def embedding_images(algebra: RollingAlgebra, k: Dict[str, Scalar]) -> Dict[str, NamedVector]:
    c = algebra.combine
    return {
        "T": c((I, "v0")),
        "X1": c((k["s1"], "v1"), (k["s1"] * I, "v2")),
        "X2": c((k["s2"], "v1"), (-k["s2"] * I, "v2")),
        "X3": c((k["s3"], "v3"), (k["t1"] * I, "v0")),
        "X4": c((k["s4"], "v4"), (-k["s4"] * I, "v5"), (k["t2"], "v1"), (k["t2"] * I, "v2")),
        "X5": c((k["s5"], "v4"), (k["s5"] * I, "v5"), (k["t3"], "v1"), (-k["t3"] * I, "v2")),
    }


def solve_embedding(rho: Any, mode: str = "generic") -> EmbeddingSolution:
    """Fit (T, X1..X5) to the D.6_a table, or to the b = 0 table at rho = 3.

    The generic mode adjoins a with a^2 = I(rho); both square roots are tried.
    The exceptional mode uses a = 1, since the b = 0 structure does not fix a.
    """
    rho = Fraction(rho)
    algebra = RollingAlgebra(rho)
    if mode == "exceptional":
        if rho != EXCEPTIONAL:
            raise G2CartanError("the exceptional embedding needs rho = 3", witness=str(rho))
        roots = [ONE]
        label = ModelLabel.B0
    elif mode == "generic":
        root = adjoined_parameter(rho)
        roots = [root, -root]
        label = ModelLabel.D6
    else:
        raise G2CartanError(f"unknown mode {mode!r}; expected generic or exceptional", witness=mode)

    first: List[Tuple[str, str]] = []
    for a in roots:
        coeffs = embedding_coefficients(rho, a)
        solution = EmbeddingSolution(
            rho, a, coeffs, embedding_images(algebra, coeffs), build_model(label, {"a": a}), algebra
        )
        failures = solution.residuals()
        if not failures:
            return solution
        first.append(failures[0])
    u, v = first[0]
    raise ResidualNonzero(f"[{u}, {v}] does not match the {label.value} table", witness=first[0])


def rolling_psi(rho: Any) -> str:
    return "tilde_-1" if Fraction(rho) > EXCEPTIONAL else "tilde_i"


def _normalized(a: Scalar) -> Scalar:
    if a.is_real():
        return a if real_sign(a) >= 0 else -a
    return a if real_sign(a / I) >= 0 else -a


def classify_rolling(rho: Any) -> Tuple[Fraction, str, str]:
    """(a^2, anti-involution, symmetry verdict) for rho > 1; the D.6 model is maximal."""
    rho = Fraction(rho)
    if rho <= 1:
        raise G2CartanError(f"rho must exceed 1, got {rho}", witness=str(rho))
    if rho == EXCEPTIONAL:
        raise ExceptionalRatio("rho = 3: 14-dimensional symmetry", symmetry_dim=14)
    return classifying_invariant(rho), rolling_psi(rho), "6-dimensional symmetry"


def verify_rolling(rho: Any, report: Optional[Report] = None) -> Report:
    """Filtration, embedding and real-form checks for the rolling distribution at rho > 1."""
    rho = Fraction(rho)
    report = report or Report(command="rolling")
    if rho <= 1:
        raise G2CartanError(f"rho must exceed 1, got {rho}", witness=str(rho))
    algebra = RollingAlgebra(rho)
    flag = algebra.derived_flag()
    report.add("rolling.derived_flag", flag == [3, 4, 6], witness=str(flag))
    report.add("rolling.jacobi", not algebra.table.jacobi_failures())
    signature = killing_signature(algebra.ambient.killing_matrix())
    report.add("rolling.real_form", model_type(signature) == "so(3)xso(3)", witness=str(list(signature)))
    eigen = ad_t_eigen_failures(rho)
    report.add("rolling.ad_t_eigenvalues", not eigen, witness=eigen[0] if eigen else None)
    involutions = involution_failures(rho)
    report.add("rolling.involutions", not involutions, witness=involutions[0] if involutions else None)

    if rho == EXCEPTIONAL:
        solution = solve_embedding(rho, "exceptional")
        report.add("rolling.flat_embedding", not solution.residuals(), count=15)
        report.data.update(rho=str(rho), exceptional=True, symmetry_dim=14, residuals_zero=True)
        return report

    a2, psi_label, verdict = classify_rolling(rho)
    solution = solve_embedding(rho)
    report.add("rolling.d6_embedding", not solution.residuals(), count=15)
    report.add("rolling.invariant", solution.a_squared == a2, witness=str(solution.a_squared))
    real = fixed_point_algebra(psi_label, build_model(ModelLabel.D6, {"a": _normalized(solution.a)}))
    report.add(f"rolling.{psi_label}", real.type == "so(3)xso(3)", witness=str(list(real.signature)))
    report.data.update(
        rho=str(rho),
        a2=str(solution.a_squared),
        psi=psi_label,
        exceptional=False,
        symmetry_dim=6,
        verdict=verdict,
        residuals_zero=not solution.residuals(),
    )
    report.ext = f"a^2={solution.a_squared}"
    return report


def invariant_monotonicity_check(samples: Sequence[Any], report: Optional[Report] = None) -> Report:
    """I is strictly decreasing on (1, 3) and on (3, oo), below -9/4 and above 4 respectively."""
    report = report or Report(command="rolling monotonicity")
    values = sorted(Fraction(s) for s in samples)
    outside = [v for v in values if v <= 1 or v == EXCEPTIONAL]
    report.add("rolling.samples_in_range", not outside, witness=str(outside[0]) if outside else None)
    intervals = {
        "low": [v for v in values if 1 < v < EXCEPTIONAL],
        "high": [v for v in values if v > EXCEPTIONAL],
    }
    for name, points in intervals.items():
        invariants = [classifying_invariant(v) for v in points]
        violations = [
            str(points[k + 1]) for k in range(len(points) - 1) if invariants[k + 1] >= invariants[k]
        ]
        report.add(
            f"rolling.decreasing.{name}",
            not violations,
            witness=violations[0] if violations else None,
            count=len(points),
        )
        bound = Fraction(-9, 4) if name == "low" else Fraction(4)
        escaped = [
            str(p) for p, i in zip(points, invariants) if (i >= bound if name == "low" else i <= bound)
        ]
        report.add(f"rolling.range.{name}", not escaped, witness=escaped[0] if escaped else None)
    report.data.update(invariants={str(v): str(classifying_invariant(v)) for v in values if v > 1 and v != 3})
    return report
