"""Verification of algebraic models against the defining conditions and the printed tables."""

from functools import lru_cache
from itertools import combinations
from typing import Any, List, Optional

from rich.console import Console

from ..algebra.linalg import LinearCoordinates
from ..core.g2 import bracket
from ..core.parabolic import COSET, P_LABELS, filtration_degree, homogeneous_part, project
from ..homology.complexes import HodgeSpaces, act_cochain, partial_star, to_chain
from ..homology.curvature_module import curvature_module, quartic_covariants
from ..prolongation.quartics import BinaryQuartic, g0_action
from ..types import ModelLabel, Report
from .catalog import AlgebraicModel, curvature_coefficients, deficit_cochain

console = Console(stderr=True)

G_MINUS2 = ("f10", "f11", "f21")


@lru_cache(maxsize=None)
def _hodge() -> HodgeSpaces:
    console.print("🧮 Building the Hodge decomposition of 2-cochains...")
    return HodgeSpaces(2)


def harmonic_curvature(model: AlgebraicModel) -> BinaryQuartic:
    """kappa_H as a binary quartic, through the harmonic projection of kappa."""
    if not model.curvature:
        return BinaryQuartic([0] * 5)
    harmonic = _hodge().project_harmonic(model.curvature)
    binary, _ = quartic_covariants(harmonic)
    return BinaryQuartic(binary)


def _first(items: List[Any]) -> Optional[str]:
    return str(items[0]) if items else None


def _filtration_failures(model: AlgebraicModel) -> List[str]:
    failures = []
    for name in model.names:
        x, k = model.basis[name], model.degrees[name]
        if filtration_degree(x) < k or not homogeneous_part(x, k):
            failures.append(name)
    for name in model.f0:
        if any(label not in P_LABELS for label in model.basis[name].support):
            failures.append(name)
    return failures


def killing_determinant_expected(a: Any) -> Any:
    return 4096 * (4 * a * a + 9) ** 3 * (a * a - 4) ** 2


def deformation_equivariance_failures(model: AlgebraicModel, t_name: str = "T") -> List[str]:
    """Quotient names x with [T, d(x)] != d([T, x]), d(x) = X - gr(X)."""
    t = model.basis[t_name]
    leads = {n: homogeneous_part(model.basis[n], model.degrees[n]) for n in model.quotient}
    deform = {n: model.basis[n] - leads[n] for n in model.quotient}
    names = list(model.quotient)
    coords = LinearCoordinates([leads[n].to_vector() for n in names])
    failures = []
    for n in names:
        combo = coords.coordinates(bracket(t, leads[n]).to_vector())
        if combo is None:
            failures.append(n)
            continue
        image = bracket(t, deform[n])
        for k, c in combo.items():
            image = image - deform[names[k]] * c
        if image:
            failures.append(n)
    return failures


def _rank_vectors(model: AlgebraicModel) -> List[Any]:
    """Basis vectors for the rank checks; formal models use their parameter-free leading parts."""
    if model.formal:
        return [homogeneous_part(model.basis[n], model.degrees[n]) for n in model.names]
    return [model.basis[n] for n in model.names]


def verify_model(model: AlgebraicModel, report: Optional[Report] = None) -> Report:
    """All structural checks of a model; failures carry witnesses."""
    report = report or Report(command="model verify")
    kappa = model.curvature

    vectors = dict(zip(model.names, _rank_vectors(model)))
    independent = LinearCoordinates([v.to_vector() for v in vectors.values()]).dim
    quotient_span = LinearCoordinates([project(vectors[n], COSET).to_vector() for n in model.quotient]).dim
    report.add(
        "model.m1.coset_span",
        independent == model.dim and len(model.quotient) == 5 and quotient_span == 5,
        witness=None if quotient_span == 5 else f"coset rank {quotient_span}",
    )
    bad_filtration = _filtration_failures(model)
    report.add("model.m1.filtered", not bad_filtration, witness=_first(bad_filtration))

    f0_failures = [
        (z, y) for z in model.f0 for y in model.names if z != y and model.deficit(z, y) != model.table_element(z, y)
    ]
    report.add("model.m2.isotropy", not f0_failures, witness=_first(f0_failures))

    normal = not partial_star(to_chain(kappa))
    homogeneities = kappa.homogeneities()
    report.add("model.m3.normal", normal)
    report.add(
        "model.m3.homogeneity",
        not homogeneities or min(homogeneities) >= 1,
        witness=str(homogeneities) if homogeneities else None,
    )
    report.add("model.curvature_module", curvature_module().contains(kappa))

    table_failures = [
        (u, v) for u, v in combinations(model.names, 2) if model.deficit(u, v) != model.table_element(u, v)
    ]
    report.add(
        "model.bracket_table",
        not table_failures,
        witness=_first(table_failures),
        count=len(model.names) * (len(model.names) - 1) // 2,
    )
    report.add("model.deficit_matches_kappa", deficit_cochain(model) == kappa)

    if model.printed:
        recovered = curvature_coefficients(model) or {}
        mismatched = [n for n, c in model.printed.items() if recovered.get(n) != c]
        mismatched += [n for n, c in recovered.items() if c and n not in model.printed]
        report.add("model.curvature_coefficients", not mismatched, witness=_first(mismatched))

    jacobi = model.table.jacobi_failures()
    report.add("model.jacobi", not jacobi, witness=_first(jacobi))

    moving = [z for z in model.f0 if act_cochain(model.basis[z], kappa)]
    report.add("model.isotropy_preserves_kappa", not moving, witness=_first(moving))

    kappa_h = harmonic_curvature(model)
    if kappa_h:
        outside = [z for z in model.f0 if g0_action(homogeneous_part(model.basis[z], 0), kappa_h)]
        report.add("model.graded_in_annihilator", not outside, witness=_first(outside))

    pairs = [(a, b) for a, b in combinations(G_MINUS2, 2) if kappa.value(a, b)]
    report.add("model.kappa_vanishes_on_g_minus2", not pairs, witness=_first(pairs))
    if kappa:
        positive = [n for n in model.names if model.degrees[n] > 0]
        report.add("model.no_positive_filtrand", not positive, witness=_first(positive))

    if model.label in (ModelLabel.N7, ModelLabel.D6):
        moved = deformation_equivariance_failures(model)
        report.add("model.deformation_equivariant", not moved, witness=_first(moved))
    if model.label == ModelLabel.D6:
        det = model.table.killing_determinant()
        expected = killing_determinant_expected(model.params["a"])
        report.add("model.killing_determinant", det == expected, witness=str(det))
        report.data["killing_determinant"] = str(det)

    report.data.update(
        model=model.label.value,
        params={k: str(v) for k, v in model.params.items()},
        harmonic_curvature=str(kappa_h),
    )
    if not report.passed:
        failed = [check.name for check in report.failures()]
        console.print(f"[red]❌ {model!r} failed: {', '.join(failed)}[/red]")
    return report
