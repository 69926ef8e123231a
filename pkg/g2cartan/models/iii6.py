"""Nonexistence of multiply-transitive type III models with a six-dimensional symmetry algebra.

The candidate has T = Z1 - 4 Z2, the weight-restricted deformation
X1 = f10 + a e31, X4 = f31 + b e10 and the weight-restricted curvature
c * ((f10^* ∧ f32^* - f11^* ∧ f31^*) ⊗ f01 + f10^* ∧ f31^* ⊗ h01).
Brackets are affine in (a, b, c), so they are sampled at the origin and the
unit vectors and the linear closure conditions are solved exactly.
"""

from typing import Any, Dict, List, Optional, Tuple

from ..algebra.linalg import LinearCoordinates
from ..algebra.scalar_tower import ZERO, as_scalar
from ..core.g2 import BASIS, G2Element, bracket, coroot, element
from ..core.parabolic import deformation_basis
from ..homology.complexes import Cochain
from ..types import Report
from .catalog import evaluate_cochain

UNKNOWNS = ("a", "b", "c")
T = element((1, "Z1"), (-4, "Z2"))
LAMBDA = (4, 1)
LEADS = {"X1": "f10", "X2": "f11", "X3": "f21", "X4": "f31", "X5": "f32"}


def curvature(c: Any) -> Cochain:
    h01 = coroot("01")
    return (
        Cochain.term(c, ("f10", "f32"), "f01")
        - Cochain.term(c, ("f11", "f31"), "f01")
        + Cochain.term(c, ("f10", "f31"), h01)
    )


def candidate(a: Any, b: Any, c: Any) -> Tuple[Dict[str, G2Element], Cochain]:
    """Model basis with the deformation slots of deformation_basis("III", (4, 1)) filled by a, b."""
    values = {}
    for (source, target), value in zip(deformation_basis("III", LAMBDA), (a, b)):
        values[source] = (target, value)
    basis = {"T": T}
    for name, lead in LEADS.items():
        x = BASIS[lead]
        if lead in values:
            target, value = values[lead]
            x = x + BASIS[target] * value
        basis[name] = x
    return basis, curvature(c)


def f_bracket(a: Any, b: Any, c: Any, u: str, v: str) -> G2Element:
    basis, kappa = candidate(a, b, c)
    return bracket(basis[u], basis[v]) - evaluate_cochain(kappa, basis[u], basis[v])


def closure_residual(a: Any, b: Any, c: Any, u: str, v: str) -> G2Element:
    """[u, v]_f minus its coset-led expansion in X1..X5, then reduced modulo T."""
    basis, _ = candidate(a, b, c)
    w = f_bracket(a, b, c, u, v)
    for name, lead in LEADS.items():
        coeff = w.coeff(lead)
        if coeff:
            w = w - basis[name] * coeff
    residual, _ = LinearCoordinates([T.to_vector()]).reduce(w.to_vector())
    return G2Element(residual)


def f0_component(a: Any, b: Any, c: Any, u: str, v: str) -> G2Element:
    """The part of [u, v]_f left after removing the coset-led X terms."""
    basis, _ = candidate(a, b, c)
    w = f_bracket(a, b, c, u, v)
    for name, lead in LEADS.items():
        coeff = w.coeff(lead)
        if coeff:
            w = w - basis[name] * coeff
    return w


def _linear_part(u: str, v: str) -> Tuple[G2Element, List[G2Element]]:
    origin = closure_residual(0, 0, 0, u, v)
    columns = []
    for k in range(3):
        point = [0, 0, 0]
        point[k] = 1
        columns.append(closure_residual(*point, u, v) - origin)
    return origin, columns


def solve_closure(pairs: List[Tuple[str, str]]) -> List[Dict[str, Any]]:
    """Basis of the (a, b, c) satisfying closure on the given pairs."""
    columns: List[Dict[Any, Any]] = [{}, {}, {}]
    for u, v in pairs:
        origin, linear = _linear_part(u, v)
        if origin:
            return []
        for k, column in enumerate(linear):
            for label, coeff in column.items():
                columns[k][(u, v, label)] = coeff
    relations = LinearCoordinates(columns).relations
    return [{UNKNOWNS[k]: coeff for k, coeff in rel.items()} for rel in relations]


def affine_failures(pairs: List[Tuple[str, str]]) -> List[Tuple[str, str]]:
    """Pairs where the residual at (1, 1, 1) is not origin plus the unit responses."""
    failures = []
    for u, v in pairs:
        origin, linear = _linear_part(u, v)
        predicted = origin + linear[0] + linear[1] + linear[2]
        if closure_residual(1, 1, 1, u, v) != predicted:
            failures.append((u, v))
    return failures


def replicate_iii6_obstruction(report: Optional[Report] = None) -> Report:
    report = report or Report(command="model iii6")
    first_pairs = [("X1", "X3"), ("X1", "X5")]
    report.add("iii6.affine", not affine_failures(first_pairs + [("X1", "X4")]))

    solutions = solve_closure(first_pairs)
    direction = solutions[0] if len(solutions) == 1 else {}
    c = direction.get("c", ZERO)
    normalized = {k: as_scalar(v) / c for k, v in direction.items()} if c else {}
    expected = {"a": as_scalar(1), "b": as_scalar(-1) / 3, "c": as_scalar(1)}
    report.add(
        "iii6.first_conditions",
        normalized == expected,
        witness=str({k: str(v) for k, v in normalized.items()}),
    )

    unit = {k: normalized.get(k, ZERO) for k in UNKNOWNS}
    component = f0_component(unit["a"], unit["b"], unit["c"], "X1", "X4")
    expected_component = element((8, "Z1"), (-12, "Z2")) / 3
    report.add("iii6.x1_x4_component", component == expected_component, witness=str(component))
    forced = solve_closure(first_pairs + [("X1", "X4")])
    report.add("iii6.forces_flat", not forced, witness=str(forced) if forced else None)

    witness = closure_residual(unit["a"], unit["b"], unit["c"], "X1", "X4")
    report.data.update(
        deformation=[f"{s}^* (x) {t}" for s, t in deformation_basis("III", LAMBDA)],
        solution_direction={k: str(v) for k, v in unit.items()},
        x1_x4_component=str(component),
        violation=str(witness),
    )
    return report


__all__ = ["candidate", "closure_residual", "replicate_iii6_obstruction", "solve_closure"]
