"""The 7-dimensional standard representation of g and its invariant tensors.

Matrices are sparse maps (row, col) -> Scalar, 0-indexed.  Entries carrying
sqrt(2) live in the r = 2 extension; ``rational_matrix`` conjugates them by
diag(1, 1, 1, sqrt(2), 1, 1, 1) into a purely rational form.
"""

from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console

from ..algebra.scalar_tower import ONE, ZERO, Scalar
from ..types import Report
from .g2 import BASIS, LABELS, G2Element, bracket

console = Console(stderr=True)

Matrix = Dict[Tuple[int, int], Any]

ROOT2 = Scalar.root(2)
DIM = 7

# (row, col, coefficient, carries sqrt(2)), 1-indexed as in the usual 7x7 display
_ENTRIES: Dict[str, List[Tuple[int, int, int, bool]]] = {
    "Z1": [(1, 1, 2, False), (2, 2, 1, False), (3, 3, 1, False), (5, 5, -1, False),
           (6, 6, -1, False), (7, 7, -2, False)],
    "Z2": [(1, 1, 1, False), (2, 2, 1, False), (6, 6, -1, False), (7, 7, -1, False)],
    "e10": [(1, 2, 1, False), (3, 4, -1, True), (4, 5, 1, True), (6, 7, -1, False)],
    "e11": [(1, 3, 1, False), (2, 4, 1, True), (4, 6, -1, True), (5, 7, -1, False)],
    "e21": [(1, 4, 1, True), (2, 5, -1, False), (3, 6, 1, False), (4, 7, -1, True)],
    "e31": [(1, 5, 1, False), (3, 7, -1, False)],
    "e32": [(1, 6, 1, False), (2, 7, -1, False)],
    "e01": [(2, 3, 1, False), (5, 6, -1, False)],
    "f10": [(2, 1, 1, False), (4, 3, -1, True), (5, 4, 1, True), (7, 6, -1, False)],
    "f11": [(3, 1, 1, False), (4, 2, 1, True), (6, 4, -1, True), (7, 5, -1, False)],
    "f21": [(4, 1, 1, True), (5, 2, -1, False), (6, 3, 1, False), (7, 4, -1, True)],
    "f31": [(5, 1, 1, False), (7, 3, -1, False)],
    "f32": [(6, 1, 1, False), (7, 2, -1, False)],
    "f01": [(3, 2, 1, False), (6, 5, -1, False)],
}  # fmt: skip

_G_ENTRIES = [(1, 7), (2, 6), (3, 5), (4, 4)]
_PSI_ENTRIES: List[Tuple[Tuple[int, int, int], Scalar]] = [
    ((1, 4, 7), Scalar(1)),
    ((2, 4, 6), Scalar(-1)),
    ((3, 4, 5), Scalar(-1)),
    ((1, 5, 6), ROOT2),
    ((2, 3, 7), ROOT2),
]


def _add_entry(m: Matrix, key: Tuple[int, int], value: Any) -> None:
    total = m.get(key, ZERO) + value
    if total:
        m[key] = total
    else:
        m.pop(key, None)


@lru_cache(maxsize=None)
def _basis_matrix(label: str, rational: bool) -> Tuple[Tuple[Tuple[int, int], Any], ...]:
    entries = []
    for i, j, c, has_root in _ENTRIES[label]:
        value: Any = Scalar(c)
        if has_root:
            if rational:
                # D^-1 M D with D = diag(.., sqrt2 at index 4, ..)
                value = value if i == 4 else value * 2
            else:
                value = value * ROOT2
        entries.append(((i - 1, j - 1), value))
    return tuple(entries)


def rho(x: G2Element, rational: bool = False) -> Matrix:
    """Matrix of x acting on V = C^7."""
    m: Matrix = {}
    for label, c in x.items():
        for key, value in _basis_matrix(label, rational):
            _add_entry(m, key, c * value)
    return m


def rational_matrix(x: G2Element) -> Matrix:
    return rho(x, rational=True)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                _add_entry(out, (i, j), x * y)
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    out = dict(a)
    for key, value in b.items():
        _add_entry(out, key, -value)
    return out


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(m: Matrix) -> Any:
    total: Any = ZERO
    for (i, j), value in m.items():
        if i == j:
            total = total + value
    return total


def apply(m: Matrix, v: Dict[int, Any]) -> Dict[int, Any]:
    out: Dict[int, Any] = {}
    for (i, j), value in m.items():
        if j in v:
            _add_entry(out, i, value * v[j])  # type: ignore[arg-type]
    return out


def metric() -> Matrix:
    """The invariant symmetric form g = 2(v1v7 + v2v6 + v3v5) + v4v4."""
    g: Matrix = {}
    for i, j in _G_ENTRIES:
        g[(i - 1, j - 1)] = ONE
        g[(j - 1, i - 1)] = ONE
    return g


def three_form() -> Dict[Tuple[int, int, int], Scalar]:
    """The invariant 3-form as components on strictly increasing index triples."""
    return {(a - 1, b - 1, c - 1): value for (a, b, c), value in _PSI_ENTRIES}


def _psi(psi: Dict[Tuple[int, int, int], Scalar], a: int, b: int, c: int) -> Any:
    if len({a, b, c}) < 3:
        return ZERO
    triple = [a, b, c]
    sign = 1
    # bubble sort tracking parity
    for _ in range(2):
        for k in range(2):
            if triple[k] > triple[k + 1]:
                triple[k], triple[k + 1] = triple[k + 1], triple[k]
                sign = -sign
    value = psi.get((triple[0], triple[1], triple[2]), ZERO)
    return value if sign > 0 else -value


def metric_defect(m: Matrix) -> Matrix:
    """M^T g + g M, which vanishes iff M preserves g."""
    g = metric()
    transpose = {(j, i): value for (i, j), value in m.items()}
    out = mat_mul(transpose, g)
    for key, value in mat_mul(g, m).items():
        _add_entry(out, key, value)
    return out


def three_form_defect(m: Matrix) -> Dict[Tuple[int, int, int], Any]:
    """Components of the derivation action of M on the 3-form."""
    psi = three_form()
    out: Dict[Tuple[int, int, int], Any] = {}
    for a, b, c in combinations(range(DIM), 3):
        total: Any = ZERO
        for (d, col), value in m.items():
            if col == a:
                total = total + value * _psi(psi, d, b, c)
            if col == b:
                total = total + value * _psi(psi, a, d, c)
            if col == c:
                total = total + value * _psi(psi, a, b, d)
        if total:
            out[(a, b, c)] = -total
    return out


def homomorphism_defect(a: str, b: str) -> Matrix:
    lhs = rho(bracket(BASIS[a], BASIS[b]))
    return mat_sub(lhs, commutator(rho(BASIS[a]), rho(BASIS[b])))


def verify_rep7(report: Optional[Report] = None) -> Report:
    """Homomorphism on all ordered basis pairs, trace-freeness and tensor invariance."""
    report = report or Report(command="verify-rep7")
    failed_pairs = [(a, b) for a in LABELS for b in LABELS if homomorphism_defect(a, b)]
    report.add(
        "rep7.homomorphism",
        not failed_pairs,
        witness=str(failed_pairs[0]) if failed_pairs else None,
        count=len(LABELS) ** 2,
    )
    traced = [label for label in LABELS if trace(rho(BASIS[label]))]
    report.add("rep7.trace_free", not traced, witness=", ".join(traced) or None, count=len(LABELS))
    tensor_failures = []
    for label in LABELS:
        m = rho(BASIS[label])
        if metric_defect(m):
            tensor_failures.append(f"{label}.g")
        if three_form_defect(m):
            tensor_failures.append(f"{label}.Psi")
    report.add(
        "rep7.invariant_tensors",
        not tensor_failures,
        witness=", ".join(tensor_failures) or None,
        count=2 * len(LABELS),
    )
    if failed_pairs or tensor_failures:
        console.print(f"[red]❌ Representation check failed: {failed_pairs or tensor_failures}[/red]")
    return report
