"""Abstract Lie algebras given by structure constants on named basis vectors."""

from itertools import combinations
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra.linalg import LinearCoordinates, Vector, determinant, vec_add, vec_scale
from ..algebra.scalar_tower import ZERO
from ..errors import NotClosed

NamedVector = Dict[str, Any]


class StructureTable:
    """Bilinear antisymmetric bracket on span(names)."""

    def __init__(
        self,
        names: Sequence[str],
        brackets: Mapping[Tuple[str, str], Mapping[str, Any]],
    ) -> None:
        self.names: Tuple[str, ...] = tuple(names)
        known = set(self.names)
        table: Dict[Tuple[str, str], NamedVector] = {}
        for (a, b), image in brackets.items():
            unknown = {a, b, *image} - known
            if unknown:
                raise KeyError(f"bracket [{a}, {b}] mentions unknown names {sorted(unknown)}")
            clean = {k: v for k, v in image.items() if v}
            table[(a, b)] = clean
            table[(b, a)] = vec_scale(-1, clean)
        self._table = table

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket_names(self, a: str, b: str) -> NamedVector:
        return self._table.get((a, b), {})

    def bracket(self, x: Mapping[str, Any], y: Mapping[str, Any]) -> NamedVector:
        out: NamedVector = {}
        for a, ca in x.items():
            for b, cb in y.items():
                image = self._table.get((a, b))
                if image:
                    out = vec_add(out, vec_scale(ca * cb, image))
        return out

    def basis_vector(self, name: str) -> NamedVector:
        return {name: 1}

    def jacobi_failures(self) -> List[Tuple[str, str, str]]:
        failures = []
        for a, b, c in combinations(self.names, 3):
            x, y, z = ({a: 1}, {b: 1}, {c: 1})
            total = vec_add(
                vec_add(self.bracket(x, self.bracket(y, z)), self.bracket(y, self.bracket(z, x))),
                self.bracket(z, self.bracket(x, y)),
            )
            if total:
                failures.append((a, b, c))
        return failures

    def ad_matrix(self, x: Mapping[str, Any]) -> List[List[Any]]:
        """Matrix of ad_x in the basis order; column j is ad_x(names[j])."""
        matrix = [[ZERO] * self.dim for _ in range(self.dim)]
        for j, name in enumerate(self.names):
            for i, target in enumerate(self.names):
                value = self.bracket(x, {name: 1}).get(target)
                if value:
                    matrix[i][j] = value
        return matrix

    def killing(self, x: Mapping[str, Any], y: Mapping[str, Any]) -> Any:
        total: Any = ZERO
        for name in self.names:
            total = total + self.bracket(x, self.bracket(y, {name: 1})).get(name, ZERO)
        return total

    def killing_matrix(self) -> List[List[Any]]:
        return [[self.killing({a: 1}, {b: 1}) for b in self.names] for a in self.names]

    def killing_determinant(self) -> Any:
        return determinant(self.killing_matrix())

    def derived_dim(self) -> int:
        images = [self.bracket({a: 1}, {b: 1}) for a, b in combinations(self.names, 2)]
        return LinearCoordinates([v for v in images if v]).dim

    def center_dim(self) -> int:
        columns: List[Vector] = []
        for name in self.names:
            column: Vector = {}
            for other in self.names:
                for key, c in self.bracket({name: 1}, {other: 1}).items():
                    column[(other, key)] = c
            columns.append(column)
        return len(LinearCoordinates(columns).relations)

    def is_two_step_nilpotent(self) -> bool:
        """[f, [f, f]] = 0 with [f, f] nonzero."""
        derived = [self.bracket({a: 1}, {b: 1}) for a, b in combinations(self.names, 2)]
        if not any(derived):
            return False
        return all(not self.bracket({n: 1}, d) for n in self.names for d in derived)


def structure_from_basis(
    vectors: Sequence[Any],
    names: Sequence[str],
    bracket: Callable[[Any, Any], Any],
    to_vector: Callable[[Any], Vector],
    field_check: Optional[Callable[[Any], bool]] = None,
) -> StructureTable:
    """Structure table of span(vectors) under an ambient bracket.

    Raises NotClosed when a bracket leaves the span or, with a field check,
    when a structure constant fails it.
    """
    coords = LinearCoordinates([to_vector(v) for v in vectors])
    if coords.dim != len(vectors):
        raise NotClosed("basis vectors are linearly dependent")
    table: Dict[Tuple[str, str], NamedVector] = {}
    for i, j in combinations(range(len(vectors)), 2):
        image = to_vector(bracket(vectors[i], vectors[j]))
        combo = coords.coordinates(image)
        if combo is None:
            raise NotClosed(
                f"[{names[i]}, {names[j]}] leaves the span", witness=(names[i], names[j])
            )
        entry = {names[k]: c for k, c in combo.items()}
        if field_check is not None:
            bad = [c for c in entry.values() if not field_check(c)]
            if bad:
                raise NotClosed(
                    f"[{names[i]}, {names[j]}] has coefficient {bad[0]} outside the field",
                    witness=(names[i], names[j]),
                )
        table[(names[i], names[j])] = entry
    return StructureTable(names, table)


def table_mismatches(
    algebra: StructureTable,
    images: Mapping[str, NamedVector],
    expected: Mapping[Tuple[str, str], Mapping[str, Any]],
    names: Sequence[str],
) -> List[Tuple[str, str]]:
    """Pairs (u, v) with [image(u), image(v)] != sum c_w image(w) for the expected table."""
    failures = []
    for u, v in combinations(names, 2):
        lhs = algebra.bracket(images[u], images[v])
        rhs: NamedVector = {}
        target = expected.get((u, v))
        if target is None and (v, u) in expected:
            target = {w: -c for w, c in expected[(v, u)].items()}
        for w, c in (target or {}).items():
            rhs = vec_add(rhs, vec_scale(c, images[w]))
        if vec_add(lhs, vec_scale(-1, rhs)):
            failures.append((u, v))
    return failures
