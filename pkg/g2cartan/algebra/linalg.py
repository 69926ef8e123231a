"""Exact sparse linear algebra over the scalar tower.

Vectors are plain dicts mapping hashable coordinate keys to nonzero
coefficients.  Coefficients may be ``Scalar`` or ``ParamPoly``.  Elimination
runs on sympy's ``DomainMatrix`` over the smallest domain holding every
entry: ``QQ_I``, ``QQ<i, s>`` when a square root is adjoined, or the field of
rational functions in the formal parameter.  Reduction of a target vector
against the echelon rows only multiplies and subtracts, so parametric
targets work against any span.
"""

from functools import lru_cache
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from ..errors import IncompatibleExtensions
from .param_poly import ParamPoly
from .scalar_tower import ONE, ZERO, Scalar, as_scalar, root_expr

Vector = Dict[Hashable, Any]
Combination = Dict[int, Any]


def vec_add(x: Vector, y: Vector) -> Vector:
    out = dict(x)
    for key, value in y.items():
        total = out.get(key, ZERO) + value
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def vec_scale(c: Any, x: Vector) -> Vector:
    if not c:
        return {}
    out = {}
    for key, value in x.items():
        product = c * value
        if product:
            out[key] = product
    return out


def vec_sub(x: Vector, y: Vector) -> Vector:
    return vec_add(x, vec_scale(-ONE, y))


def vec_combine(terms: Iterable[Tuple[Any, Vector]]) -> Vector:
    """Sum of coefficient * vector over the given terms."""
    out: Vector = {}
    for coeff, vector in terms:
        out = vec_add(out, vec_scale(coeff, vector))
    return out


@lru_cache(maxsize=None)
def _ground(ext: Optional[Any]) -> Any:
    if ext is None:
        return QQ_I
    return QQ.algebraic_field(sympy.I, root_expr(ext))


class Encoding:
    """Two-way conversion between tower values and one sympy domain."""

    def __init__(self, values: Iterable[Any]) -> None:
        ext = None
        name = None
        for value in values:
            if isinstance(value, ParamPoly):
                if value.is_constant():
                    value = value.constant_value()
                else:
                    if name is not None and name != value.name:
                        raise ValueError(f"cannot mix parameters {name!r} and {value.name!r}")
                    name = value.name
                    continue
            scalar = as_scalar(value)
            if scalar.ext is None:
                continue
            if ext is not None and ext != scalar.ext:
                raise IncompatibleExtensions(
                    f"cannot combine s^2={ext} with s^2={scalar.ext}", witness=scalar
                )
            ext = scalar.ext
        self.ext = ext
        self.name = name
        self.symbol = sympy.Symbol(name) if name else None
        ground = _ground(ext)
        self.domain = ground.frac_field(self.symbol) if self.symbol is not None else ground

    def encode(self, value: Any) -> Any:
        if self.symbol is None and self.ext is None:
            if isinstance(value, ParamPoly):
                value = value.constant_value()
            return as_scalar(value).to_gaussian()
        if not isinstance(value, ParamPoly):
            value = as_scalar(value)
        return self.domain.from_sympy(value.to_sympy())

    def decode(self, element: Any) -> Any:
        if self.symbol is None and self.ext is None:
            return Scalar.from_gaussian(element)
        expr = self.domain.to_sympy(element)
        if self.symbol is None or not expr.has(self.symbol):
            return Scalar.from_sympy(expr, self.ext)
        numerator, denominator = sympy.fraction(sympy.cancel(expr))
        if denominator.has(self.symbol):
            raise ValueError(f"{expr} is not polynomial in {self.name}")
        return ParamPoly.from_sympy(sympy.expand(numerator / denominator), self.name or "a")

    def matrix(self, rows: Sequence[Dict[int, Any]], shape: Tuple[int, int]) -> DomainMatrix:
        """Sparse DomainMatrix from {row: {col: value}} data."""
        data = {
            i: {j: self.encode(v) for j, v in row.items() if v}
            for i, row in enumerate(rows)
        }
        return DomainMatrix({i: r for i, r in data.items() if r}, shape, self.domain)

    def entries(self, matrix: DomainMatrix) -> Dict[int, Dict[int, Any]]:
        return {
            i: {j: self.decode(v) for j, v in row.items()}
            for i, row in matrix.to_sparse().rep.items()
        }


class LinearCoordinates:
    """Fully reduced row echelon form of a list of vectors.

    Each stored row has a unit pivot that vanishes in every other row, and
    remembers how it combines the original vectors.  Pivot keys follow the
    given order, or the natural order of the keys.
    """

    def __init__(
        self,
        vectors: Sequence[Vector],
        order: Optional[Callable[[Hashable], Any]] = None,
    ) -> None:
        self._order = order
        self._vectors: List[Vector] = []
        self._independent: List[int] = []
        self._relations: List[Combination] = []
        self._rows: Optional[List[Tuple[Hashable, Vector, Combination]]] = None
        self.extend(vectors)

    @property
    def dim(self) -> int:
        return len(self._independent)

    @property
    def independent(self) -> List[int]:
        """Indices of the input vectors that were independent of their predecessors."""
        return list(self._independent)

    @property
    def relations(self) -> List[Combination]:
        """One linear relation sum(c_i v_i) = 0 per dependent input vector."""
        return [dict(r) for r in self._relations]

    @property
    def pivots(self) -> List[Hashable]:
        return [pivot for pivot, _, _ in self._echelon()]

    def _keys(self, vectors: Iterable[Vector]) -> List[Hashable]:
        keys = {key for vector in vectors for key in vector}
        return sorted(keys, key=self._order) if self._order else sorted(keys)

    def extend(self, vectors: Sequence[Vector]) -> List[bool]:
        """Append vectors; for each, whether it enlarged the span."""
        start = len(self._vectors)
        vectors = [dict(v) for v in vectors]
        self._vectors.extend(vectors)
        if not vectors:
            return []
        base = list(self._independent)
        columns = [self._vectors[i] for i in base] + vectors
        indices = base + list(range(start, start + len(vectors)))
        keys = self._keys(columns)
        enlarged = [False] * len(vectors)
        if not keys:
            self._relations.extend({index: ONE} for index in indices[len(base):])
            return enlarged
        position = {key: k for k, key in enumerate(keys)}
        encoding = Encoding(v for column in columns for v in column.values())
        rows: List[Dict[int, Any]] = [{} for _ in keys]
        for j, column in enumerate(columns):
            for key, value in column.items():
                rows[position[key]][j] = value
        reduced, pivots = encoding.matrix(rows, (len(keys), len(columns))).rref()
        entries = encoding.entries(reduced)
        pivot_rows = {column: k for k, column in enumerate(pivots)}
        for j in range(len(base), len(columns)):
            if j in pivot_rows:
                self._independent.append(indices[j])
                enlarged[j - len(base)] = True
                continue
            relation: Combination = {indices[j]: ONE}
            for column, k in pivot_rows.items():
                c = entries.get(k, {}).get(j)
                if c:
                    relation[indices[column]] = -c
            self._relations.append(relation)
        if any(enlarged):
            self._rows = None
        return enlarged

    def add(self, vector: Vector) -> bool:
        """Append a vector; returns True when it enlarged the span."""
        return self.extend([vector])[0]

    def _echelon(self) -> List[Tuple[Hashable, Vector, Combination]]:
        """Reduced rows of [V | 1] for the independent vectors V, cached."""
        if self._rows is not None:
            return self._rows
        vectors = [self._vectors[i] for i in self._independent]
        keys = self._keys(vectors)
        width = len(keys)
        position = {key: k for k, key in enumerate(keys)}
        encoding = Encoding(v for vector in vectors for v in vector.values())
        augmented = []
        for k, vector in enumerate(vectors):
            row = {position[key]: value for key, value in vector.items()}
            row[width + k] = ONE
            augmented.append(row)
        rows: List[Tuple[Hashable, Vector, Combination]] = []
        if vectors:
            reduced, pivots = encoding.matrix(augmented, (len(vectors), width + len(vectors))).rref()
            entries = encoding.entries(reduced)
            for k, column in enumerate(pivots):
                data = entries.get(k, {})
                row_vector = {keys[j]: c for j, c in data.items() if j < width}
                combo = {self._independent[j - width]: c for j, c in data.items() if j >= width}
                rows.append((keys[column], row_vector, combo))
        self._rows = rows
        return rows

    def reduce(self, vector: Vector) -> Tuple[Vector, Combination]:
        """Return (residual, combo) with vector = residual + sum(combo[i] * v_i)."""
        residual = dict(vector)
        combo: Combination = {}
        for pivot, row, row_combo in self._echelon():
            c = residual.get(pivot)
            if c is None or not c:
                continue
            residual = vec_sub(residual, vec_scale(c, row))
            for index, value in row_combo.items():
                total = combo.get(index, ZERO) + c * value
                if total:
                    combo[index] = total
                else:
                    combo.pop(index, None)
        return residual, combo

    def contains(self, vector: Vector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def coordinates(self, vector: Vector) -> Optional[Combination]:
        """Coefficients on the input vectors, or None when outside the span."""
        residual, combo = self.reduce(vector)
        if residual:
            return None
        return combo

    def basis(self) -> List[Vector]:
        """The reduced rows, a canonical basis of the span."""
        return [dict(row) for _, row, _ in self._echelon()]


def rank(vectors: Sequence[Vector]) -> int:
    return LinearCoordinates(vectors).dim


def relations(vectors: Sequence[Vector]) -> List[Combination]:
    """Basis of the linear relations among the vectors (the nullspace of their columns)."""
    return LinearCoordinates(vectors).relations


def span_contains(span: Sequence[Vector], vectors: Iterable[Vector]) -> bool:
    coords = LinearCoordinates(span)
    return all(coords.contains(v) for v in vectors)


def intersection_dim(first: Sequence[Vector], second: Sequence[Vector]) -> int:
    """dim(U ∩ W) = dim U + dim W - dim(U + W)."""
    return rank(first) + rank(second) - rank(list(first) + list(second))


def determinant(matrix: Sequence[Sequence[Any]]) -> Any:
    """Exact determinant; entries may be Scalars or ParamPolys."""
    n = len(matrix)
    if n == 0:
        return ONE
    encoding = Encoding(e for row in matrix for e in row)
    rows = [{j: e for j, e in enumerate(row)} for row in matrix]
    value = encoding.decode(encoding.matrix(rows, (n, n)).det())
    if encoding.name and not isinstance(value, ParamPoly):
        return ParamPoly([value], encoding.name)
    return value
