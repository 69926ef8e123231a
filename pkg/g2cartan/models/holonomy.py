"""Holonomy of an algebraic model and the almost-Einstein scales it preserves."""

from itertools import combinations
from typing import Dict, List, Optional

from ..algebra.linalg import LinearCoordinates, Vector
from ..core.g2 import G2Element, bracket
from ..core.parabolic import COSET
from ..core.rep7 import DIM, rational_matrix
from ..errors import G2CartanError
from .catalog import AlgebraicModel
from .lie import StructureTable, structure_from_basis

MAX_STEPS = 14


class HolonomySubspace:
    """hol = hol^k once hol^k = hol^(k-1) + [f, hol^(k-1)] stops growing."""

    def __init__(self, initial: List[G2Element], basis: List[G2Element], steps: int) -> None:
        self.initial = initial
        self.basis = basis
        self.steps = steps

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: G2Element) -> bool:
        return LinearCoordinates([b.to_vector() for b in self.basis]).contains(x.to_vector())

    def structure(self) -> StructureTable:
        names = [f"h{k}" for k in range(self.dim)]
        return structure_from_basis(self.basis, names, bracket, lambda x: x.to_vector())

    def tag(self) -> str:
        """Recognition by dimension, Killing nondegeneracy and nilpotency only."""
        if self.dim == 0:
            return "trivial"
        if self.dim == 14:
            return "g2"
        table = self.structure()
        if self.dim == 8:
            if table.killing_determinant():
                return "sl3"
            return "non-semisimple, see signature table"
        if self.dim == 5 and table.is_two_step_nilpotent():
            if table.center_dim() == 1 and table.derived_dim() == 1:
                return "heis5"
        return "unrecognized"

    def __repr__(self) -> str:
        return f"HolonomySubspace(dim={self.dim}, steps={self.steps})"


def _grow(span: LinearCoordinates, basis: List[G2Element], x: G2Element) -> bool:
    if x and span.add(x.to_vector()):
        basis.append(x)
        return True
    return False


def holonomy(model: AlgebraicModel) -> HolonomySubspace:
    """Stabilized holonomy subspace; needs concrete parameters."""
    if model.formal:
        raise G2CartanError("holonomy needs concrete parameter values", witness=model.params)
    span = LinearCoordinates([])
    basis: List[G2Element] = []
    for a, b in combinations(COSET, 2):
        _grow(span, basis, model.curvature.value(a, b))
    initial = list(basis)
    steps = 0
    while steps < MAX_STEPS:
        grew = False
        for x in list(basis):
            for name in model.names:
                grew = _grow(span, basis, bracket(model.basis[name], x)) or grew
        if not grew:
            break
        steps += 1
    return HolonomySubspace(initial, basis, steps)


def invariant_vectors(hol: HolonomySubspace) -> List[Dict[int, object]]:
    """Joint kernel of rho(h) on C^7, in the rational coordinates of the representation."""
    columns: List[Vector] = [{} for _ in range(DIM)]
    for k, h in enumerate(hol.basis):
        for (row, col), value in rational_matrix(h).items():
            if value:
                columns[col][(k, row)] = value
    return [dict(relation) for relation in LinearCoordinates(columns).relations]


def almost_einstein_dim(model: AlgebraicModel, hol: Optional[HolonomySubspace] = None) -> int:
    return len(invariant_vectors(hol or holonomy(model)))
