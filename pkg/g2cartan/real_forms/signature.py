"""Exact Killing signatures and the isomorphism tags read from them."""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..algebra.scalar_tower import ZERO, as_scalar, real_sign
from ..errors import NotRealMatrix

Signature = Tuple[int, int, int]

# Six-dimensional real forms met by the D.6 models.
MODEL_TYPES: Dict[Signature, str] = {
    (0, 6, 0): "so(3)xso(3)",
    (2, 4, 0): "sl(2,R)xso(3)",
    (3, 3, 0): "so(1,3)",
    (4, 2, 0): "sl(2,R)xsl(2,R)",
    (3, 1, 2): "sl(2,R)xe(1,1)",
    (2, 2, 2): "sl(2,R)xe(2)",
    (0, 4, 2): "so(3)xe(2)",
    (2, 1, 3): "e(1,2)",
    (0, 3, 3): "e(3)",
}

# Eight-dimensional real forms of sl(3,C): split, quasi-compact, compact.
HOLONOMY_TYPES: Dict[Signature, str] = {
    (5, 3, 0): "sl(3,R)",
    (4, 4, 0): "su(1,2)",
    (0, 8, 0): "su(3)",
}


def killing_signature(matrix: Sequence[Sequence[Any]]) -> Signature:
    """[p, q, r] of a real symmetric matrix by symmetric congruence elimination."""
    m: List[List[Any]] = []
    for row in matrix:
        entries = []
        for value in row:
            s = as_scalar(value)
            if not s.is_real():
                raise NotRealMatrix(f"matrix entry {s} is not real", witness=s)
            entries.append(s)
        m.append(entries)
    n = len(m)
    positive = negative = 0
    active = list(range(n))
    while active:
        pivot = next((i for i in active if m[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i != j and m[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j and col_i += col_j makes the diagonal 2 m[i][j]
            for k in range(n):
                m[i][k] = m[i][k] + m[j][k]
            for k in range(n):
                m[k][i] = m[k][i] + m[k][j]
            pivot = i
        d = m[pivot][pivot]
        if real_sign(d) > 0:
            positive += 1
        else:
            negative += 1
        active.remove(pivot)
        for i in active:
            factor = m[i][pivot] / d
            if not factor:
                continue
            for k in range(n):
                m[i][k] = m[i][k] - factor * m[pivot][k]
            for k in range(n):
                m[k][i] = m[k][i] - factor * m[k][pivot]
        for k in range(n):
            m[pivot][k] = m[k][pivot] = ZERO if k != pivot else d
    return positive, negative, n - positive - negative


def model_type(signature: Signature) -> Optional[str]:
    return MODEL_TYPES.get(signature)


def holonomy_type(signature: Signature) -> Optional[str]:
    return HOLONOMY_TYPES.get(signature)


def diagonal(values: Sequence[Any]) -> List[List[Any]]:
    return [[as_scalar(v) if i == j else ZERO for j in range(len(values))] for i, v in enumerate(values)]
