"""The parabolic p = p1: grading by Z1, filtration, leading parts and P+ exponentials."""

from typing import Dict, Hashable, Iterable, List, Sequence, Tuple, TypeVar

from ..errors import NotInFiltrand, NotNilpotent
from .g2 import BASIS, INDEX, LABELS, WEIGHTS, G2Element, bracket, element

K = TypeVar("K", bound=Hashable)
Weight = Tuple[int, int]

DEGREE: Dict[str, int] = {label: WEIGHTS[label][0] for label in LABELS}

G_MINUS: Tuple[str, ...] = ("f10", "f11", "f21", "f31", "f32")
COSET: Tuple[str, ...] = G_MINUS
G0: Tuple[str, ...] = ("f01", "Z1", "Z2", "e01")
P_PLUS: Tuple[str, ...] = ("e10", "e11", "e21", "e31", "e32")
P_LABELS: Tuple[str, ...] = G0 + P_PLUS

# Killing pairing e_st <-> c * f_st^*
PAIRING: Dict[str, int] = {"10": 24, "11": 24, "21": 24, "31": 8, "32": 8}

COSET_ORDER: Dict[str, int] = {label: k for k, label in enumerate(COSET)}
P_PLUS_ORDER: Dict[str, int] = {label: k for k, label in enumerate(P_PLUS)}


def dual_label(label: str) -> str:
    """e_st <-> f_st, fixing the Cartan labels."""
    if label[0] == "e":
        return "f" + label[1:]
    if label[0] == "f":
        return "e" + label[1:]
    return label


def graded_component(k: int) -> List[str]:
    return [label for label in LABELS if DEGREE[label] == k]


def filtrand(i: int) -> List[str]:
    """g^i = sum of g_j for j >= i."""
    return [label for label in LABELS if DEGREE[label] >= i]


def graded_dims() -> List[int]:
    return [len(graded_component(k)) for k in range(-3, 4)]


def filtration_degree(x: G2Element) -> int:
    """Largest i with x in g^i; zero lies in every filtrand and reports 4."""
    if not x:
        return 4
    return min(DEGREE[label] for label in x.support)


def homogeneous_part(x: G2Element, k: int) -> G2Element:
    return G2Element({label: c for label, c in x.items() if DEGREE[label] == k})


def leading_part(x: G2Element, k: int) -> G2Element:
    """gr_k: g^k -> g_k."""
    if filtration_degree(x) < k:
        raise NotInFiltrand(f"{x} does not lie in g^{k}", witness=x)
    return homogeneous_part(x, k)


def project(x: G2Element, labels: Iterable[str]) -> G2Element:
    """Component of x along the given basis labels."""
    keep = set(labels)
    return G2Element({label: c for label, c in x.items() if label in keep})


def grading_failures() -> List[Tuple[str, str]]:
    """Basis pairs violating [g_i, g_j] in g_{i+j}."""
    failures = []
    for a in LABELS:
        for b in LABELS:
            target = DEGREE[a] + DEGREE[b]
            if any(DEGREE[c] != target for c in bracket(BASIS[a], BASIS[b]).support):
                failures.append((a, b))
    return failures


def filtration_failures() -> List[Tuple[int, int]]:
    """(i, j) with [g^i, g^j] not inside g^{i+j}."""
    failures = []
    for i in range(-3, 4):
        for j in range(-3, 4):
            inside = set(filtrand(i + j)) if i + j >= -3 else set(LABELS)
            for a in filtrand(i):
                for b in filtrand(j):
                    if not set(bracket(BASIS[a], BASIS[b]).support) <= inside:
                        failures.append((i, j))
                        break
                else:
                    continue
                break
    return failures


def exp_ad(n: G2Element, x: G2Element, max_steps: int = len(LABELS)) -> G2Element:
    """sum_k ad_n^k(x) / k!, which must terminate within max_steps terms."""
    total = x
    term = x
    for k in range(1, max_steps + 2):
        term = bracket(n, term) / k
        if not term:
            return total
        total = total + term
    raise NotNilpotent(f"ad({n}) is not nilpotent on {x}", witness=n)


# -- weights and weight-restricted subspaces ----------------------------


def is_weight_multiple(weight: Weight, lam: Weight) -> bool:
    """True when weight = r * lam for some integer r (r = 0 included)."""
    p, q = lam
    if weight[0] * q != weight[1] * p:
        return False
    if p:
        return weight[0] % p == 0
    if q:
        return weight[1] % q == 0
    return weight == (0, 0)


def weight_of(x: G2Element) -> Weight:
    """Common weight of a weight vector; raises ValueError for mixed weights."""
    weights = {WEIGHTS[label] for label in x.support}
    if len(weights) != 1:
        raise ValueError(f"{x} is not a weight vector")
    return weights.pop()


def weight_restricted_subspace(weighted: Iterable[Tuple[K, Weight]], lam: Weight) -> List[K]:
    """Basis vectors of W_[lam], the sum of W_{r lam} over all integers r."""
    return [key for key, weight in weighted if is_weight_multiple(weight, lam)]


def hom_weight_basis(
    domain: Sequence[Tuple[str, Weight]], codomain: Sequence[str]
) -> List[Tuple[Tuple[str, str], Weight]]:
    """Weight basis u^* (x) v of Hom(span(domain), span(codomain))."""
    out = []
    for name, w in domain:
        for label in codomain:
            v = WEIGHTS[label]
            out.append(((name, label), (v[0] - w[0], v[1] - w[1])))
    return out


# Graded complements s^perp used by the normalization of each root type.
S_PERP_PRESETS: Dict[str, Tuple[str, ...]] = {
    "N": ("Z1", "e01") + P_PLUS,
    "III": ("Z1", "e01", "f01") + P_PLUS,
    "D": ("Z1", "e01", "f01") + P_PLUS,
}

# Non-negative parts of s = gr(f) beyond g_-, as named weight-zero or root vectors.
S_ZERO_PRESETS: Dict[str, Tuple[Tuple[str, G2Element], ...]] = {
    "N": (("Z2", BASIS["Z2"]), ("f01", BASIS["f01"])),
    "III": (("T", element((1, "Z1"), (-4, "Z2"))),),
    "D": (("T", element((-1, "Z1"), (2, "Z2"))),),
}


def deformation_basis(preset: str, lam: Weight) -> List[Tuple[str, str]]:
    """Weight-restricted normalized deformations (s^* (x) s^perp)_[lam].

    Deformations raise filtration degree and are normalized by P+ to take
    values in s^perp intersected with p+.
    """
    domain = [(name, weight_of(vector)) for name, vector in S_ZERO_PRESETS[preset]]
    domain += [(label, WEIGHTS[label]) for label in G_MINUS]
    codomain = [label for label in S_PERP_PRESETS[preset] if DEGREE[label] > 0]
    return weight_restricted_subspace(hom_weight_basis(domain, codomain), lam)


def sort_labels(labels: Iterable[str]) -> List[str]:
    return sorted(labels, key=INDEX.__getitem__)
