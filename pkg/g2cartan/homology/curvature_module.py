"""The 24-dimensional curvature module E and its coefficient dictionary.

E is the p-submodule of normal 2-chains generated by phi0 = e10∧e31⊗f01.
Coefficients A1..F~2 of a curvature cochain kappa are taken against the
scaled basis b_k = sigma_k * Phi(u_k) / 192, where u_k are the weight chains
listed in ``WEIGHT_CHAINS``.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console

from ..algebra.linalg import LinearCoordinates
from ..algebra.scalar_tower import ZERO, Scalar
from ..core.g2 import BASIS, G2Element, coroot
from ..core.parabolic import P_LABELS
from ..errors import NotInE
from .complexes import Chain, Cochain, act_chain, lowest_weight_vector, partial_star, to_chain, to_cochain

console = Console(stderr=True)

H01 = "h01"

# (coefficient, slot, slot, value) terms of each printed weight chain
WEIGHT_CHAINS: Dict[str, List[Tuple[int, str, str, str]]] = {
    "A1": [(1, "e10", "e31", "f01")],
    "A2": [(1, "e10", "e32", "f01"), (-1, "e11", "e31", "f01"), (1, "e10", "e31", H01)],
    "A3": [(1, "e10", "e32", H01), (-1, "e11", "e31", H01), (-1, "e10", "e31", "e01"),
           (-1, "e11", "e32", "f01")],
    "A4": [(1, "e11", "e31", "e01"), (-1, "e10", "e32", "e01"), (-1, "e11", "e32", H01)],
    "A5": [(1, "e11", "e32", "e01")],
    "B1": [(1, "e10", "e31", "e10"), (-2, "e21", "e31", "f01")],
    "B2": [(1, "e10", "e32", "e10"), (-1, "e11", "e31", "e10"), (-1, "e10", "e31", "e11"),
           (-2, "e21", "e32", "f01"), (-2, "e21", "e31", H01)],
    "B3": [(1, "e11", "e31", "e11"), (-1, "e10", "e32", "e11"), (-1, "e11", "e32", "e10"),
           (2, "e21", "e31", "e01"), (-2, "e21", "e32", H01)],
    "B4": [(1, "e11", "e32", "e11"), (2, "e21", "e32", "e01")],
    "C1": [(-1, "e10", "e31", "e21"), (-2, "e21", "e31", "e10"), (3, "e31", "e32", "f01")],
    "C2": [(1, "e11", "e31", "e21"), (-1, "e10", "e32", "e21"), (-2, "e21", "e32", "e10"),
           (2, "e21", "e31", "e11"), (3, "e31", "e32", H01)],
    "C3": [(1, "e11", "e32", "e21"), (2, "e21", "e32", "e11"), (-3, "e31", "e32", "e01")],
    "D1": [(1, "e10", "e32", "e31"), (-1, "e11", "e31", "e31"), (-2, "e10", "e31", "e32"),
           (6, "e21", "e31", "e21"), (9, "e31", "e32", "e10")],
    "D2": [(1, "e11", "e31", "e32"), (-1, "e10", "e32", "e32"), (-2, "e11", "e32", "e31"),
           (6, "e21", "e32", "e21"), (-9, "e31", "e32", "e11")],
    "E": [(1, "e21", "e31", "e32"), (-1, "e21", "e32", "e31"), (-3, "e31", "e32", "e21")],
    "D~1": [(1, "e10", "e31", "e31")],
    "D~2": [(1, "e10", "e32", "e31"), (-1, "e11", "e31", "e31"), (1, "e10", "e31", "e32")],
    "D~3": [(1, "e10", "e32", "e32"), (-1, "e11", "e31", "e32"), (-1, "e11", "e32", "e31")],
    "D~4": [(-1, "e11", "e32", "e32")],
    "E~1": [(1, "e21", "e31", "e31")],
    "E~2": [(1, "e21", "e32", "e31"), (1, "e21", "e31", "e32")],
    "E~3": [(1, "e21", "e32", "e32")],
    "F~1": [(1, "e31", "e32", "e31")],
    "F~2": [(1, "e31", "e32", "e32")],
}  # fmt: skip

NAMES: Tuple[str, ...] = tuple(WEIGHT_CHAINS)

COMPONENT_DIMS: Dict[str, int] = {
    "A": 5, "B": 4, "C": 3, "D": 2, "D~": 4, "E": 1, "E~": 3, "F~": 2,
}  # fmt: skip
HOMOGENEITY: Dict[str, int] = {
    "A": 4, "B": 5, "C": 6, "D": 7, "D~": 7, "E": 8, "E~": 8, "F~": 9,
}  # fmt: skip
SIGMA: Dict[str, Fraction] = {"D": Fraction(1, 3), "E~": Fraction(-2), "F~": Fraction(3)}
NORMALIZER = 192


def component_of(name: str) -> str:
    return name.rstrip("0123456789")


def sigma(name: str) -> Scalar:
    return Scalar(SIGMA.get(component_of(name), Fraction(1)))


def _value(label: str) -> G2Element:
    return coroot("01") if label == H01 else BASIS[label]


def weight_chain(name: str) -> Chain:
    total = Chain(2)
    for c, a, b, v in WEIGHT_CHAINS[name]:
        total = total + Chain.term(c, (a, b), _value(v))
    return total


def generate_E() -> List[Chain]:
    """Closure of span{phi0} under the action of the nine p basis vectors."""
    start = lowest_weight_vector()
    span = LinearCoordinates([start.to_vector()])
    generated = [start]
    queue = [start]
    while queue:
        current = queue.pop(0)
        for label in P_LABELS:
            img = act_chain(BASIS[label], current)
            if img and span.add(img.to_vector()):
                generated.append(img)
                queue.append(img)
    return generated


class CurvatureModule:
    """The curvature module E with its printed weight basis and coefficient dictionary."""

    def __init__(self) -> None:
        self.generated = generate_E()
        self.span = LinearCoordinates([c.to_vector() for c in self.generated])
        self.chains: Dict[str, Chain] = {name: weight_chain(name) for name in NAMES}
        self._printed = LinearCoordinates([self.chains[n].to_vector() for n in NAMES])

    @property
    def dim(self) -> int:
        return self.span.dim

    def component_dims(self) -> Dict[str, int]:
        dims: Dict[str, int] = {}
        for name in NAMES:
            dims[component_of(name)] = dims.get(component_of(name), 0) + 1
        return dims

    def unmatched_chains(self) -> List[str]:
        """Printed weight chains that fall outside the generated module."""
        return [n for n in NAMES if not self.span.contains(self.chains[n].to_vector())]

    def printed_rank(self) -> int:
        return self._printed.dim

    def homogeneity_mismatches(self) -> List[str]:
        return [
            n
            for n in NAMES
            if self.chains[n].homogeneities() != [HOMOGENEITY[component_of(n)]]
        ]

    def non_normal(self) -> List[int]:
        """Indices of generated chains with nonzero d*."""
        return [k for k, c in enumerate(self.generated) if partial_star(c)]

    def unstable_images(self) -> List[Tuple[str, str]]:
        """(p label, chain name) pairs whose image leaves E."""
        out = []
        for name in NAMES:
            for label in P_LABELS:
                img = act_chain(BASIS[label], self.chains[name])
                if not self.span.contains(img.to_vector()):
                    out.append((label, name))
        return out

    # -- coefficient dictionary ---------------------------------------

    def coefficient_cochain(self, name: str) -> Cochain:
        """b_k = sigma_k * Phi(u_k) / 192."""
        return to_cochain(self.chains[name]) * sigma(name) / NORMALIZER

    def chain_coordinates(self, chain: Chain) -> Optional[Dict[str, Any]]:
        coords = self._printed.coordinates(chain.to_vector())
        if coords is None:
            return None
        return {NAMES[i]: c for i, c in coords.items()}

    def contains(self, kappa: Cochain) -> bool:
        return self.chain_coordinates(to_chain(kappa)) is not None

    def coefficients(self, kappa: Cochain) -> Dict[str, Any]:
        """Coefficients A1..F~2 of kappa = sum A_k b_k; raises NotInE outside E."""
        coords = self.chain_coordinates(to_chain(kappa))
        if coords is None:
            raise NotInE(f"cochain does not lie in E: {kappa}", witness=kappa)
        return {
            name: coords[name] * NORMALIZER / sigma(name) if name in coords else ZERO
            for name in NAMES
        }

    def secondary_coefficients(self, x: G2Element) -> List[List[Any]]:
        """Matrix M with x . b_k = sum_j M[j][k] b_j."""
        size = len(NAMES)
        m = [[ZERO] * size for _ in range(size)]
        for k, name in enumerate(NAMES):
            coords = self.chain_coordinates(act_chain(x, self.chains[name]))
            if coords is None:
                raise NotInE(f"{x} moves {name} out of E")
            for j, other in enumerate(NAMES):
                if other in coords:
                    m[j][k] = sigma(name) * coords[other] / sigma(other)
        return m

    def vertical_variation(self, x: G2Element) -> List[List[Any]]:
        """-rho(x) on E^* in the coefficient basis."""
        return [[-c for c in row] for row in self.secondary_coefficients(x)]

    def vertical_variation_forms(self, x: G2Element) -> List[str]:
        """Each output coefficient as a linear form in A1..F~2."""
        return [linear_form(row) for row in self.vertical_variation(x)]


def linear_form(row: List[Any]) -> str:
    terms = []
    for name, c in zip(NAMES, row):
        if not c:
            continue
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}*{name}")
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


@lru_cache(maxsize=None)
def curvature_module() -> CurvatureModule:
    console.print("🧮 Generating the curvature module E...")
    return CurvatureModule()


def raising_ladder(steps: int = 5) -> List[Chain]:
    """phi0, e01.phi0, e01^2.phi0, ... for the given number of steps."""
    ladder = [lowest_weight_vector()]
    for _ in range(steps):
        ladder.append(act_chain(BASIS["e01"], ladder[-1]))
    return ladder


def quartic_covariants(kappa: Cochain) -> Tuple[Tuple[Any, ...], Dict[Tuple[int, int, int], Any]]:
    """Binary quartic F and ternary quartic G of a cochain in E.

    F is returned on the monomials (y^4, xy^3, x^2y^2, x^3y, x^4) and G as a
    map from exponent triples (i, j, k) of x^i y^j z^k to coefficients.
    """
    a = curvature_module().coefficients(kappa)
    binary = (a["A1"], 4 * a["A2"], 6 * a["A3"], 4 * a["A4"], a["A5"])
    ternary: Dict[Tuple[int, int, int], Any] = {}

    def put(i: int, j: int, k: int, value: Any) -> None:
        if value:
            ternary[(i, j, k)] = ternary.get((i, j, k), ZERO) + value

    for power, value in enumerate(binary):
        put(power, 4 - power, 0, value)
    for power, (name, factor) in enumerate((("B1", 1), ("B2", 3), ("B3", 3), ("B4", 1))):
        put(power, 3 - power, 1, 4 * factor * a[name])
    for power, (name, factor) in enumerate((("C1", 1), ("C2", 2), ("C3", 1))):
        put(power, 2 - power, 2, 6 * factor * a[name])
    put(0, 1, 3, 4 * a["D1"])
    put(1, 0, 3, 4 * a["D2"])
    put(0, 0, 4, a["E"])
    return binary, {key: v for key, v in ternary.items() if v}
