"""The Lie algebra g = Lie(G2), its standard representation and the parabolic p1."""

from .g2 import BASIS, LABELS, G2Element, bracket, element, killing_form
from .parabolic import COSET, G0, P_LABELS, P_PLUS, exp_ad, leading_part

__all__ = [
    "BASIS",
    "COSET",
    "G0",
    "LABELS",
    "P_LABELS",
    "P_PLUS",
    "G2Element",
    "bracket",
    "element",
    "exp_ad",
    "killing_form",
    "leading_part",
]
