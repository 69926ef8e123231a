"""Binary quartics and the Tanaka prolongation of their annihilators."""

from .quartics import (
    NORMAL_FORMS,
    BinaryQuartic,
    Prolongation,
    annihilator,
    g0_action,
    tanaka_prolong,
)

__all__ = [
    "NORMAL_FORMS",
    "BinaryQuartic",
    "Prolongation",
    "annihilator",
    "g0_action",
    "tanaka_prolong",
]
