"""Type definitions for G2Cartan."""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Config(BaseModel):
    """Main application configuration."""

    seed: int = 0
    random_quartics: int = 50
    monotonicity_samples: int = 10
    report_dir: Optional[str] = None


class RootType(str, Enum):
    """Root types of binary quartics."""

    O = "O"  # noqa: E741
    N = "N"
    III = "III"
    D = "D"
    II = "II"
    I = "I"  # noqa: E741


class ModelLabel(str, Enum):
    """Labels of the algebraic model catalog."""

    N7 = "N.7"
    N6 = "N.6"
    D6 = "D.6"
    B0 = "b=0"
    FLAT = "flat"


class IsotropyCase(str, Enum):
    """Isotropy types for so(1,3) models."""

    H = "H"
    C = "C"


class Check(BaseModel):
    """Outcome of a single verification."""

    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    count: Optional[int] = None
    witness: Optional[str] = None


class Report(BaseModel):
    """Deterministic machine-readable result of a command."""

    command: str
    checks: List[Check] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
    ext: Optional[str] = None
    timing: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(
        self,
        name: str,
        passed: bool,
        witness: Optional[str] = None,
        count: Optional[int] = None,
    ) -> bool:
        self.checks.append(Check(name=name, passed=passed, witness=witness, count=count))
        return passed

    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]


class RootDatum(BaseModel):
    """Simple roots, positive roots, Cartan matrix and fundamental weights of G2."""

    simple_roots: List[Tuple[int, int]]
    positive_roots: List[Tuple[int, int]]
    cartan_matrix: List[List[int]]
    fundamental_weights: List[Tuple[int, int]]
