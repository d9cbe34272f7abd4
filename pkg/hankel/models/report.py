"""
Modelos de datos para configuración de ejecución y reportes
"""
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from hankel import __version__


class CheckStatus(Enum):
    """Estado de una comprobación"""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class OutputFormat(Enum):
    """Formatos de salida"""
    CSV = "csv"
    JSON = "json"
    TEXT = "text"


@dataclass(frozen=True)
class IdentityCheck:
    """Comparación de una identidad en un índice n"""
    identity: int
    n: int
    status: CheckStatus
    lhs: int
    rhs: Optional[int]
    sign_variant: Optional[str]
    mod2: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "n": self.n,
            "status": self.status.value,
            "lhs": str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "sign_variant": self.sign_variant,
            "mod2": self.mod2,
        }


@dataclass
class CheckResult:
    """Resultado de una comprobación con sus testigos"""
    name: str
    status: CheckStatus
    summary: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAIL

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "status": self.status.value,
            "summary": self.summary,
            "witness": self.witness,
        }
        if include_timings and self.seconds is not None:
            data["seconds"] = round(self.seconds, 3)
        return data


@dataclass
class RunConfig:
    """Parámetros de una ejecución de la CLI"""
    subcommand: str
    sequence: str = "paperfolding"
    n: Optional[int] = None
    n_max: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    m_max: Optional[int] = None
    b: int = 2
    L: Optional[int] = None
    ladder: Optional[List[int]] = None
    merged: bool = False
    verify: bool = False
    verify_lemma1: bool = False
    verify_prop2: bool = False
    verify_star: bool = False
    output: Optional[Path] = None
    table_output: Optional[Path] = None
    output_format: OutputFormat = OutputFormat.JSON
    cache_dir: Optional[Path] = None
    jobs: int = 1
    timings: bool = True
    profile: str = "desk"

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "subcommand": self.subcommand,
            "sequence": self.sequence,
            "n": self.n,
            "n_max": self.n_max,
            "k": self.k,
            "l": self.l,
            "m_max": self.m_max,
            "b": self.b,
            "L": self.L,
            "ladder": self.ladder,
            "merged": self.merged,
            "verify": self.verify,
            "verify_lemma1": self.verify_lemma1,
            "verify_prop2": self.verify_prop2,
            "verify_star": self.verify_star,
            "format": self.output_format.value,
            "profile": self.profile,
        }
        # Sólo parámetros que cambian el contenido del reporte
        return {key: value for key, value in data.items() if value is not None}


@dataclass
class VerificationReport:
    """Reporte de una ejecución: configuración, comprobaciones y datos"""
    config: RunConfig
    checks: List[CheckResult] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    @property
    def passed(self) -> bool:
        """Falla si y sólo si falla alguna comprobación"""
        return all(check.passed for check in self.checks)

    @property
    def status(self) -> CheckStatus:
        return CheckStatus.PASS if self.passed else CheckStatus.FAIL

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": self.version,
            "config": self.config.to_dict(),
            "status": self.status.value,
            "checks": [check.to_dict(self.config.timings) for check in self.checks],
            "data": self.data,
        }
