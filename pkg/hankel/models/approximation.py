"""
Modelos de datos para aproximaciones racionales y cotas del exponente
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from hankel.utils.serialization import fraction_str


class SandwichStatus(Enum):
    """Resultado de la comprobación del encaje del error"""
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    UNCHECKED = "unchecked"


class Certification(Enum):
    """Cómo se certifica H_l * H_{l+1} != 0"""
    VERIFIED_DIRECT = "verified-direct"
    THEOREM = "theorem"
    UNCHECKED = "unchecked"


@dataclass(frozen=True)
class ApproximationRecord:
    """Un convergente p/q de orden l y profundidad m en base b"""
    l: int
    m: int
    b: int
    p: int
    q: int
    exponent_base: int
    p_reduced: int
    q_reduced: int
    err_lo: Optional[Fraction] = None
    err_hi: Optional[Fraction] = None
    eff_exp: Optional[float] = None
    eff_exp_interval: Optional[Tuple[float, float]] = None
    error_exponent: Optional[int] = None
    sandwich_lo: Optional[Fraction] = None
    sandwich_hi: Optional[Fraction] = None
    sandwich: SandwichStatus = SandwichStatus.UNCHECKED
    m0: Optional[int] = None
    tail_at: Optional[int] = None

    @property
    def scaled_q(self) -> Fraction:
        """q / b^{Y_l k^m}, acotado por constantes positivas"""
        return Fraction(self.q, self.b ** self.exponent_base)

    def to_dict(self) -> Dict[str, Any]:
        def opt(value: Optional[Fraction]) -> Optional[str]:
            return None if value is None else fraction_str(value)

        return {
            "l": self.l,
            "m": self.m,
            "b": self.b,
            "p": str(self.p),
            "q": str(self.q),
            "p_reduced": str(self.p_reduced),
            "q_reduced": str(self.q_reduced),
            "err_lo": opt(self.err_lo),
            "err_hi": opt(self.err_hi),
            "eff_exp": self.eff_exp,
            "eff_exp_interval": list(self.eff_exp_interval) if self.eff_exp_interval else None,
            "error_exponent": self.error_exponent,
            "sandwich_lo": opt(self.sandwich_lo),
            "sandwich_hi": opt(self.sandwich_hi),
            "sandwich": self.sandwich.value,
            "m0": self.m0,
            "tail_at": self.tail_at,
        }


@dataclass(frozen=True)
class ExponentBound:
    """Cota superior del exponente de irracionalidad"""
    label: str
    rho: Fraction
    delta: Fraction
    mu_bound: Fraction
    certification: Certification = Certification.UNCHECKED
    l: Optional[int] = None
    L: Optional[int] = None
    window: Optional[Tuple[int, int]] = None
    epsilon: Optional[Fraction] = None
    theta: Optional[Fraction] = None
    admissible: List[int] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def mu_reported(self) -> Fraction:
        """Todo irracional tiene exponente >= 2"""
        return max(self.mu_bound, Fraction(2))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "label": self.label,
            "rho": fraction_str(self.rho),
            "delta": fraction_str(self.delta),
            "mu_bound": fraction_str(self.mu_bound),
            "mu_bound_float": float(self.mu_bound),
            "mu_reported": fraction_str(self.mu_reported),
            "certification": self.certification.value,
            "notes": list(self.notes),
        }
        if self.l is not None:
            data["l"] = self.l
        if self.L is not None:
            data["L"] = self.L
            data["window"] = list(self.window) if self.window else None
            data["epsilon"] = fraction_str(self.epsilon) if self.epsilon is not None else None
            data["admissible_count"] = len(self.admissible)
        if self.theta is not None:
            data["theta"] = fraction_str(self.theta)
        return data
