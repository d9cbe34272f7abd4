"""
Exponente efectivo -log|xi - p/q| / log q con precisión extendida
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from mpmath import mp

from hankel.config import config
from hankel.exceptions import PreconditionError
from hankel.models.approximation import ApproximationRecord


@dataclass(frozen=True)
class EffectiveExponent:
    """Valor central y encierro del exponente efectivo"""
    value: float
    lo: float
    hi: float

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "lo": self.lo, "hi": self.hi}


def _log_bounds(value: Fraction, dps: int) -> Tuple[Any, Any]:
    """
    Cotas de log(value) con el error de redondeo propagado

    Se evalúa con dps + 10 dígitos y se ensancha en 10^{-dps} relativo.
    """
    numerator, denominator = value.numerator, value.denominator
    with mp.workdps(dps + 10):
        center = mp.log(mp.mpf(numerator)) - mp.log(mp.mpf(denominator))
        margin = (abs(center) + 1) * mp.mpf(10) ** (-dps)
        return center - margin, center + margin


def effective_exponent(rec: ApproximationRecord, dps: Optional[int] = None) -> EffectiveExponent:
    """
    -log(err_mid) / log(q) y su encierro [-log err_hi / log q, -log err_lo / log q]

    Args:
        rec: Registro con el error ya encerrado
        dps: Dígitos decimales de trabajo

    Raises:
        PreconditionError: Si err_lo <= 0 o q < 2
    """
    if rec.err_lo is None or rec.err_hi is None or rec.err_lo <= 0:
        raise PreconditionError("El exponente efectivo requiere err_lo > 0", {"l": rec.l, "m": rec.m})
    if rec.q < 2:
        raise PreconditionError("El exponente efectivo requiere q >= 2", {"q": str(rec.q)})
    dps = dps or config.irrationality.log_dps
    mid = (rec.err_lo + rec.err_hi) / 2
    q_lo, q_hi = _log_bounds(Fraction(rec.q), dps)
    mid_lo, mid_hi = _log_bounds(mid, dps)
    hi_lo, hi_hi = _log_bounds(rec.err_hi, dps)
    lo_lo, lo_hi = _log_bounds(rec.err_lo, dps)
    with mp.workdps(dps + 10):
        value = -(mid_lo + mid_hi) / 2 / ((q_lo + q_hi) / 2)
        # log q > 0: basta recorrer los extremos
        lower = min(-hi_hi / q_lo, -hi_hi / q_hi)
        upper = max(-lo_lo / q_lo, -lo_lo / q_hi)
        return EffectiveExponent(
            value=float(value),
            lo=math.nextafter(float(lower), -math.inf),
            hi=math.nextafter(float(upper), math.inf),
        )
