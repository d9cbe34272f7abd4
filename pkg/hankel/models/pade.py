"""
Modelo de datos del aproximante de Padé [k-1/k]
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from hankel.utils.serialization import fraction_str


@dataclass(frozen=True)
class PadeApproximant:
    """
    Aproximante P/Q de orden k con Q(0) = 1

    P y Q guardan coeficientes racionales exactos, grado menor primero.
    `h` es el coeficiente de z^{2k} en f - P/Q.
    """
    k: int
    P: Tuple[Fraction, ...]
    Q: Tuple[Fraction, ...]
    h: Fraction
    hankel_k: Fraction
    hankel_k1: Fraction
    note: Optional[str] = None

    @property
    def degenerate(self) -> bool:
        """h = 0: el error empieza después de z^{2k}"""
        return self.h == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "P": [fraction_str(c) for c in self.P],
            "Q": [fraction_str(c) for c in self.Q],
            "h_num": str(self.h.numerator),
            "h_den": str(self.h.denominator),
            "hankel_k": fraction_str(self.hankel_k),
            "hankel_k1": fraction_str(self.hankel_k1),
            "degenerate": self.degenerate,
            "note": self.note,
        }
