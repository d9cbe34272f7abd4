"""
Aproximantes de Padé [k-1/k] y verificación del desarrollo del error
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hankel.exceptions import (
    DegenerateOrderError,
    DomainError,
    InternalConsistencyError,
    LengthError,
)
from hankel.linalg.determinants import det_exact
from hankel.linalg.matrix import IntMatrix
from hankel.models.pade import PadeApproximant
from hankel.pade.polynomial import IntPoly
from hankel.pade.series import RatSeries
from hankel.utils.serialization import fraction_str

logger = logging.getLogger(__name__)


def _require_order(series: RatSeries, required: int, what: str) -> None:
    if series.order < required:
        raise LengthError(
            f"{what}: se necesitan {required} coeficientes, la serie tiene {series.order}",
            required=required,
            available=series.order,
        )


def _common_denominator(values: Sequence[Fraction]) -> int:
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1


def hankel_of_series(series: RatSeries, k: int) -> Fraction:
    """
    H_k: determinante k x k de (c_{i+j})

    Args:
        series: Serie con al menos 2k - 1 coeficientes
        k: Orden

    Returns:
        Determinante racional exacto
    """
    if k == 0:
        return Fraction(1)
    _require_order(series, 2 * k - 1, "hankel_of_series")
    coeffs = [Fraction(series[i]) for i in range(2 * k - 1)]
    scale = _common_denominator(coeffs)
    scaled = [int(c * scale) for c in coeffs]
    matrix = IntMatrix(k, k, tuple(scaled[i + j] for i in range(k) for j in range(k)))
    return Fraction(det_exact(matrix), scale ** k)


def solve_fraction_free(rows: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    """
    Resuelve un sistema cuadrado no singular por eliminación de Bareiss

    Cada fila se escala a enteros; la sustitución final usa racionales.
    """
    size = len(rows)
    augmented: List[List[int]] = []
    for line, value in zip(rows, rhs):
        full = [Fraction(v) for v in line] + [Fraction(value)]
        scale = _common_denominator(full)
        augmented.append([int(v * scale) for v in full])
    previous = 1
    for k in range(size):
        if augmented[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if augmented[i][k] != 0), None)
            if swap is None:
                raise InternalConsistencyError("Sistema singular en el solver de Padé")
            augmented[k], augmented[swap] = augmented[swap], augmented[k]
        pivot = augmented[k][k]
        for i in range(k + 1, size):
            factor = augmented[i][k]
            augmented[i] = [
                (augmented[i][j] * pivot - factor * augmented[k][j]) // previous
                if j > k else 0
                for j in range(size + 1)
            ]
        previous = pivot
    solution: List[Fraction] = [Fraction(0)] * size
    for i in range(size - 1, -1, -1):
        acc = Fraction(augmented[i][size])
        for j in range(i + 1, size):
            acc -= augmented[i][j] * solution[j]
        solution[i] = acc / augmented[i][i]
    return solution


def pade(series: RatSeries, k: int) -> PadeApproximant:
    """
    Aproximante [k-1/k] con Q(0) = 1

    Args:
        series: Serie con al menos 2k + 2 coeficientes
        k: Orden (>= 1)

    Returns:
        PadeApproximant con h = [z^{2k}](f - P/Q)

    Raises:
        DegenerateOrderError: Si H_k(f) = 0
        LengthError: Si la serie es demasiado corta
    """
    if k < 1:
        raise DomainError("El orden de Padé debe ser >= 1", {"k": k})
    _require_order(series, 2 * k + 2, "pade")
    hankel_k = hankel_of_series(series, k)
    if hankel_k == 0:
        raise DegenerateOrderError(f"H_{k} = 0: el aproximante [{k - 1}/{k}] no existe", {"k": k})
    c = [Fraction(series[i]) for i in range(2 * k + 1)]

    def coeff(index: int) -> Fraction:
        return c[index] if index >= 0 else Fraction(0)

    # sum_{i=1..k} q_i c_{j-i} = -c_j para j = k .. 2k-1
    rows = [[coeff(j - i) for i in range(1, k + 1)] for j in range(k, 2 * k)]
    rhs = [-c[j] for j in range(k, 2 * k)]
    q = [Fraction(1)] + solve_fraction_free(rows, rhs)
    p = [sum(q[i] * c[j - i] for i in range(0, min(j, k) + 1)) for j in range(k)]
    h = sum(q[i] * c[2 * k - i] for i in range(0, k + 1))

    hankel_k1 = hankel_of_series(series, k + 1)
    if h != hankel_k1 / hankel_k:
        raise InternalConsistencyError(
            f"h_{k} no coincide con H_{k + 1}/H_{k}",
            {"h": fraction_str(h), "ratio": fraction_str(hankel_k1 / hankel_k)},
        )
    note = None
    if h == 0:
        note = f"H_{k + 1} = 0: el error empieza después de z^{2 * k}"
        logger.warning("Aproximante degenerado en k=%d: %s", k, note)
    return PadeApproximant(
        k=k,
        P=_trim(p),
        Q=_trim(q),
        h=Fraction(h),
        hankel_k=hankel_k,
        hankel_k1=hankel_k1,
        note=note,
    )


def _trim(coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def approximant_series(ap: PadeApproximant, order: int) -> RatSeries:
    """Expansión de P/Q"""
    return RatSeries(ap.P, order) * RatSeries(ap.Q, order).reciprocal()


def error_series(series: RatSeries, ap: PadeApproximant, order: Optional[int] = None) -> RatSeries:
    """f - P/Q al orden pedido (por defecto el de la serie)"""
    order = series.order if order is None else order
    return series.truncate(order) - approximant_series(ap, order)


def integer_cleared(ap: PadeApproximant) -> Tuple[IntPoly, IntPoly]:
    """
    P y Q multiplicados por el mínimo común denominador D

    El Q resultante cumple Q(0) = D > 0.
    """
    scale = _common_denominator(list(ap.P) + list(ap.Q))
    return (
        IntPoly(int(c * scale) for c in ap.P),
        IntPoly(int(c * scale) for c in ap.Q),
    )


def is_equivalent(ap: PadeApproximant, P: Sequence[Fraction], Q: Sequence[Fraction]) -> bool:
    """P' Q = P Q' como polinomios"""
    def product(left: Sequence[Fraction], right: Sequence[Fraction]) -> List[Fraction]:
        result = [Fraction(0)] * (len(left) + len(right))
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                result[i + j] += Fraction(a) * Fraction(b)
        return result

    return _trim(product(P, ap.Q)) == _trim(product(ap.P, Q))


@dataclass(frozen=True)
class ErrorExpansionCheck:
    """Comparación de f - P/Q con h z^{2k}"""
    k: int
    first_nonzero: int
    coefficient_2k: Fraction
    expected: Fraction
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "first_nonzero": self.first_nonzero,
            "coefficient_2k": fraction_str(self.coefficient_2k),
            "expected": fraction_str(self.expected),
            "holds": self.holds,
        }


def verify_error_expansion(series: RatSeries, ap: PadeApproximant) -> ErrorExpansionCheck:
    """
    Expande f - P/Q hasta z^{2k} y lo compara con H_{k+1}/H_k

    Los fallos se reportan en el resultado, no como excepción.
    """
    k = ap.k
    _require_order(series, 2 * k + 2, "verify_error_expansion")
    error = error_series(series, ap, 2 * k + 1)
    first_nonzero = error.first_nonzero()
    coefficient = Fraction(error[2 * k])
    expected = hankel_of_series(series, k + 1) / hankel_of_series(series, k)
    holds = first_nonzero >= 2 * k and coefficient == expected
    return ErrorExpansionCheck(k, first_nonzero, coefficient, expected, holds)
