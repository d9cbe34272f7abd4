"""
Iteración de la ecuación funcional: f = A_m/B_m + C_m f(x^{k^m})
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from hankel.exceptions import DomainError, InternalConsistencyError
from hankel.pade.polynomial import IntPoly
from hankel.pade.series import RatSeries
from hankel.sequences.functional_equation import FunctionalEquation
from hankel.sequences.generators import prefix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IteratedEquation:
    """A_m, B_m, C_m de la ecuación iterada m veces"""
    m: int
    k: int
    A_m: IntPoly
    B_m: IntPoly
    C_m: IntPoly
    series_checked_to: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "k": self.k,
            "deg_A": self.A_m.degree if not self.A_m.is_zero() else None,
            "deg_B": self.B_m.degree,
            "deg_C": self.C_m.degree,
            "series_checked_to": self.series_checked_to,
        }


def _check_degree(name: str, poly: IntPoly, bound: int) -> None:
    if not poly.is_zero() and poly.degree > bound:
        raise InternalConsistencyError(
            f"deg {name} = {poly.degree} supera la cota {bound}",
            {"degree": poly.degree, "bound": bound},
        )


def iterate_equation(fe: FunctionalEquation, m: int, check_order: Optional[int] = None) -> IteratedEquation:
    """
    Itera la ecuación funcional m veces

    A_m se obtiene de la suma cerrada con divisiones exactas y se contrasta
    con la recursión A_{j+1} = A_j B(y_j) + C_j A(y_j) B_j, y_j = x^{k^j}.
    Si la ecuación tiene sucesión asociada se verifica la identidad de
    series hasta check_order (por defecto 2 deg B_m).

    Args:
        fe: Ecuación funcional
        m: Profundidad (>= 1)
        check_order: Orden de la comprobación de series

    Raises:
        InternalConsistencyError: Si falla una división exacta o una cota
    """
    if m < 1:
        raise DomainError("La profundidad de iteración debe ser >= 1", {"m": m})
    k = fe.k
    powers = [k ** j for j in range(m)]
    B_parts = [fe.B.compose_power(p) for p in powers]
    C_parts = [fe.C.compose_power(p) for p in powers]

    B_m = IntPoly.constant(1)
    C_m = IntPoly.constant(1)
    for B_j, C_j in zip(B_parts, C_parts):
        B_m = B_m * B_j
        C_m = C_m * C_j

    A_m = fe.A * B_m.exact_div(fe.B)
    C_prefix = IntPoly.constant(1)
    for j in range(1, m):
        C_prefix = C_prefix * C_parts[j - 1]
        A_m = A_m + C_prefix * fe.A.compose_power(powers[j]) * B_m.exact_div(B_parts[j])

    # Recursión como contraste independiente
    A_rec, B_rec, C_rec = fe.A, fe.B, fe.C
    for j in range(1, m):
        A_rec = A_rec * B_parts[j] + C_rec * fe.A.compose_power(powers[j]) * B_rec
        B_rec = B_rec * B_parts[j]
        C_rec = C_rec * C_parts[j]
    if (A_rec, B_rec, C_rec) != (A_m, B_m, C_m):
        raise InternalConsistencyError("La recursión no coincide con la forma cerrada", {"m": m})

    top = k ** m
    _check_degree("A_m", A_m, (fe.alpha + fe.beta + fe.gamma) * top)
    _check_degree("B_m", B_m, fe.beta * top)
    _check_degree("C_m", C_m, fe.gamma * top)

    checked = None
    if fe.sequence is not None:
        order = check_order if check_order is not None else max(2 * int(B_m.degree), 16)
        values = RatSeries.from_sequence(prefix(fe.sequence, order))
        rhs = RatSeries.from_rational(A_m, B_m, order) + RatSeries.from_poly(C_m, order) * values.compose_power(top)
        if rhs != values:
            index = (rhs - values).first_nonzero()
            raise InternalConsistencyError(
                "f != A_m/B_m + C_m f(x^{k^m})",
                {"m": m, "first_mismatch": index},
            )
        checked = order
        logger.debug("Ecuación iterada m=%d verificada hasta orden %d", m, order)
    return IteratedEquation(m, k, A_m, B_m, C_m, checked)
