"""
Ecuaciones funcionales f(x) = A(x)/B(x) + C(x) f(x^k)
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from hankel.exceptions import DegenerateEvaluationError, DomainError, PreconditionError
from hankel.models.sequence import SequenceKind, SequenceSpec
from hankel.pade.polynomial import IntPoly
from hankel.pade.series import RatSeries
from hankel.sequences.generators import prefix


@dataclass(frozen=True)
class FunctionalEquation:
    """
    Ecuación funcional de tipo Mahler con coeficientes enteros

    `sequence` es opcional: la sucesión cuya serie generatriz la satisface.
    """
    A: IntPoly
    B: IntPoly
    C: IntPoly
    k: int
    sequence: Optional[SequenceSpec] = None

    def __post_init__(self):
        if self.k < 2:
            raise PreconditionError("k debe ser >= 2", {"k": self.k})
        if self.B[0] == 0:
            raise PreconditionError("B(0) debe ser no nulo")
        if self.C.is_zero():
            raise PreconditionError("C no puede ser idénticamente cero")

    @property
    def alpha(self) -> int:
        return 0 if self.A.is_zero() else int(self.A.degree)

    @property
    def beta(self) -> int:
        return int(self.B.degree)

    @property
    def gamma(self) -> int:
        return int(self.C.degree)

    @property
    def s(self) -> int:
        """Orden de anulación de C en 0"""
        return self.C.valuation()

    @property
    def eta(self) -> int:
        return self.C.max_abs_coeff()

    def Y(self, l: int) -> int:
        """Y_l = alpha + beta + gamma + l"""
        return self.alpha + self.beta + self.gamma + l

    def zeta(self, b: int) -> Fraction:
        """
        |C(1/b)| * b^s, la constante más ajustada para la base b

        Raises:
            DegenerateEvaluationError: Si C(1/b) = 0
        """
        if b < 2:
            raise DomainError("La base debe ser >= 2", {"b": b})
        value = abs(self.C.evaluate(Fraction(1, b)))
        if value == 0:
            raise DegenerateEvaluationError("C(1/b) = 0", {"b": b})
        return value * b ** self.s

    def to_dict(self) -> Dict[str, Any]:
        return {
            "A": list(self.A.coeffs),
            "B": list(self.B.coeffs),
            "C": list(self.C.coeffs),
            "k": self.k,
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "s": self.s,
            "eta": self.eta,
        }


def paperfolding_equation() -> FunctionalEquation:
    """F(z) = 1/(1 - z^4) + z F(z^2)"""
    return FunctionalEquation(
        A=IntPoly([1]),
        B=IntPoly([1, 0, 0, 0, -1]),
        C=IntPoly([0, 1]),
        k=2,
        sequence=SequenceSpec(SequenceKind.PAPERFOLDING_CLOSED),
    )


def thue_morse_equation() -> FunctionalEquation:
    """T(z) = (1 - z) T(z^2) para t_n = (-1)^{s_2(n)}"""
    return FunctionalEquation(
        A=IntPoly(),
        B=IntPoly([1]),
        C=IntPoly([1, -1]),
        k=2,
        sequence=SequenceSpec(SequenceKind.THUE_MORSE_PM1),
    )


def cantor_equation() -> FunctionalEquation:
    """K(z) = (1 + z^2) K(z^3)"""
    return FunctionalEquation(
        A=IntPoly(),
        B=IntPoly([1]),
        C=IntPoly([1, 0, 1]),
        k=3,
        sequence=SequenceSpec(SequenceKind.CANTOR),
    )


@dataclass(frozen=True)
class EquationCheck:
    """Resultado de comparar f con A/B + C f(x^k)"""
    order: int
    holds: bool
    first_mismatch: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "holds": self.holds, "first_mismatch": self.first_mismatch}


def equation_rhs(fe: FunctionalEquation, series: RatSeries) -> RatSeries:
    """A/B + C f(x^k) al orden de la serie"""
    order = series.order
    rational = RatSeries.from_rational(fe.A, fe.B, order)
    return rational + RatSeries.from_poly(fe.C, order) * series.compose_power(fe.k)


def check_functional_equation(spec: SequenceSpec, fe: FunctionalEquation, order: int) -> EquationCheck:
    """
    Verifica coeficiente a coeficiente la ecuación funcional

    Args:
        spec: Sucesión
        fe: Ecuación funcional
        order: Número de coeficientes comparados

    Returns:
        EquationCheck con el primer índice distinto, si existe
    """
    if order < 1:
        raise PreconditionError("El orden debe ser >= 1", {"order": order})
    if fe.B[0] == 0:
        raise PreconditionError("B(0) debe ser no nulo")
    series = RatSeries.from_sequence(prefix(spec, order))
    rhs = equation_rhs(fe, series)
    for index in range(order):
        if series[index] != rhs[index]:
            return EquationCheck(order, False, index)
    return EquationCheck(order, True)
