"""
Series de potencias truncadas con coeficientes racionales exactos
"""
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

from hankel.exceptions import DomainError, LengthError
from hankel.pade.polynomial import IntPoly

Coefficient = Union[int, Fraction]


def _normalize(value: Coefficient) -> Coefficient:
    # Los racionales enteros se guardan como int (aritmética más rápida)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class RatSeries:
    """
    Serie c_0 + c_1 z + ... + c_{N-1} z^{N-1} + O(z^N)

    Todas las operaciones quedan cerradas en el orden de truncación
    (el mínimo de los operandos).
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient], order: int = None):
        values = [_normalize(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("El orden de truncación debe ser >= 0")
            values = (values + [0] * order)[:order]
        self._coeffs: Tuple[Coefficient, ...] = tuple(values)

    @classmethod
    def from_sequence(cls, values: Sequence[int], order: int = None) -> "RatSeries":
        """Serie generatriz de una sucesión (orden = longitud si no se da)"""
        order = len(values) if order is None else order
        if len(values) < order:
            raise LengthError(
                f"La sucesión tiene {len(values)} términos, se necesitan {order}",
                required=order,
                available=len(values),
            )
        return cls(values[:order])

    @classmethod
    def from_poly(cls, poly: IntPoly, order: int) -> "RatSeries":
        return cls(poly.coeffs, order)

    @classmethod
    def from_rational(cls, numerator: IntPoly, denominator: IntPoly, order: int) -> "RatSeries":
        """Expansión de numerator/denominator (requiere denominador(0) != 0)"""
        return cls.from_poly(numerator, order) * cls.from_poly(denominator, order).reciprocal()

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> Tuple[Coefficient, ...]:
        return self._coeffs

    def __getitem__(self, index: int) -> Coefficient:
        if not 0 <= index < len(self._coeffs):
            raise LengthError(
                f"Coeficiente {index} fuera del orden de truncación {self.order}",
                required=index + 1,
                available=self.order,
            )
        return self._coeffs[index]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"RatSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise LengthError(
                f"No se puede extender una serie de orden {self.order} a {order}",
                required=order,
                available=self.order,
            )
        return RatSeries(self._coeffs[:order])

    def first_nonzero(self) -> int:
        """Índice del primer coeficiente no nulo (order si todos son 0)"""
        for index, coeff in enumerate(self._coeffs):
            if coeff:
                return index
        return self.order

    def _nonzero(self) -> List[Tuple[int, Coefficient]]:
        return [(i, c) for i, c in enumerate(self._coeffs) if c]

    def __add__(self, other: "RatSeries") -> "RatSeries":
        order = min(self.order, other.order)
        return RatSeries(_normalize(self._coeffs[i] + other._coeffs[i]) for i in range(order))

    def __neg__(self) -> "RatSeries":
        return RatSeries(-c for c in self._coeffs)

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "RatSeries":
        return RatSeries(_normalize(c * factor) for c in self._coeffs)

    def __mul__(self, other: Union["RatSeries", Coefficient]) -> "RatSeries":
        if isinstance(other, (int, Rational)) and not isinstance(other, RatSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        left, right = self._nonzero(), other._nonzero()
        if len(left) > len(right):
            left, right = right, left
        result: List[Coefficient] = [0] * order
        for i, a in left:
            if i >= order:
                break
            for j, b in right:
                if i + j >= order:
                    break
                result[i + j] += a * b
        return RatSeries(_normalize(c) for c in result)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatSeries":
        """
        1/f al mismo orden

        Raises:
            DomainError: Si c_0 = 0
        """
        if self.order == 0:
            return RatSeries(())
        head = self._coeffs[0]
        if head == 0:
            raise DomainError("El recíproco requiere coeficiente constante no nulo")
        inverse_head = Fraction(1, 1) / head
        tail = [(i, c) for i, c in self._nonzero() if i > 0]
        result: List[Coefficient] = [_normalize(inverse_head)]
        for n in range(1, self.order):
            acc = 0
            for i, c in tail:
                if i > n:
                    break
                acc += c * result[n - i]
            result.append(_normalize(-acc * inverse_head))
        return RatSeries(result)

    def compose_power(self, k: int) -> "RatSeries":
        """f(z^k) al mismo orden"""
        if k < 1:
            raise ValueError("k debe ser >= 1")
        result: List[Coefficient] = [0] * self.order
        for index in range(0, self.order, k):
            result[index] = self._coeffs[index // k]
        return RatSeries(result)

    def is_zero(self) -> bool:
        return not any(self._coeffs)
