"""
Polinomios con coeficientes enteros de precisión arbitraria
"""
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from hankel.exceptions import InternalConsistencyError

# Grado del polinomio cero
ZERO_DEGREE = float("-inf")


class IntPoly:
    """
    Polinomio denso en Z[x], grado menor primero, sin ceros finales

    Los valores son inmutables.
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls([value])

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> int:
        """Orden de anulación en 0 (el polinomio debe ser no nulo)"""
        for index, coeff in enumerate(self._coeffs):
            if coeff:
                return index
        raise ValueError("El polinomio cero no tiene valuación")

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self._coeffs), default=0)

    def __getitem__(self, index: int) -> int:
        return self._coeffs[index] if 0 <= index < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return isinstance(other, IntPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for index, coeff in enumerate(self._coeffs):
            if coeff == 0:
                continue
            if index == 0:
                terms.append(str(coeff))
            else:
                power = "x" if index == 1 else f"x^{index}"
                scalar = "" if coeff == 1 else "-" if coeff == -1 else f"{coeff}*"
                terms.append(f"{scalar}{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def _nonzero(self) -> List[Tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self._coeffs) if c]

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        size = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        # Los factores x^{k^m} son muy dispersos
        left, right = self._nonzero(), other._nonzero()
        if len(left) > len(right):
            left, right = right, left
        result = [0] * (len(self) + len(other) - 1)
        for i, a in left:
            for j, b in right:
                result[i + j] += a * b
        return IntPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        result = IntPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def compose_power(self, k: int) -> "IntPoly":
        """P(x^k)"""
        if k < 1:
            raise ValueError("k debe ser >= 1")
        result = [0] * (k * (len(self) - 1) + 1) if self._coeffs else []
        for index, coeff in enumerate(self._coeffs):
            result[index * k] = coeff
        return IntPoly(result)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """
        Cociente exacto en Z[x]

        Raises:
            InternalConsistencyError: Si hay resto o el cociente no es entero
        """
        if divisor.is_zero():
            raise InternalConsistencyError("División por el polinomio cero")
        remainder = list(self._coeffs)
        lead = divisor._coeffs[-1]
        dlen = len(divisor)
        if len(remainder) < dlen:
            if remainder:
                raise InternalConsistencyError("División polinómica con resto")
            return IntPoly()
        quotient = [0] * (len(remainder) - dlen + 1)
        for shift in range(len(quotient) - 1, -1, -1):
            top = remainder[shift + dlen - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                raise InternalConsistencyError(
                    "Cociente polinómico no entero", {"coefficient": top, "lead": lead}
                )
            quotient[shift] = q
            for index, coeff in enumerate(divisor._coeffs):
                if coeff:
                    remainder[shift + index] -= q * coeff
        if any(remainder):
            raise InternalConsistencyError("División polinómica con resto")
        return IntPoly(quotient)

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        """Evaluación exacta (Horner)"""
        value = Fraction(0)
        for coeff in reversed(self._coeffs):
            value = value * point + coeff
        return value

    def evaluate_scaled(self, base: int, top: int) -> int:
        """
        base^top * P(1/base) como entero

        Args:
            base: Base b >= 2
            top: Exponente, debe ser >= grado

        Returns:
            sum_i c_i * base^(top - i)
        """
        if self._coeffs and top < len(self) - 1:
            raise ValueError("El exponente de escala es menor que el grado")
        value = 0
        # Horner sobre c_0 .. c_top
        for index in range(top + 1):
            value = value * base + self[index]
        return value


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    return IntPoly.constant(value)
