"""
Convergentes p_{l,m}/q_{l,m} y encaje riguroso del error
"""
import dataclasses
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from hankel.config import config
from hankel.exceptions import (
    DegenerateEvaluationError,
    DegenerateOrderError,
    DomainError,
    InternalConsistencyError,
    PrecisionExhaustedError,
    PreconditionError,
)
from hankel.irrationality.enclosure import EnclosureCache, get_enclosure_cache
from hankel.irrationality.iteration import IteratedEquation, iterate_equation
from hankel.models.approximation import ApproximationRecord, SandwichStatus
from hankel.models.pade import PadeApproximant
from hankel.pade.approximant import approximant_series, integer_cleared
from hankel.pade.polynomial import IntPoly
from hankel.pade.series import RatSeries
from hankel.sequences.functional_equation import FunctionalEquation
from hankel.sequences.generators import coefficient_bound, prefix

logger = logging.getLogger(__name__)

# m0 se busca hasta esta profundidad
_M0_SEARCH_LIMIT = 64
# Tope de k^m en la búsqueda de m0
_M0_MAX_EXPONENT = 1 << 16


def _require_h(ap: PadeApproximant) -> None:
    if ap.h == 0:
        raise DegenerateOrderError(
            f"h_{ap.k} = 0: el encaje del error requiere h_l != 0",
            {"l": ap.k},
        )


def _require_sequence(fe: FunctionalEquation) -> None:
    if fe.sequence is None:
        raise PreconditionError("La ecuación funcional no tiene sucesión asociada")


def convergent_polynomials(
    fe: FunctionalEquation,
    ap: PadeApproximant,
    m: int,
    iterated: Optional[IteratedEquation] = None,
) -> Tuple[IntPoly, IntPoly]:
    """
    P_{l,m} = A_m Q_l(x^{k^m}) + B_m C_m P_l(x^{k^m}), Q_{l,m} = B_m Q_l(x^{k^m})

    P_l y Q_l se usan con denominadores limpios (Q_l(0) > 0).
    """
    iterated = iterated or iterate_equation(fe, m)
    P_l, Q_l = integer_cleared(ap)
    top = fe.k ** m
    Q_shift = Q_l.compose_power(top)
    P_lm = iterated.A_m * Q_shift + iterated.B_m * iterated.C_m * P_l.compose_power(top)
    Q_lm = iterated.B_m * Q_shift
    l = ap.k
    bound_p = fe.Y(l) * top
    bound_q = (fe.beta + l) * top
    if not P_lm.is_zero() and P_lm.degree > bound_p:
        raise InternalConsistencyError(f"deg P_{{l,m}} supera {bound_p}", {"l": l, "m": m})
    if Q_lm.degree > bound_q:
        raise InternalConsistencyError(f"deg Q_{{l,m}} supera {bound_q}", {"l": l, "m": m})
    return P_lm, Q_lm


def build_convergent(
    fe: FunctionalEquation,
    ap: PadeApproximant,
    m: int,
    b: int,
    iterated: Optional[IteratedEquation] = None,
) -> ApproximationRecord:
    """
    Construye p = b^{Y_l k^m} P_{l,m}(1/b) y q = b^{Y_l k^m} Q_{l,m}(1/b)

    Args:
        fe: Ecuación funcional
        ap: Aproximante de Padé de orden l
        m: Profundidad (>= 1)
        b: Base (>= 2)

    Returns:
        ApproximationRecord sin encaje de error (q > 0, par sin reducir)
    """
    if b < 2:
        raise DomainError("La base debe ser >= 2", {"b": b})
    if m < 1:
        raise DomainError("La profundidad debe ser >= 1", {"m": m})
    _require_h(ap)
    P_lm, Q_lm = convergent_polynomials(fe, ap, m, iterated)
    top = fe.Y(ap.k) * fe.k ** m
    p = P_lm.evaluate_scaled(b, top)
    q = Q_lm.evaluate_scaled(b, top)
    if q == 0:
        raise DegenerateEvaluationError("Q_{l,m}(1/b) = 0", {"l": ap.k, "m": m, "b": b})
    if q < 0:
        p, q = -p, -q
    divisor = math.gcd(p, q)
    return ApproximationRecord(
        l=ap.k,
        m=m,
        b=b,
        p=p,
        q=q,
        exponent_base=top,
        p_reduced=p // divisor,
        q_reduced=q // divisor,
    )


def pade_error_series(fe: FunctionalEquation, ap: PadeApproximant, order: int) -> RatSeries:
    """R = f - P_l/Q_l al orden pedido"""
    _require_sequence(fe)
    values = RatSeries.from_sequence(prefix(fe.sequence, order))
    return values - approximant_series(ap, order)


def check_composed_error(fe: FunctionalEquation, ap: PadeApproximant, m: int, order: int) -> Optional[int]:
    """
    Compara f - P_{l,m}/Q_{l,m} con C_m(x) R(x^{k^m}) hasta `order`

    Returns:
        Primer índice distinto, o None si coinciden
    """
    _require_sequence(fe)
    iterated = iterate_equation(fe, m)
    P_lm, Q_lm = convergent_polynomials(fe, ap, m, iterated)
    values = RatSeries.from_sequence(prefix(fe.sequence, order))
    left = values - RatSeries.from_rational(P_lm, Q_lm, order)
    inner = pade_error_series(fe, ap, order).compose_power(fe.k ** m)
    right = RatSeries.from_poly(iterated.C_m, order) * inner
    if left == right:
        return None
    return (left - right).first_nonzero()


def majorant_radius(Q: Sequence[Fraction]) -> Fraction:
    """
    Mayor r = 2^{-t} (t >= 1) con sum_{j >= 1} |q_j| r^j <= 1/2

    Con Q(0) = 1, los coeficientes de 1/Q quedan mayorados por
    r^{-i} / (1 - s(r)).
    """
    if not Q or Q[0] != 1:
        raise PreconditionError("Se requiere Q(0) = 1")
    r = Fraction(1, 2)
    while sum((abs(q) * r ** j for j, q in enumerate(Q) if j), Fraction(0)) > Fraction(1, 2):
        r /= 2
    return r


@dataclass(frozen=True)
class TailBound:
    """
    Cota rigurosa |R(y) - h y^{2l}| <= c(y) y^{2l+1} para 0 < y < radius

    Los coeficientes r_i con i < start + len(exact) son exactos; el resto se
    acota con |u_i| <= coefficient_bound y |[z^i] P/Q| <= K r^{-i}.
    """
    start: int
    exact: Tuple[Fraction, ...]
    coefficient_bound: int
    radius: Fraction
    majorant: Fraction

    def constant(self, y_max: Fraction) -> Fraction:
        """
        c(y_max), válida para todo 0 < y <= y_max

        Raises:
            DomainError: Si y_max >= radius
        """
        y_max = Fraction(y_max)
        if not 0 < y_max < self.radius:
            raise DomainError(
                "y_max debe estar en (0, r)",
                {"y_max": str(y_max), "radius": str(self.radius)},
            )
        exact = sum((value * y_max ** j for j, value in enumerate(self.exact)), Fraction(0))
        depth = len(self.exact)
        ratio = y_max / self.radius
        sequence_tail = self.coefficient_bound * y_max ** depth / (1 - y_max)
        rational_tail = self.majorant / self.radius ** self.start * ratio ** depth / (1 - ratio)
        return exact + sequence_tail + rational_tail


def tail_bound(fe: FunctionalEquation, ap: PadeApproximant, tail_order: Optional[int] = None) -> TailBound:
    """
    Prepara la cota de la cola de R = f - P_l/Q_l

    Se calculan tail_order + start * t coeficientes exactos (r = 2^{-t}),
    de modo que el resto geométrico es despreciable para y <= r/2.
    """
    _require_sequence(fe)
    tail_order = tail_order or config.irrationality.tail_order
    start = 2 * ap.k + 1
    r = majorant_radius(ap.Q)
    depth = tail_order + start * (r.denominator.bit_length() - 1)
    error = pade_error_series(fe, ap, start + depth)
    s = sum((abs(q) * r ** j for j, q in enumerate(ap.Q) if j), Fraction(0))
    majorant = sum((abs(p) * r ** j for j, p in enumerate(ap.P)), Fraction(0)) / (1 - s)
    return TailBound(
        start=start,
        exact=tuple(abs(Fraction(error[i])) for i in range(start, start + depth)),
        coefficient_bound=coefficient_bound(fe.sequence),
        radius=r,
        majorant=majorant,
    )


def tail_constant(
    fe: FunctionalEquation,
    ap: PadeApproximant,
    tail_order: Optional[int] = None,
    y_max: Optional[Fraction] = None,
) -> Fraction:
    """c(l) para 0 < y <= y_max (por defecto r/2)"""
    bound = tail_bound(fe, ap, tail_order)
    return bound.constant(bound.radius / 2 if y_max is None else y_max)


def m0_threshold(fe: FunctionalEquation, ap: PadeApproximant, tail_order: Optional[int] = None) -> int:
    """
    Menor m >= 1 con c(y_m) y_m <= |h_l| / 2, y_m = 2^{-k^m}

    b >= 2 implica b^{-k^m} <= y_m, así que m0 sirve para toda base.

    Raises:
        PrecisionExhaustedError: Si no se alcanza en la búsqueda
    """
    _require_h(ap)
    bound = tail_bound(fe, ap, tail_order)
    half_h = abs(ap.h) / 2
    for m in range(1, _M0_SEARCH_LIMIT + 1):
        if fe.k ** m > _M0_MAX_EXPONENT:
            break
        y = Fraction(1, 2 ** (fe.k ** m))
        if y < bound.radius and bound.constant(y) * y <= half_h:
            logger.debug("m0 = %d para l = %d (r = %s)", m, ap.k, bound.radius)
            return m
    raise PrecisionExhaustedError("No se encontró m0 en el rango de búsqueda", {"l": ap.k})


@dataclass(frozen=True)
class Sandwich:
    """Cotas inferior y superior previstas para |xi - p/q|"""
    exponent: int
    lo: Fraction
    hi: Fraction


def predicted_sandwich(fe: FunctionalEquation, ap: PadeApproximant, m: int, b: int) -> Sandwich:
    """[|h| zeta^m x^E / 2, 3 |h| eta^m x^E] con E = 2l k^m + s (k^m - 1)/(k - 1)"""
    _require_h(ap)
    top = fe.k ** m
    exponent = 2 * ap.k * top + fe.s * (top - 1) // (fe.k - 1)
    x_power = Fraction(1, b ** exponent)
    magnitude = abs(ap.h)
    return Sandwich(
        exponent=exponent,
        lo=magnitude / 2 * fe.zeta(b) ** m * x_power,
        hi=3 * magnitude * fe.eta ** m * x_power,
    )


def _initial_tail(b: int, target: Fraction, start: int) -> int:
    # Menor N >= start con b^{1-N}/(b-1) < target
    tail = max(start, 1)
    while Fraction(1, b ** (tail - 1) * (b - 1)) >= target:
        tail += 1
    return tail


def error_bracket(
    rec: ApproximationRecord,
    fe: FunctionalEquation,
    ap: PadeApproximant,
    cache: Optional[EnclosureCache] = None,
    tail_order: Optional[int] = None,
    max_tail_at: Optional[int] = None,
    m0: Optional[int] = None,
) -> ApproximationRecord:
    """
    Encierra |xi - p/q| y lo compara con el encaje previsto

    El encierro de xi se afina hasta que su ancho es menor que la mitad de
    la cota inferior prevista; si el intervalo de error aún contiene 0 se
    duplica el número de términos hasta max_tail_at.

    Returns:
        Copia del registro con err_lo, err_hi y el estado del encaje

    Raises:
        DegenerateOrderError: Si h_l = 0
        PrecisionExhaustedError: Si el intervalo sigue conteniendo 0
    """
    _require_h(ap)
    _require_sequence(fe)
    cache = cache or get_enclosure_cache()
    max_tail_at = max_tail_at or config.irrationality.max_tail_at
    sandwich = predicted_sandwich(fe, ap, rec.m, rec.b)
    m0 = m0 if m0 is not None else m0_threshold(fe, ap, tail_order)
    approximation = Fraction(rec.p, rec.q)

    tail_at = _initial_tail(rec.b, sandwich.lo / 2, sandwich.exponent + 1)
    while True:
        if tail_at > max_tail_at:
            raise PrecisionExhaustedError(
                "El intervalo de |xi - p/q| contiene 0; aumente tail_at",
                {"l": rec.l, "m": rec.m, "max_tail_at": max_tail_at},
            )
        enclosure = cache.get(fe.sequence, rec.b, tail_at)
        low, high = enclosure.lo - approximation, enclosure.hi - approximation
        if low > 0:
            err_lo, err_hi = low, high
            break
        if high < 0:
            err_lo, err_hi = -high, -low
            break
        logger.info("Afinando el encierro de xi: %d -> %d términos", tail_at, 2 * tail_at)
        tail_at *= 2

    if rec.m < m0:
        status = SandwichStatus.NOT_APPLICABLE
    elif sandwich.lo <= err_lo and err_hi <= sandwich.hi:
        status = SandwichStatus.PASS
    else:
        status = SandwichStatus.FAIL
        logger.warning("El error de l=%d, m=%d sale del encaje previsto", rec.l, rec.m)
    return dataclasses.replace(
        rec,
        err_lo=err_lo,
        err_hi=err_hi,
        error_exponent=sandwich.exponent,
        sandwich_lo=sandwich.lo,
        sandwich_hi=sandwich.hi,
        sandwich=status,
        m0=m0,
        tail_at=enclosure.tail_at,
    )
