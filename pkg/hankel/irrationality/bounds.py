"""
Cotas superiores del exponente de irracionalidad

Toda la aritmética de rho, delta y mu es racional exacta.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from hankel.exceptions import (
    BoundInapplicableError,
    DomainError,
    EmptyWindowError,
    PreconditionError,
)
from hankel.families.builder import hankel_minors_exact
from hankel.linalg.gf2 import leading_minors_mod2
from hankel.linalg.matrix import BitMatrix
from hankel.linalg.structure import hankel_block
from hankel.models.approximation import ApproximationRecord, Certification, ExponentBound
from hankel.sequences.functional_equation import FunctionalEquation
from hankel.utils.serialization import fraction_str

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, float]


class ResidueAdmissibility:
    """l admisible si l = residue (mod modulus); certificado por teorema"""
    certification = Certification.THEOREM

    def __init__(self, modulus: int, residue: int):
        self.modulus = modulus
        self.residue = residue

    def __call__(self, l: int) -> bool:
        return l % self.modulus == self.residue

    def spot_verify(self, seq: Sequence[int], limit: int) -> List[int]:
        """
        Comprueba H_l H_{l+1} impar para los l admisibles con l + 1 <= limit

        Returns:
            Los l donde falla (vacío si todo concuerda)
        """
        parities = leading_minors_mod2(BitMatrix.from_int_matrix(hankel_block(seq, 0, limit, limit)))
        return [
            l for l in range(1, limit)
            if self(l) and not (parities[l - 1] and parities[l])
        ]

    def describe(self) -> str:
        return f"l = {self.residue} (mod {self.modulus})"


class DirectAdmissibility:
    """l admisible si H_l H_{l+1} != 0 por determinantes exactos"""
    certification = Certification.VERIFIED_DIRECT

    def __init__(self, seq: Sequence[int]):
        self._seq = seq
        self._minors: List[int] = []

    def _ensure(self, order: int) -> None:
        if len(self._minors) < order:
            self._minors = hankel_minors_exact(self._seq, order)

    def __call__(self, l: int) -> bool:
        self._ensure(l + 1)
        return self._minors[l - 1] != 0 and self._minors[l] != 0

    def describe(self) -> str:
        return "H_l H_{l+1} != 0 (directo)"


def paperfolding_admissibility() -> ResidueAdmissibility:
    """H_{10i+1} y H_{10i+2} son impares"""
    return ResidueAdmissibility(10, 1)


def _is_rational(*values: Any) -> bool:
    return all(isinstance(v, Rational) for v in values)


def lemma3_bound(rho: Number, delta: Number, theta: Number) -> Number:
    """
    (1 + rho) theta / delta

    Exacto si las entradas son racionales.

    Raises:
        DomainError: Si delta <= 0 o delta > rho
    """
    if delta <= 0:
        raise DomainError("delta debe ser positivo", {"delta": str(delta)})
    if delta > rho:
        raise DomainError("Se requiere delta <= rho", {"delta": str(delta), "rho": str(rho)})
    if theta == 1:
        logger.info("theta = 1 se acepta como caso límite")
    if _is_rational(rho, delta, theta):
        return (1 + Fraction(rho)) * Fraction(theta) / Fraction(delta)
    return (1 + float(rho)) * float(theta) / float(delta)


def rho_delta(fe: FunctionalEquation, l: int) -> Tuple[Fraction, Fraction]:
    """rho_l = (2l + gamma)/Y_l, delta_l = 2l/Y_l"""
    Y = fe.Y(l)
    return Fraction(2 * l + fe.gamma, Y), Fraction(2 * l, Y)


def theorem1_single_l_bound(fe: FunctionalEquation, l: int, admissibility=None) -> ExponentBound:
    """
    mu <= k rho_l / (delta_l - 1)

    Args:
        fe: Ecuación funcional
        l: Orden de Padé
        admissibility: Predicado que certifica H_l H_{l+1} != 0

    Raises:
        BoundInapplicableError: Si delta_l <= 1
        PreconditionError: Si l no es admisible
    """
    rho, delta = rho_delta(fe, l)
    minimal = fe.alpha + fe.beta + fe.gamma + 1
    if delta <= 1:
        raise BoundInapplicableError(
            f"delta_{l} = {fraction_str(delta)} <= 1; la cota requiere l >= {minimal}",
            {"l": l, "minimal_l": minimal},
        )
    certification = Certification.UNCHECKED
    if admissibility is not None:
        if not admissibility(l):
            raise PreconditionError(
                f"l = {l} no está certificado (H_l H_(l+1) != 0)",
                {"l": l, "rule": admissibility.describe()},
            )
        certification = admissibility.certification
    theta = Fraction(fe.k)
    mu = lemma3_bound(rho - 1, delta - 1, theta)
    return ExponentBound(
        label=f"l={l}",
        rho=rho,
        delta=delta,
        mu_bound=mu,
        certification=certification,
        l=l,
        theta=theta,
        notes=["mu >= 2 para todo irracional"] if mu < 2 else [],
    )


def bound_ladder(fe: FunctionalEquation, start: int, stop: int, step: int, admissibility=None) -> List[ExponentBound]:
    """Cotas para l = start, start + step, ..., <= stop"""
    if step < 1:
        raise DomainError("El paso de la escalera debe ser >= 1", {"step": step})
    return [theorem1_single_l_bound(fe, l, admissibility) for l in range(start, stop + 1, step)]


@dataclass(frozen=True)
class Lemma4Result:
    """Cota analítica y cociente máximo observado en la sucesión mezclada"""
    bound: Fraction
    empirical_max: Fraction
    j0: Optional[int]
    ratios: int
    holds: bool
    merged_head: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound": fraction_str(self.bound),
            "empirical_max": fraction_str(self.empirical_max),
            "j0": self.j0,
            "ratios": self.ratios,
            "holds": self.holds,
        }


def lemma4_ratio(A: Iterable[int], k: int, L: int, R: int, horizon: int = 8) -> Lemma4Result:
    """
    Cocientes consecutivos de {a k^m : a en A, m <= horizon}

    Args:
        A: Subconjunto de [k^{L-1}, k^L - 1]
        k, L: Ventana
        R: Radio de cobertura
        horizon: Potencia máxima de k enumerada

    Raises:
        PreconditionError: Si A sale de la ventana o no la cubre
    """
    values = sorted(set(A))
    low, high = k ** (L - 1), k ** L - 1
    if not values:
        raise PreconditionError("A no puede ser vacío")
    if values[0] < low or values[-1] > high:
        raise PreconditionError(f"A debe estar en [{low}, {high}]", {"window": [low, high]})
    position = 0
    for t in range(low, high + 1):
        while position + 1 < len(values) and values[position + 1] <= t:
            position += 1
        nearest = min(abs(t - values[position]), abs(t - values[min(position + 1, len(values) - 1)]))
        if nearest > R:
            raise PreconditionError(f"El entero {t} no está cubierto con radio {R}", {"uncovered": t})
    bound = 1 + Fraction((k + 1) * R, low)
    merged = sorted({a * k ** m for a in values for m in range(horizon + 1)})
    ratios = [Fraction(merged[j + 1], merged[j]) for j in range(len(merged) - 1)]
    if not ratios:
        return Lemma4Result(bound, Fraction(1), 0, 0, True, merged[:16])
    j0 = None
    for j in range(len(ratios) - 1, -1, -1):
        if ratios[j] >= bound:
            break
        j0 = j
    empirical = max(ratios)
    return Lemma4Result(bound, empirical, j0, len(ratios), empirical < bound, merged[:16])


def merged_bound(fe: FunctionalEquation, L: int, admissibility) -> ExponentBound:
    """
    (rho/(delta - 1)) (1 + epsilon k (k + 1)) sobre la ventana [k^{L-1}, k^L - 1]

    rho se evalúa en l = k^L y delta en l = k^{L-1}; epsilon es el mayor
    salto entre l admisibles consecutivos dividido por k^{L-1}.

    Raises:
        EmptyWindowError: Si no hay l admisibles
        BoundInapplicableError: Si delta <= 1
    """
    k = fe.k
    low, high = k ** (L - 1), k ** L - 1
    admissible = [l for l in range(low, high + 1) if admissibility(l)]
    if not admissible:
        raise EmptyWindowError(f"No hay l admisibles en [{low}, {high}]", {"L": L})
    rho, _ = rho_delta(fe, k ** L)
    _, delta = rho_delta(fe, low)
    if delta <= 1:
        raise BoundInapplicableError(
            f"delta en l = {low} es {fraction_str(delta)} <= 1",
            {"L": L, "minimal_l": fe.alpha + fe.beta + fe.gamma + 1},
        )
    notes: List[str] = []
    if len(admissible) == 1:
        gap = high + 1 - low
        notes.append("un solo l admisible: el salto es el ancho de la ventana")
    else:
        gap = max(b - a for a, b in zip(admissible, admissible[1:]))
    epsilon = Fraction(gap, low)
    mu = rho / (delta - 1) * (1 + epsilon * k * (k + 1))
    if mu < 2:
        notes.append("mu >= 2 para todo irracional")
    return ExponentBound(
        label=f"L={L}",
        rho=rho,
        delta=delta,
        mu_bound=mu,
        certification=admissibility.certification,
        L=L,
        window=(low, high),
        epsilon=epsilon,
        admissible=admissible,
        notes=notes,
    )


@dataclass(frozen=True)
class DenominatorGrowth:
    """Crecimiento de q_{l,m} a lo largo de m"""
    l: int
    scaled_min: Fraction
    scaled_max: Fraction
    increasing: bool
    growth_ratios: List[float]

    @property
    def holds(self) -> bool:
        return self.increasing and self.scaled_min > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "l": self.l,
            "c0": float(self.scaled_min),
            "c1": float(self.scaled_max),
            "increasing": self.increasing,
            "growth_ratios": self.growth_ratios,
            "holds": self.holds,
        }


def denominator_growth(records: Sequence[ApproximationRecord], k: int) -> DenominatorGrowth:
    """
    Intervalo realizado [c0, c1] de q / b^{Y_l k^m} y cocientes q_{m+1}/q_m^k

    Args:
        records: Convergentes del mismo l ordenados por m
        k: Exponente de la ecuación funcional
    """
    if not records:
        raise PreconditionError("Se necesita al menos un convergente")
    ordered = sorted(records, key=lambda r: r.m)
    scaled = [r.scaled_q for r in ordered]
    increasing = all(b.q > a.q for a, b in zip(ordered, ordered[1:]))
    ratios = [float(Fraction(b.q, a.q ** k)) for a, b in zip(ordered, ordered[1:])]
    return DenominatorGrowth(ordered[0].l, min(scaled), max(scaled), increasing, ratios)
