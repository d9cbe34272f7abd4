"""
Verificación de las recurrencias, de la periodicidad módulo 2 y de la no
anulación de los determinantes de Hankel
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from hankel.exceptions import DomainError
from hankel.families.builder import (
    family_direct_mod2,
    family_table,
    family_table_mod2,
    hankel_minors_exact,
)
from hankel.families.recurrences import IDENTITIES, NEGATED, PRINTED, PROOF, Identity, mod2_table_by_recurrence
from hankel.linalg.gf2 import leading_minors_mod2
from hankel.linalg.matrix import BitMatrix
from hankel.linalg.structure import conjugate_by_U, hankel_block
from hankel.models.families import FAMILY_NAMES, FamilyRow, Mod2Table, PROPOSITION2_TABLE
from hankel.models.report import CheckStatus, IdentityCheck

logger = logging.getLogger(__name__)

# Orden de preferencia al resolver variantes
_VARIANT_PRIORITY = (PRINTED, PROOF, NEGATED)


@dataclass(frozen=True)
class IdentityResolution:
    """Variante que cumple una identidad para todos los n probados"""
    identity: int
    family: str
    parity: int
    status: CheckStatus
    tested: int
    variant: Optional[str] = None
    parity_pattern: Optional[Dict[str, str]] = None
    first_failure: Optional[int] = None
    mod2_failures: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "family": self.family,
            "target": "2n+1" if self.parity else "2n",
            "status": self.status.value,
            "tested": self.tested,
            "variant": self.variant,
            "parity_pattern": self.parity_pattern,
            "first_failure": self.first_failure,
            "mod2_failures": self.mod2_failures,
        }


@dataclass
class Lemma1Report:
    """Comparación de las 18 identidades exactas y módulo 2"""
    n_max: int
    resolutions: List[IdentityResolution] = field(default_factory=list)
    checks: List[IdentityCheck] = field(default_factory=list)
    mod2_checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(res.status is not CheckStatus.FAIL for res in self.resolutions)

    def resolution(self, identity: int) -> IdentityResolution:
        return next(res for res in self.resolutions if res.identity == identity)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "resolutions": [res.to_dict() for res in self.resolutions],
            "checks": [check.to_dict() for check in self.checks],
            "mod2_checks": [check.to_dict() for check in self.mod2_checks if check.status is CheckStatus.FAIL],
        }


def _pick(candidates: set) -> Optional[str]:
    return next((name for name in _VARIANT_PRIORITY if name in candidates), None)


def _resolve(identity: Identity, matches: Dict[int, set], mod2_failures: int) -> IdentityResolution:
    tested = len(matches)
    base = dict(identity=identity.number, family=identity.family, parity=identity.parity,
                tested=tested, mod2_failures=mod2_failures)
    if tested == 0:
        return IdentityResolution(status=CheckStatus.SKIPPED, **base)
    status_mod2 = CheckStatus.FAIL if mod2_failures else CheckStatus.PASS
    common = set.intersection(*matches.values())
    if common:
        return IdentityResolution(status=status_mod2, variant=_pick(common), **base)
    first_failure = next((n for n in sorted(matches) if not matches[n]), None)
    even = [matches[n] for n in matches if n % 2 == 0]
    odd = [matches[n] for n in matches if n % 2 == 1]
    if even and odd and first_failure is None:
        even_common, odd_common = set.intersection(*even), set.intersection(*odd)
        if even_common and odd_common:
            pattern = {"even_n": _pick(even_common), "odd_n": _pick(odd_common)}
            logger.warning("La identidad %d depende de la paridad de n: %s", identity.number, pattern)
            return IdentityResolution(status=CheckStatus.FAIL, parity_pattern=pattern, **base)
    return IdentityResolution(status=CheckStatus.FAIL, first_failure=first_failure, **base)


def verify_lemma1(
    seq: Sequence[int],
    n_max: int,
    jobs: int = 1,
    rows: Optional[Sequence[FamilyRow]] = None,
) -> Lemma1Report:
    """
    Compara valores directos con las 18 identidades para 2n + 1 <= n_max

    Args:
        seq: Prefijo de la sucesión
        n_max: Índice máximo de la tabla
        jobs: Procesos para la tabla exacta
        rows: Tabla ya calculada (por ejemplo desde el caché)

    Returns:
        Lemma1Report; los desacuerdos son contenido del reporte
    """
    if n_max < 2:
        raise DomainError("verify_lemma1 requiere n_max >= 2", {"n_max": n_max})
    if rows is None:
        rows = family_table(seq, n_max, jobs)
    by_n = {row.n: row for row in rows}
    report = Lemma1Report(n_max=n_max)
    last = (n_max - 1) // 2
    for identity in IDENTITIES:
        matches: Dict[int, set] = {}
        mod2_failures = 0
        for n in range(1, last + 1):
            r = by_n[n]
            r1 = by_n[n + 1] if identity.uses_next else None
            lhs = by_n[identity.target(n)].get(identity.family)
            values = identity.variants(n, r, r1)
            matched = {name for name, value in values.items() if value == lhs}
            matches[n] = matched
            variant = _pick(matched)
            report.checks.append(IdentityCheck(
                identity=identity.number,
                n=n,
                status=CheckStatus.PASS if matched else CheckStatus.FAIL,
                lhs=lhs,
                rhs=values[variant or PRINTED],
                sign_variant=variant,
            ))
            predicted = identity.predict_mod2(r, r1)
            ok = (lhs & 1) == predicted
            mod2_failures += 0 if ok else 1
            report.mod2_checks.append(IdentityCheck(
                identity=identity.number,
                n=n,
                status=CheckStatus.PASS if ok else CheckStatus.FAIL,
                lhs=lhs & 1,
                rhs=predicted,
                sign_variant=None,
                mod2=True,
            ))
        report.resolutions.append(_resolve(identity, matches, mod2_failures))
    logger.info("Identidades verificadas hasta n_max=%d: %s", n_max, "ok" if report.passed else "con fallos")
    return report


@dataclass
class Prop2Report:
    """Paridades de las familias frente a la tabla de periodo 10"""
    n_max: int
    deviations: List[Dict[str, Any]] = field(default_factory=list)
    recurrence_deviations: List[Dict[str, Any]] = field(default_factory=list)
    direct_deviations: List[Dict[str, Any]] = field(default_factory=list)
    direct_limit: int = 0

    @property
    def passed(self) -> bool:
        return not (self.deviations or self.recurrence_deviations or self.direct_deviations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "deviations": self.deviations[:50],
            "deviation_count": len(self.deviations),
            "recurrence_deviations": self.recurrence_deviations[:50],
            "direct_deviations": self.direct_deviations[:50],
            "direct_limit": self.direct_limit,
        }


def verify_prop2(
    seq: Sequence[int],
    n_max: int,
    table: Mod2Table = PROPOSITION2_TABLE,
    direct_limit: int = 20,
) -> Prop2Report:
    """
    Paridades de las nueve familias para 1 <= n <= n_max frente a la tabla

    Se comparan tres caminos: menores directores sobre GF(2) (principal),
    extensión por las formas reducidas y determinantes individuales para
    n <= direct_limit.
    """
    if n_max < 10:
        raise DomainError("verify_prop2 requiere n_max >= 10", {"n_max": n_max})
    report = Prop2Report(n_max=n_max, direct_limit=min(direct_limit, n_max))
    parities = family_table_mod2(seq, n_max)
    for family in FAMILY_NAMES:
        for n in range(1, n_max + 1):
            actual = int(parities[family][n - 1])
            expected = table.expected(family, n)
            if actual != expected:
                report.deviations.append({"family": family, "n": n, "expected": expected, "actual": actual})

    first_row = {family: int(parities[family][0]) for family in FAMILY_NAMES}
    for n, row in mod2_table_by_recurrence(first_row, n_max).items():
        for family in FAMILY_NAMES:
            if row[family] != int(parities[family][n - 1]):
                report.recurrence_deviations.append({"family": family, "n": n})

    for n in range(1, report.direct_limit + 1):
        direct = family_direct_mod2(seq, n)
        for family in FAMILY_NAMES:
            if direct[family] != int(parities[family][n - 1]):
                report.direct_deviations.append({"family": family, "n": n})

    if report.deviations:
        logger.warning("%d desviaciones de la tabla módulo 2", len(report.deviations))
    return report


@dataclass
class NonvanishingReport:
    """H_n != 0 para n <= n_max por determinantes exactos"""
    n_max: int
    zero_indices: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.zero_indices

    def to_dict(self) -> Dict[str, Any]:
        return {"n_max": self.n_max, "passed": self.passed, "zero_indices": self.zero_indices}


def nonvanishing_check(seq: Sequence[int], n_max: int) -> NonvanishingReport:
    """Índices n <= n_max con H_n = 0"""
    minors = hankel_minors_exact(seq, n_max)
    return NonvanishingReport(n_max, [n for n, value in enumerate(minors, start=1) if value == 0])


@dataclass
class StarReport:
    """H_{10i+1} y H_{10i+2} impares, y no anulación exacta"""
    n_max: int
    pairs_checked: int
    failing_pairs: List[int]
    exact: NonvanishingReport

    @property
    def passed(self) -> bool:
        return not self.failing_pairs and self.exact.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "pairs_checked": self.pairs_checked,
            "failing_pairs": self.failing_pairs,
            "exact": self.exact.to_dict(),
        }


def star_check(seq: Sequence[int], n_max: int, exact_limit: Optional[int] = None) -> StarReport:
    """
    Verifica que H_{10i+1} H_{10i+2} es impar para 10i + 2 <= n_max

    Args:
        seq: Prefijo de la sucesión
        n_max: Índice máximo
        exact_limit: Tope para la comprobación exacta H_n != 0
    """
    if n_max < 2:
        raise DomainError("star_check requiere n_max >= 2", {"n_max": n_max})
    parities = leading_minors_mod2(BitMatrix.from_int_matrix(hankel_block(seq, 0, n_max, n_max)))
    failing: List[int] = []
    pairs = 0
    i = 0
    while 10 * i + 2 <= n_max:
        pairs += 1
        if not (parities[10 * i] and parities[10 * i + 1]):
            failing.append(i)
        i += 1
    exact_max = n_max if exact_limit is None else min(n_max, exact_limit)
    exact = nonvanishing_check(seq, exact_max)
    logger.info("Comprobación de pares impares: %d pares, %d fallos", pairs, len(failing))
    return StarReport(n_max, pairs, failing, exact)


def conjugation_check(seq: Sequence[int], n_max: int) -> List[Dict[str, Any]]:
    """
    Conjugación por U para todo n <= n_max, casos par e impar

    Returns:
        Lista de fallos (vacía si la descomposición por bloques se cumple)
    """
    failures: List[Dict[str, Any]] = []
    for n in range(1, n_max + 1):
        for odd_case in (False, True):
            result = conjugate_by_U(seq, n, odd_case)
            if not result.holds:
                failures.append(result.to_dict())
    return failures
