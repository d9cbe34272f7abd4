"""
Encierros racionales rigurosos de xi = f(1/b)
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from hankel.exceptions import DomainError, LengthError, UnsupportedAlphabetError
from hankel.models.sequence import SequenceSpec
from hankel.sequences.generators import prefix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class XiEnclosure:
    """lo <= xi <= hi con hi - lo <= b^{1 - tail_at}"""
    b: int
    tail_at: int
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def xi_enclosure(seq: Sequence[int], b: int, tail_at: int) -> XiEnclosure:
    """
    Suma parcial más cota de la cola geométrica

    Args:
        seq: Al menos tail_at términos en {0, 1}
        b: Base (>= 2)
        tail_at: Número de términos sumados (>= 1)

    Returns:
        XiEnclosure con lo = sum_{i < tail_at} f_i b^{-i}
    """
    if b < 2:
        raise DomainError("La base debe ser >= 2", {"b": b})
    if tail_at < 1:
        raise DomainError("tail_at debe ser >= 1", {"tail_at": tail_at})
    if len(seq) < tail_at:
        raise LengthError(
            f"Se necesitan {tail_at} términos para el encierro",
            required=tail_at,
            available=len(seq),
        )
    head = seq[:tail_at]
    if any(value not in (0, 1) for value in head):
        raise UnsupportedAlphabetError("La cota de la cola requiere términos en {0, 1}")
    numerator = 0
    for value in head:
        numerator = numerator * b + value
    scale = b ** (tail_at - 1)
    lo = Fraction(numerator, scale)
    hi = lo + Fraction(1, scale * (b - 1))
    return XiEnclosure(b, tail_at, lo, hi)


class EnclosureCache:
    """
    Caché de encierros por (sucesión, base)

    Sólo se agregan encierros más finos; cualquier encierro guardado sigue
    siendo válido.
    """

    def __init__(self):
        self._store: Dict[Tuple, XiEnclosure] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, spec: SequenceSpec, b: int, tail_at: int) -> XiEnclosure:
        """
        Encierro con al menos tail_at términos

        Args:
            spec: Sucesión
            b: Base
            tail_at: Términos mínimos
        """
        key = (spec.key(), b)
        with self._lock:
            cached = self._store.get(key)
            if cached is not None and cached.tail_at >= tail_at:
                self.hits += 1
                return cached
            self.misses += 1
        enclosure = xi_enclosure(prefix(spec, tail_at), b, tail_at)
        with self._lock:
            current = self._store.get(key)
            if current is None or current.tail_at < enclosure.tail_at:
                self._store[key] = enclosure
        logger.debug("Encierro de xi en base %d con %d términos", b, tail_at)
        return enclosure

    def clear(self) -> None:
        with self._lock:
            self._store.clear()


# Instancia global
_enclosure_cache: Optional[EnclosureCache] = None


def get_enclosure_cache() -> EnclosureCache:
    """Obtiene o crea la instancia global del caché de encierros"""
    global _enclosure_cache
    if _enclosure_cache is None:
        _enclosure_cache = EnclosureCache()
    return _enclosure_cache
