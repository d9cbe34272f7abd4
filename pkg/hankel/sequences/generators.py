"""
Generación de prefijos de sucesiones automáticas
"""
import logging
import threading
from typing import Dict, List, Tuple

from hankel.exceptions import ConstructionError, DomainError, UsageError
from hankel.models.sequence import MorphicSpec, SequenceKind, SequenceSpec

logger = logging.getLogger(__name__)

PAPERFOLDING_MORPHISM = MorphicSpec(
    alphabet=("a", "b", "c", "d"),
    morphism={"a": "ab", "b": "cb", "c": "ad", "d": "cd"},
    coding={"a": 1, "b": 1, "c": 0, "d": 0},
    seed="a",
)

THUE_MORSE_MORPHISM = MorphicSpec(
    alphabet=("+", "-"),
    morphism={"+": "+-", "-": "-+"},
    coding={"+": 1, "-": -1},
    seed="+",
)

CANTOR_MORPHISM = MorphicSpec(
    alphabet=("1", "0"),
    morphism={"1": "101", "0": "000"},
    coding={"1": 1, "0": 0},
    seed="1",
)

_BUILTIN_MORPHISMS: Dict[SequenceKind, MorphicSpec] = {
    SequenceKind.PAPERFOLDING_MORPHIC: PAPERFOLDING_MORPHISM,
    SequenceKind.THUE_MORSE_PM1: THUE_MORSE_MORPHISM,
    SequenceKind.CANTOR: CANTOR_MORPHISM,
}

# Nombres aceptados por la CLI
SEQUENCE_ALIASES: Dict[str, SequenceKind] = {
    "paperfolding": SequenceKind.PAPERFOLDING_CLOSED,
    "paperfolding-closed": SequenceKind.PAPERFOLDING_CLOSED,
    "paperfolding-morphic": SequenceKind.PAPERFOLDING_MORPHIC,
    "thue-morse-pm1": SequenceKind.THUE_MORSE_PM1,
    "cantor": SequenceKind.CANTOR,
}

# Palabra expandida más larga por morfismo
_word_cache: Dict[Tuple, Tuple[str, ...]] = {}
_word_lock = threading.Lock()


def get_sequence(name: str) -> SequenceSpec:
    """
    Resuelve un nombre de sucesión

    Raises:
        UsageError: Si el nombre no es conocido
    """
    kind = SEQUENCE_ALIASES.get(name)
    if kind is None:
        raise UsageError(
            f"Sucesión desconocida: {name}",
            {"known": sorted(SEQUENCE_ALIASES)},
        )
    return SequenceSpec(kind)


def paperfolding_closed(n: int) -> List[int]:
    """
    Prefijo del plegado de papel por f_{4j}=1, f_{4j+2}=0, f_{2j+1}=f_j

    Args:
        n: Longitud del prefijo

    Returns:
        f_0 .. f_{n-1}
    """
    if n < 0:
        raise DomainError("La longitud del prefijo debe ser >= 0")
    values: List[int] = []
    for i in range(n):
        if i % 4 == 0:
            values.append(1)
        elif i % 4 == 2:
            values.append(0)
        else:
            values.append(values[(i - 1) // 2])
    return values


def fixed_point_word(spec: MorphicSpec, n: int) -> Tuple[str, ...]:
    """
    Prefijo de longitud >= n del punto fijo del morfismo

    Itera el morfismo desde la palabra en caché (o la semilla) hasta
    alcanzar la longitud pedida.

    Raises:
        ConstructionError: Si la iteración deja de crecer
    """
    key = spec.key()
    with _word_lock:
        word = _word_cache.get(key, (spec.seed,))
    while len(word) < n:
        expanded = tuple(letter for symbol in word for letter in spec.morphism[symbol])
        if len(expanded) <= len(word):
            raise ConstructionError(
                "El punto fijo no crece: el morfismo no genera una sucesión infinita",
                {"length": len(word)},
            )
        word = expanded
    with _word_lock:
        cached = _word_cache.get(key, ())
        if len(word) > len(cached):
            _word_cache[key] = word
    return word


def morphic_prefix(spec: MorphicSpec, n: int) -> List[int]:
    """Prefijo codificado del punto fijo de un morfismo"""
    if n < 0:
        raise DomainError("La longitud del prefijo debe ser >= 0")
    if n == 0:
        return []
    word = fixed_point_word(spec, n)
    return [spec.coding[letter] for letter in word[:n]]


def prefix(spec: SequenceSpec, n: int) -> List[int]:
    """
    Prefijo u_0 .. u_{n-1} de la sucesión

    Args:
        spec: Sucesión
        n: Longitud

    Returns:
        Lista de enteros, determinista
    """
    if spec.kind is SequenceKind.PAPERFOLDING_CLOSED:
        return paperfolding_closed(n)
    morphic = spec.morphic if spec.kind is SequenceKind.CUSTOM_MORPHIC else _BUILTIN_MORPHISMS[spec.kind]
    return morphic_prefix(morphic, n)


def coefficient_bound(spec: SequenceSpec) -> int:
    """max |u_n| sobre toda la sucesión (máximo de la codificación)"""
    if spec.kind is SequenceKind.PAPERFOLDING_CLOSED:
        return 1
    morphic = spec.morphic if spec.kind is SequenceKind.CUSTOM_MORPHIC else _BUILTIN_MORPHISMS[spec.kind]
    return max(abs(morphic.coding[letter]) for letter in morphic.reachable())
