"""
Conversión de valores exactos a JSON y CSV
"""
import json
import math
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Union

JSONScalar = Union[str, int, float, bool, None]

# Enteros con más dígitos que esto se serializan como texto
_SAFE_INT_DIGITS = 15


def fraction_str(value: Union[int, Fraction]) -> str:
    """Racional exacto como 'p/q' (o 'p' si es entero)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_json_value(value: Any) -> Any:
    """
    Convierte recursivamente un valor a algo serializable por json

    Enteros grandes y racionales se convierten a texto decimal para no
    desbordar a los consumidores.
    """
    if value is None or isinstance(value, (str, bool)):
        return value
    if isinstance(value, int):
        return value if len(str(abs(value))) <= _SAFE_INT_DIGITS else str(value)
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return value.as_posix()
    if hasattr(value, "to_dict"):
        return to_json_value(value.to_dict())
    if isinstance(value, Mapping):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_json_value(item) for item in items]
    return str(value)


def dumps(payload: Any) -> str:
    """JSON determinista (claves ordenadas)"""
    return json.dumps(to_json_value(payload), sort_keys=True, ensure_ascii=False, indent=2)
