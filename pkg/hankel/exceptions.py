"""
Jerarquía de errores del sistema

Cada error lleva el código de salida que usa la CLI:
2 error de uso, 1 fallo de verificación, 3 error interno.
"""
from typing import Any, Dict, Optional


class HankelError(Exception):
    """Error base del sistema"""
    exit_code: int = 3

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convierte el error a diccionario para el reporte"""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


# Errores de uso y precondiciones (salida 2)

class UsageError(HankelError):
    """Parámetros de línea de comandos o configuración inválidos"""
    exit_code = 2


class PreconditionError(HankelError):
    """Una precondición de la operación no se cumple"""
    exit_code = 2


class ShapeError(PreconditionError):
    """Forma de matriz incompatible con la operación"""


class LengthError(PreconditionError):
    """El prefijo o la serie no tiene suficientes términos"""

    def __init__(self, message: str, required: int, available: int):
        super().__init__(message, {"required": required, "available": available})
        self.required = required
        self.available = available


class DomainError(PreconditionError):
    """Argumento fuera del dominio de la fórmula"""


class OracleScopeError(PreconditionError):
    """El oráculo de cofactores no acepta matrices tan grandes"""


class UnsupportedAlphabetError(PreconditionError):
    """La sucesión tiene términos fuera de {0,1}"""


class ConstructionError(PreconditionError):
    """No se puede construir la sucesión morfica pedida"""


# Degeneraciones matemáticas y fallos de verificación (salida 1)

class VerificationError(HankelError):
    """Fallo de una comprobación matemática"""
    exit_code = 1


class DegenerateOrderError(VerificationError):
    """H_k(f) = 0: el aproximante de Padé [k-1/k] no está garantizado"""


class DegenerateEvaluationError(VerificationError):
    """Q_{l,m}(1/b) = 0 o C(1/b) = 0"""


class BoundInapplicableError(VerificationError):
    """La cota no aplica (por ejemplo delta_l <= 1)"""


class EmptyWindowError(VerificationError):
    """No hay ningún l admisible en la ventana"""


class BlockMismatchError(VerificationError):
    """La conjugación por U no produce la descomposición por bloques"""


class PrecisionExhaustedError(VerificationError):
    """El intervalo de error sigue conteniendo 0 tras refinar al máximo"""


class DependencyError(VerificationError):
    """Falta una fila de la tabla que consume la recurrencia"""


# Errores internos (salida 3)

class InternalConsistencyError(HankelError):
    """Un invariante de construcción se violó (indica un bug)"""
    exit_code = 3
