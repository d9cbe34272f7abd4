"""
Modelos de datos para sucesiones automáticas
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from hankel.exceptions import ConstructionError


class SequenceKind(Enum):
    """Sucesiones soportadas"""
    PAPERFOLDING_CLOSED = "paperfolding-closed"
    PAPERFOLDING_MORPHIC = "paperfolding-morphic"
    THUE_MORSE_PM1 = "thue-morse-pm1"
    CANTOR = "cantor"
    CUSTOM_MORPHIC = "custom-morphic"


Word = Tuple[str, ...]


def _as_word(word: Union[str, Word]) -> Word:
    # Una cadena se interpreta letra a letra
    return tuple(word)


@dataclass(frozen=True)
class MorphicSpec:
    """
    Morfismo con codificación cuyo punto fijo define la sucesión

    Las palabras pueden darse como cadenas ("ab") o tuplas de letras.
    """
    alphabet: Tuple[str, ...]
    morphism: Dict[str, Word] = field(hash=False)
    coding: Dict[str, int] = field(hash=False)
    seed: str

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "morphism", {letter: _as_word(word) for letter, word in self.morphism.items()}
        )
        object.__setattr__(self, "coding", dict(self.coding))
        self.validate()

    def reachable(self) -> Tuple[str, ...]:
        """Letras alcanzables desde la semilla, en orden de descubrimiento"""
        seen = [self.seed]
        index = 0
        while index < len(seen):
            for letter in self.morphism.get(seen[index], ()):
                if letter not in seen:
                    seen.append(letter)
            index += 1
        return tuple(seen)

    def validate(self) -> None:
        """
        Verifica prolongabilidad e imágenes no vacías

        Raises:
            ConstructionError: Si el punto fijo no existe
        """
        if self.seed not in self.alphabet:
            raise ConstructionError(f"La semilla {self.seed!r} no pertenece al alfabeto")
        image = self.morphism.get(self.seed, ())
        if not image or image[0] != self.seed:
            raise ConstructionError(
                f"El morfismo no es prolongable en {self.seed!r}",
                {"image": "".join(image)},
            )
        for letter in self.reachable():
            if letter not in self.alphabet:
                raise ConstructionError(f"La letra {letter!r} no pertenece al alfabeto")
            if not self.morphism.get(letter):
                raise ConstructionError(f"La letra {letter!r} tiene imagen vacía")
            if letter not in self.coding:
                raise ConstructionError(f"La letra {letter!r} no tiene codificación")

    def key(self) -> Tuple[Any, ...]:
        """Clave hashable para memoización"""
        return (
            self.alphabet,
            tuple(sorted(self.morphism.items())),
            tuple(sorted(self.coding.items())),
            self.seed,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphabet": list(self.alphabet),
            "morphism": {letter: "".join(word) for letter, word in sorted(self.morphism.items())},
            "coding": dict(sorted(self.coding.items())),
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SequenceSpec:
    """Generador de una sucesión entera"""
    kind: SequenceKind
    morphic: Optional[MorphicSpec] = None

    def __post_init__(self):
        if self.kind is SequenceKind.CUSTOM_MORPHIC and self.morphic is None:
            raise ConstructionError("custom-morphic requiere un MorphicSpec")

    @property
    def name(self) -> str:
        return self.kind.value

    def key(self) -> Tuple[Any, ...]:
        return (self.kind.value, self.morphic.key() if self.morphic else None)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.morphic is not None:
            data["morphic"] = self.morphic.to_dict()
        return data
