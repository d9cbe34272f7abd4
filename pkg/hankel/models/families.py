"""
Modelos de datos para las familias de determinantes orlados
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, FrozenSet, List, Mapping, Sequence, Tuple

FAMILY_NAMES: Tuple[str, ...] = ("a", "b", "c", "d", "e", "g", "h", "x", "y")

CSV_HEADER: Tuple[str, ...] = ("n",) + FAMILY_NAMES


@dataclass(frozen=True)
class FamilyRow:
    """Los nueve determinantes de índice n"""
    n: int
    a: int
    b: int
    c: int
    d: int
    e: int
    g: int
    h: int
    x: int
    y: int

    def get(self, family: str) -> int:
        """Valor de una familia por nombre"""
        if family not in FAMILY_NAMES:
            raise KeyError(f"Familia desconocida: {family}")
        return getattr(self, family)

    def values(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in FAMILY_NAMES}

    def mod2(self) -> Dict[str, int]:
        """Paridades de las nueve familias"""
        return {name: getattr(self, name) & 1 for name in FAMILY_NAMES}

    def to_csv_row(self) -> List[str]:
        return [str(getattr(self, f.name)) for f in fields(self)]

    @classmethod
    def from_csv_row(cls, row: Sequence[str]) -> "FamilyRow":
        """
        Construye una fila desde celdas CSV

        Raises:
            ValueError: Si faltan celdas o no son enteros
        """
        if len(row) != len(CSV_HEADER):
            raise ValueError(f"Se esperaban {len(CSV_HEADER)} celdas, hay {len(row)}")
        return cls(*(int(cell) for cell in row))

    @classmethod
    def from_values(cls, n: int, values: Mapping[str, int]) -> "FamilyRow":
        return cls(n, *(values[name] for name in FAMILY_NAMES))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n}
        data.update({name: str(value) for name, value in self.values().items()})
        return data


@dataclass(frozen=True)
class Mod2Table:
    """Residuos módulo `period` de n para los que cada familia es impar"""
    period: int
    odd_residues: Mapping[str, FrozenSet[int]]

    def expected(self, family: str, n: int) -> int:
        """Paridad que predice la tabla para la familia en n"""
        return 1 if n % self.period in self.odd_residues[family] else 0

    def expected_row(self, n: int) -> Dict[str, int]:
        return {name: self.expected(name, n) for name in FAMILY_NAMES}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "period": self.period,
            "odd_residues": {name: sorted(self.odd_residues[name]) for name in FAMILY_NAMES},
        }


PROPOSITION2_TABLE = Mod2Table(
    period=10,
    odd_residues={
        "a": frozenset({0, 1, 2, 5, 8, 9}),
        "b": frozenset({2, 4, 6, 8}),
        "c": frozenset({1, 5, 9}),
        "d": frozenset({2, 3, 4, 5, 6, 7, 8}),
        "e": frozenset({2, 5, 8}),
        "g": frozenset({0, 1, 8, 9}),
        "h": frozenset({1, 2, 4, 5, 7, 8}),
        "x": frozenset({1, 4, 5, 8}),
        "y": frozenset({2, 3, 4, 5, 6, 7}),
    },
)
