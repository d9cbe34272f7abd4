"""
Matrices enteras densas y su reducción a GF(2)
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from hankel.exceptions import ShapeError


@dataclass(frozen=True)
class IntMatrix:
    """Matriz de enteros de precisión arbitraria en orden por filas"""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("Las dimensiones deben ser >= 0")
        if self.rows * self.cols != len(self.entries):
            raise ShapeError(
                f"{self.rows}x{self.cols} no coincide con {len(self.entries)} entradas"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(row) for row in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ShapeError("Filas de longitud distinta")
        return cls(len(rows), cols, tuple(int(v) for row in rows for v in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """
        Ensambla una matriz por bloques

        Args:
            blocks: Filas de bloques; cada fila comparte altura y cada columna anchura
        """
        grid: List[List[int]] = []
        for block_row in blocks:
            heights = {block.rows for block in block_row}
            if len(heights) != 1:
                raise ShapeError("Bloques de altura distinta en una fila de bloques")
            height = heights.pop()
            for i in range(height):
                line: List[int] = []
                for block in block_row:
                    line.extend(block.row(i))
                grid.append(line)
        return cls.from_rows(grid)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def permuted(self, perm: Sequence[int]) -> "IntMatrix":
        """P^t M P con P la permutación cuya columna c es e_{perm[c]}"""
        if not self.is_square or len(perm) != self.rows:
            raise ShapeError("La permutación no coincide con la matriz")
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(self[pi, pj] for pi in perm for pj in perm),
        )

    def submatrix(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> "IntMatrix":
        width = col_stop - col_start
        entries = tuple(v for i in range(row_start, row_stop) for v in self.row(i)[col_start:col_stop])
        return IntMatrix(row_stop - row_start, width, entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError("Dimensiones incompatibles para el producto")
        entries = tuple(
            sum(self[i, t] * other[t, j] for t in range(self.cols))
            for i in range(self.rows)
            for j in range(other.cols)
        )
        return IntMatrix(self.rows, other.cols, entries)

    def mod2(self) -> "BitMatrix":
        return BitMatrix.from_int_matrix(self)

    def to_grid(self) -> str:
        """Representación en rejilla de texto"""
        if not self.entries:
            return f"[{self.rows}x{self.cols}]"
        width = max(len(str(v)) for v in self.entries)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in self.row(i)) for i in range(self.rows)
        )


@dataclass(frozen=True, eq=False)
class BitMatrix:
    """Matriz de bits (uint8 con valores 0/1)"""
    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self):
        if self.bits.shape != (self.rows, self.cols):
            raise ShapeError("La forma de los bits no coincide con las dimensiones")

    @classmethod
    def from_int_matrix(cls, matrix: IntMatrix) -> "BitMatrix":
        # x & 1 da la paridad también para enteros negativos
        flat = np.fromiter((v & 1 for v in matrix.entries), dtype=np.uint8, count=len(matrix.entries))
        return cls(matrix.rows, matrix.cols, flat.reshape(matrix.rows, matrix.cols))

    @classmethod
    def from_array(cls, array: Iterable) -> "BitMatrix":
        bits = (np.asarray(array, dtype=np.int64) & 1).astype(np.uint8)
        if bits.ndim != 2:
            raise ShapeError("Se esperaba un arreglo bidimensional")
        return cls(bits.shape[0], bits.shape[1], bits)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return int(self.bits[index])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.bits.shape == other.bits.shape
            and bool(np.array_equal(self.bits, other.bits))
        )
