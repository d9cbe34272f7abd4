"""
Construcción de las nueve familias de determinantes orlados

Cada familia se arma tal como se define: bloque de Hankel, bordes
alpha/beta y esquinas nulas. Además cada familia es, salvo un signo fijo,
un menor principal director de una única matriz generadora (bordes
movidos al principio), lo que permite obtener todas las paridades hasta
n_max en una sola eliminación sobre GF(2).
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from hankel.exceptions import DomainError, LengthError
from hankel.linalg.determinants import det_exact, leading_minors_exact
from hankel.linalg.gf2 import det_mod2, leading_minors_mod2
from hankel.linalg.matrix import BitMatrix, IntMatrix
from hankel.linalg.structure import alpha, beta, column, hankel_block, row
from hankel.models.families import FAMILY_NAMES, FamilyRow

logger = logging.getLogger(__name__)


def required_prefix(n: int) -> int:
    """Longitud de prefijo exigida para las familias de índice n"""
    return 2 * n + 3


def _check_prefix(seq: Sequence[int], n: int) -> None:
    if n < 1:
        raise DomainError("El índice de las familias debe ser >= 1", {"n": n})
    required = required_prefix(n)
    if len(seq) < required:
        raise LengthError(
            f"Las familias de índice {n} necesitan un prefijo de longitud {required}",
            required=required,
            available=len(seq),
        )


def _zeros(rows: int, cols: int) -> IntMatrix:
    return IntMatrix.zeros(rows, cols)


def family_matrices(seq: Sequence[int], n: int) -> Dict[str, IntMatrix]:
    """
    Matrices orladas de índice n según su definición

    Args:
        seq: Prefijo de la sucesión
        n: Índice (>= 1)

    Returns:
        Diccionario familia -> matriz cuadrada
    """
    _check_prefix(seq, n)
    square = hankel_block(seq, 0, n, n)
    tall = hankel_block(seq, 0, n + 1, n)
    a_col, b_col = column(alpha(n)), column(beta(n))
    a_row, b_row = row(alpha(n)), row(beta(n))
    a_col1, b_col1 = column(alpha(n + 1)), column(beta(n + 1))
    return {
        "a": square,
        "b": IntMatrix.from_blocks(
            [[square, a_col, b_col], [a_row, _zeros(1, 2)], [b_row, _zeros(1, 2)]]
        ),
        "c": IntMatrix.from_blocks([[square, a_col], [a_row, _zeros(1, 1)]]),
        "d": IntMatrix.from_blocks([[square, b_col], [b_row, _zeros(1, 1)]]),
        "e": IntMatrix.from_blocks([[square, b_col], [a_row, _zeros(1, 1)]]),
        "g": IntMatrix.from_blocks([[tall, a_col1]]),
        "h": IntMatrix.from_blocks([[tall, b_col1]]),
        "x": IntMatrix.from_blocks([[tall, a_col1, b_col1], [a_row, _zeros(1, 2)]]),
        "y": IntMatrix.from_blocks([[tall, a_col1, b_col1], [b_row, _zeros(1, 2)]]),
    }


def family_direct(seq: Sequence[int], n: int) -> FamilyRow:
    """
    Los nueve determinantes de índice n por eliminación exacta

    Args:
        seq: Prefijo de longitud >= 2n + 3
        n: Índice (>= 1)

    Returns:
        FamilyRow con los valores exactos
    """
    matrices = family_matrices(seq, n)
    return FamilyRow.from_values(n, {name: det_exact(matrices[name]) for name in FAMILY_NAMES})


def family_direct_mod2(seq: Sequence[int], n: int) -> Dict[str, int]:
    """Paridades de las nueve familias por eliminación sobre GF(2)"""
    matrices = family_matrices(seq, n)
    return {name: det_mod2(BitMatrix.from_int_matrix(matrices[name])) for name in FAMILY_NAMES}


@dataclass(frozen=True)
class GeneratorLayout:
    """Familia_n = sign(n) * menor director de orden n + offset"""
    offset: int
    sign: Callable[[int], int]
    entry: Callable[[Sequence[int], int, int], int]


def _alpha_at(i: int) -> int:
    return 1 - (i & 1)


def _beta_at(i: int) -> int:
    return i & 1


def _plain(seq, i, j):
    return seq[i + j]


def _one_border(border_row, border_col):
    # [[0, border_row], [border_col^t, H]]
    def entry(seq, i, j):
        if i == 0:
            return 0 if j == 0 else border_row(j - 1)
        if j == 0:
            return border_col(i - 1)
        return seq[i + j - 2]
    return entry


def _b_entry(seq, i, j):
    # [[0, 0, alpha], [0, 0, beta], [alpha^t, beta^t, H]]
    if i < 2:
        if j < 2:
            return 0
        return _alpha_at(j - 2) if i == 0 else _beta_at(j - 2)
    if j == 0:
        return _alpha_at(i - 2)
    if j == 1:
        return _beta_at(i - 2)
    return seq[i + j - 4]


def _column_first(border_col):
    # [border_col^t | H]
    def entry(seq, i, j):
        return border_col(i) if j == 0 else seq[i + j - 1]
    return entry


def _top_row(border_row):
    # [[0, 0, border_row], [alpha^t, beta^t, H]]
    def entry(seq, i, j):
        if i == 0:
            return 0 if j < 2 else border_row(j - 2)
        if j == 0:
            return _alpha_at(i - 1)
        if j == 1:
            return _beta_at(i - 1)
        return seq[i + j - 3]
    return entry


def _even_sign(n: int) -> int:
    return 1


def _power_sign(n: int) -> int:
    return -1 if n & 1 else 1


def _power_sign_next(n: int) -> int:
    return -_power_sign(n)


GENERATOR_LAYOUTS: Dict[str, GeneratorLayout] = {
    "a": GeneratorLayout(0, _even_sign, _plain),
    "b": GeneratorLayout(2, _even_sign, _b_entry),
    "c": GeneratorLayout(1, _even_sign, _one_border(_alpha_at, _alpha_at)),
    "d": GeneratorLayout(1, _even_sign, _one_border(_beta_at, _beta_at)),
    "e": GeneratorLayout(1, _even_sign, _one_border(_alpha_at, _beta_at)),
    "g": GeneratorLayout(1, _power_sign, _column_first(_alpha_at)),
    "h": GeneratorLayout(1, _power_sign, _column_first(_beta_at)),
    "x": GeneratorLayout(2, _power_sign_next, _top_row(_alpha_at)),
    "y": GeneratorLayout(2, _power_sign_next, _top_row(_beta_at)),
}


def generator_matrix(seq: Sequence[int], family: str, n_max: int) -> IntMatrix:
    """
    Matriz cuyos menores directores dan la familia para n = 1..n_max

    Raises:
        LengthError: Si el prefijo no alcanza para n_max
    """
    _check_prefix(seq, n_max)
    layout = GENERATOR_LAYOUTS[family]
    size = n_max + layout.offset
    return IntMatrix(
        size,
        size,
        tuple(int(layout.entry(seq, i, j)) for i in range(size) for j in range(size)),
    )


def family_table_mod2(seq: Sequence[int], n_max: int) -> Dict[str, np.ndarray]:
    """
    Paridades de las nueve familias para n = 1..n_max

    Returns:
        familia -> arreglo uint8 cuya entrada n - 1 es la paridad en n
    """
    table: Dict[str, np.ndarray] = {}
    for family in FAMILY_NAMES:
        layout = GENERATOR_LAYOUTS[family]
        minors = leading_minors_mod2(BitMatrix.from_int_matrix(generator_matrix(seq, family, n_max)))
        table[family] = minors[layout.offset:layout.offset + n_max].copy()
        logger.debug("Paridades de la familia %s calculadas hasta n=%d", family, n_max)
    return table


def hankel_minors_exact(seq: Sequence[int], n_max: int) -> List[int]:
    """
    H_1 .. H_{n_max} exactos

    Usa los menores directores sin pivoteo y, tras un menor nulo, recurre
    a determinantes individuales.
    """
    if len(seq) < 2 * n_max - 1:
        raise LengthError(
            f"H_{n_max} necesita un prefijo de longitud {2 * n_max - 1}",
            required=2 * n_max - 1,
            available=len(seq),
        )
    minors = leading_minors_exact(hankel_block(seq, 0, n_max, n_max))
    if len(minors) < n_max or (minors and minors[-1] == 0):
        logger.warning("Menor de Hankel nulo en n=%d; se calculan los siguientes por separado", len(minors))
        for n in range(len(minors) + 1, n_max + 1):
            minors.append(det_exact(hankel_block(seq, 0, n, n)))
    return minors[:n_max]


def _family_row_worker(args: Tuple[Tuple[int, ...], int]) -> FamilyRow:
    seq, n = args
    return family_direct(seq, n)


def family_table(seq: Sequence[int], n_max: int, jobs: int = 1) -> List[FamilyRow]:
    """
    Filas exactas para n = 1..n_max, ordenadas por n

    Args:
        seq: Prefijo de longitud >= 2 n_max + 3
        n_max: Índice máximo
        jobs: Procesos en paralelo (1 calcula en línea)
    """
    _check_prefix(seq, n_max)
    values = tuple(int(v) for v in seq)
    tasks = [(values, n) for n in range(1, n_max + 1)]
    logger.info("Calculando familias exactas hasta n=%d con %d procesos", n_max, jobs)
    if jobs <= 1:
        rows = [_family_row_worker(task) for task in tasks]
    else:
        # Los índices grandes primero para equilibrar la carga
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_family_row_worker, reversed(tasks), chunksize=1))
    return sorted(rows, key=lambda r: r.n)
