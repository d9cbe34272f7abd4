"""
Determinantes exactos: eliminación sin fracciones y oráculo de cofactores
"""
from typing import List

from hankel.exceptions import OracleScopeError, ShapeError
from hankel.linalg.matrix import IntMatrix


ORACLE_MAX_DIM = 8


def _require_square(matrix: IntMatrix) -> None:
    if not matrix.is_square:
        raise ShapeError(f"Se requiere una matriz cuadrada, es {matrix.rows}x{matrix.cols}")


def det_exact(matrix: IntMatrix) -> int:
    """
    Determinante exacto por eliminación de Bareiss

    Pivote: primer elemento no nulo de la columna, con seguimiento del
    signo de los intercambios. El determinante de la matriz vacía es 1.

    Args:
        matrix: Matriz cuadrada

    Returns:
        Determinante entero
    """
    _require_square(matrix)
    size = matrix.rows
    if size == 0:
        return 1
    a = matrix.to_rows()
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            if factor == 0:
                for j in range(k + 1, size):
                    row_i[j] = row_i[j] * pivot // previous
            else:
                for j in range(k + 1, size):
                    # División exacta garantizada por la identidad de Sylvester
                    row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[size - 1][size - 1]


def leading_minors_exact(matrix: IntMatrix, limit: int = None) -> List[int]:
    """
    Menores principales directores por Bareiss sin pivoteo

    Se detiene en el primer menor nulo (incluido): a partir de ahí la
    eliminación sin pivoteo no puede continuar.

    Args:
        matrix: Matriz cuadrada
        limit: Número máximo de menores a calcular

    Returns:
        Lista [M_1, M_2, ...] con M_t el determinante del bloque t x t
    """
    _require_square(matrix)
    size = matrix.rows if limit is None else min(limit, matrix.rows)
    a = [list(matrix.row(i)[:size]) for i in range(size)]
    minors: List[int] = []
    previous = 1
    for k in range(size):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
        previous = pivot
    return minors


def det_cofactor_oracle(matrix: IntMatrix) -> int:
    """
    Determinante por expansión de Laplace (oráculo independiente)

    Raises:
        OracleScopeError: Si la dimensión supera ORACLE_MAX_DIM
    """
    _require_square(matrix)
    if matrix.rows > ORACLE_MAX_DIM:
        raise OracleScopeError(
            f"El oráculo admite dimensión <= {ORACLE_MAX_DIM}, recibió {matrix.rows}",
            {"dimension": matrix.rows},
        )
    return _laplace(matrix.to_rows())


def _laplace(rows: List[List[int]]) -> int:
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = value * _laplace(minor)
        total += -term if j % 2 else term
    return total
