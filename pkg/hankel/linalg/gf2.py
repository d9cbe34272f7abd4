"""
Determinantes sobre GF(2) con filas empaquetadas en bits
"""
from typing import Optional

import numpy as np

from hankel.exceptions import ShapeError
from hankel.linalg.matrix import BitMatrix


def _pack(matrix: BitMatrix) -> np.ndarray:
    # bit j de la fila r: (P[r, j >> 3] >> (j & 7)) & 1
    return np.packbits(matrix.bits, axis=1, bitorder="little")


def _column(packed: np.ndarray, start: int, col: int) -> np.ndarray:
    return (packed[start:, col >> 3] >> (col & 7)) & 1


def _block(packed: np.ndarray, r0: int, r1: int, c0: int, c1: int) -> np.ndarray:
    cols = np.arange(c0, c1)
    return ((packed[r0:r1][:, cols >> 3] >> (cols & 7).astype(np.uint8)) & 1).astype(np.uint8)


def gf2_inverse(block: np.ndarray) -> Optional[np.ndarray]:
    """
    Inversa de una matriz cuadrada pequeña sobre GF(2)

    Returns:
        La inversa, o None si la matriz es singular
    """
    size = block.shape[0]
    aug = np.concatenate([block % 2, np.eye(size, dtype=np.uint8)], axis=1).astype(np.uint8)
    for col in range(size):
        pivots = np.nonzero(aug[col:, col])[0]
        if pivots.size == 0:
            return None
        pivot = col + pivots[0]
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        rows = np.nonzero(aug[:, col])[0]
        rows = rows[rows != col]
        aug[rows] ^= aug[col]
    return aug[:, size:]


def det_mod2(matrix: BitMatrix) -> int:
    """
    Determinante sobre GF(2)

    Args:
        matrix: Matriz de bits cuadrada

    Returns:
        0 o 1
    """
    if not matrix.is_square:
        raise ShapeError(f"Se requiere una matriz cuadrada, es {matrix.rows}x{matrix.cols}")
    size = matrix.rows
    if size == 0:
        return 1
    packed = _pack(matrix)
    for col in range(size):
        candidates = np.nonzero(_column(packed, col, col))[0]
        if candidates.size == 0:
            return 0
        pivot = col + int(candidates[0])
        if pivot != col:
            packed[[col, pivot]] = packed[[pivot, col]]
        below = col + 1 + np.nonzero(_column(packed, col + 1, col))[0]
        if below.size:
            start = col >> 3
            packed[below, start:] ^= packed[col, start:]
    return 1


def leading_minors_mod2(matrix: BitMatrix) -> np.ndarray:
    """
    Paridades de todos los menores principales directores en una pasada

    Eliminación por bloques con pivotes anticipados: en cada paso se busca
    el menor t tal que el bloque director t x t del complemento de Schur es
    invertible; los menores intermedios son pares y el de orden k + t impar.

    Args:
        matrix: Matriz de bits cuadrada

    Returns:
        Arreglo uint8 cuya entrada i es el menor de orden i + 1 módulo 2
    """
    if not matrix.is_square:
        raise ShapeError(f"Se requiere una matriz cuadrada, es {matrix.rows}x{matrix.cols}")
    size = matrix.rows
    minors = np.zeros(size, dtype=np.uint8)
    packed = _pack(matrix)
    k = 0
    while k < size:
        inverse = None
        step = 0
        for trial in range(1, size - k + 1):
            inverse = gf2_inverse(_block(packed, k, k + trial, k, k + trial))
            if inverse is not None:
                step = trial
                break
        if inverse is None:
            # Todos los menores restantes son pares
            break
        minors[k + step - 1] = 1
        top = k + step
        if top < size:
            lower = _block(packed, top, size, k, top).astype(np.int64)
            coefficients = (lower @ inverse.astype(np.int64)) % 2
            start = k >> 3
            for i in range(step):
                targets = top + np.nonzero(coefficients[:, i])[0]
                if targets.size:
                    packed[targets, start:] ^= packed[k + i, start:]
        k = top
    return minors
