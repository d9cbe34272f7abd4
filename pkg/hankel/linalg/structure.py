"""
Bloques de Hankel, vectores alpha/beta, matrices A/B y permutación U

Índices 0-based: alpha tiene 1 en las posiciones pares y beta en las
impares. U ordena primero los índices pares y luego los impares.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from hankel.exceptions import BlockMismatchError, LengthError
from hankel.linalg.matrix import IntMatrix


def alpha(n: int) -> Tuple[int, ...]:
    return tuple(1 - (i & 1) for i in range(n))


def beta(n: int) -> Tuple[int, ...]:
    return tuple(i & 1 for i in range(n))


def column(vector: Sequence[int]) -> IntMatrix:
    return IntMatrix(len(vector), 1, tuple(vector))


def row(vector: Sequence[int]) -> IntMatrix:
    return IntMatrix(1, len(vector), tuple(vector))


def struct_a(m: int, n: int) -> IntMatrix:
    """Columnas alternadas alpha^t(m), beta^t(m), empezando por alpha"""
    return IntMatrix(m, n, tuple(1 - ((i + j) & 1) for i in range(m) for j in range(n)))


def struct_b(m: int, n: int) -> IntMatrix:
    """Columnas alternadas beta^t(m), alpha^t(m), empezando por beta"""
    return IntMatrix(m, n, tuple((i + j) & 1 for i in range(m) for j in range(n)))


def u_permutation(n: int) -> Tuple[int, ...]:
    """Índices pares y luego impares"""
    return tuple(range(0, n, 2)) + tuple(range(1, n, 2))


def u_matrix(n: int) -> IntMatrix:
    """Matriz de permutación cuya columna c es e_{perm[c]}"""
    perm = u_permutation(n)
    entries = [0] * (n * n)
    for c, target in enumerate(perm):
        entries[target * n + c] = 1
    return IntMatrix(n, n, tuple(entries))


def hankel_block(seq: Sequence[int], p: int, m: int, n: int) -> IntMatrix:
    """
    Ventana de Hankel m x n con entrada (i, j) = seq[p + i + j]

    Raises:
        LengthError: Si el prefijo es demasiado corto
    """
    required = p + m + n - 1 if m and n else 0
    if len(seq) < required:
        raise LengthError(
            f"Se necesita un prefijo de longitud {required}, hay {len(seq)}",
            required=required,
            available=len(seq),
        )
    return IntMatrix(m, n, tuple(int(seq[p + i + j]) for i in range(m) for j in range(n)))


@dataclass(frozen=True)
class BlockMismatch:
    """Primera entrada distinta entre U^t H U y la descomposición esperada"""
    i: int
    j: int
    actual: int
    expected: int


@dataclass(frozen=True)
class ConjugationResult:
    """U^t H U junto con la descomposición por bloques esperada"""
    n: int
    odd_case: bool
    conjugated: IntMatrix
    expected: IntMatrix
    mismatch: Optional[BlockMismatch]

    @property
    def holds(self) -> bool:
        return self.mismatch is None

    def to_dict(self):
        return {
            "n": self.n,
            "odd_case": self.odd_case,
            "holds": self.holds,
            "first_mismatch": None if self.mismatch is None else vars(self.mismatch),
        }


def conjugate_by_U(seq: Sequence[int], n: int, odd_case: bool = False, strict: bool = False) -> ConjugationResult:
    """
    Conjuga la matriz de Hankel de orden 2n (o 2n+1) por U

    Caso par: [[A_n, f_n], [f_n, B_n]]. Caso impar:
    [[A_{n+1}, f_{n+1,n}], [f_{n,n+1}, B_n]].

    Args:
        seq: Prefijo de la sucesión
        n: Índice
        odd_case: Usa el orden 2n+1
        strict: Lanza BlockMismatchError si la igualdad falla

    Returns:
        ConjugationResult con la primera diferencia, si la hay
    """
    size = 2 * n + 1 if odd_case else 2 * n
    conjugated = hankel_block(seq, 0, size, size).permuted(u_permutation(size))
    top = n + 1 if odd_case else n
    bottom = n
    expected = IntMatrix.from_blocks(
        [
            [struct_a(top, top), hankel_block(seq, 0, top, bottom)],
            [hankel_block(seq, 0, bottom, top), struct_b(bottom, bottom)],
        ]
    )
    mismatch = None
    for index, (actual, wanted) in enumerate(zip(conjugated.entries, expected.entries)):
        if actual != wanted:
            mismatch = BlockMismatch(index // size, index % size, actual, wanted)
            break
    if mismatch is not None and strict:
        raise BlockMismatchError(
            f"U^t H U difiere en ({mismatch.i}, {mismatch.j})",
            vars(mismatch),
        )
    return ConjugationResult(n, odd_case, conjugated, expected, mismatch)
