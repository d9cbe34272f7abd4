"""
Pruebas de determinantes exactos, GF(2) y estructura de bloques
"""
import numpy as np
import pytest

from hankel.exceptions import LengthError, OracleScopeError, ShapeError
from hankel.linalg import (
    BitMatrix,
    IntMatrix,
    alpha,
    beta,
    conjugate_by_U,
    det_cofactor_oracle,
    det_exact,
    det_mod2,
    hankel_block,
    leading_minors_exact,
    leading_minors_mod2,
    u_matrix,
)


@pytest.fixture(scope="module")
def random_corpus():
    """1000 matrices aleatorias con entradas en {-1, 0, 1} y dimensión <= 7"""
    rng = np.random.default_rng(20240611)
    corpus = []
    for _ in range(1000):
        size = int(rng.integers(1, 8))
        corpus.append(IntMatrix.from_rows(rng.integers(-1, 2, size=(size, size)).tolist()))
    return corpus


def test_det_small_examples():
    assert det_exact(IntMatrix.from_rows([[2, 1], [1, 1]])) == 1
    assert det_exact(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_exact(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 0
    assert det_exact(IntMatrix.zeros(0, 0)) == 1


def test_det_needs_pivoting():
    matrix = IntMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert det_exact(matrix) == -1
    assert det_cofactor_oracle(matrix) == -1


def test_det_exact_big_integers():
    matrix = IntMatrix.from_rows([[10 ** 30, 1], [1, 10 ** 30]])
    assert det_exact(matrix) == 10 ** 60 - 1


def test_det_exact_matches_oracle(random_corpus):
    for matrix in random_corpus:
        assert det_exact(matrix) == det_cofactor_oracle(matrix)


def test_det_mod2_matches_exact_parity(random_corpus):
    for matrix in random_corpus:
        assert det_mod2(BitMatrix.from_int_matrix(matrix)) == det_exact(matrix) % 2


def test_oracle_scope():
    with pytest.raises(OracleScopeError):
        det_cofactor_oracle(IntMatrix.identity(9))


def test_non_square_rejected():
    with pytest.raises(ShapeError):
        det_exact(IntMatrix.zeros(2, 3))
    with pytest.raises(ShapeError):
        det_mod2(BitMatrix.from_array([[1, 0, 1]]))


def test_leading_minors_exact_stop_at_zero():
    matrix = IntMatrix.from_rows([[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    assert leading_minors_exact(matrix) == [1, 0]


def test_leading_minors_exact_match_direct():
    rng = np.random.default_rng(7)
    for _ in range(50):
        size = int(rng.integers(1, 10))
        matrix = IntMatrix.from_rows(rng.integers(-3, 4, size=(size, size)).tolist())
        minors = leading_minors_exact(matrix)
        for t, value in enumerate(minors, start=1):
            assert value == det_exact(matrix.submatrix(0, t, 0, t))


def test_leading_minors_mod2_match_direct():
    rng = np.random.default_rng(11)
    for _ in range(200):
        size = int(rng.integers(1, 20))
        matrix = IntMatrix.from_rows(rng.integers(0, 2, size=(size, size)).tolist())
        parities = leading_minors_mod2(BitMatrix.from_int_matrix(matrix))
        expected = [det_exact(matrix.submatrix(0, t, 0, t)) % 2 for t in range(1, size + 1)]
        assert parities.tolist() == expected


def test_leading_minors_mod2_paperfolding(paperfolding):
    matrix = hankel_block(paperfolding, 0, 40, 40)
    parities = leading_minors_mod2(BitMatrix.from_int_matrix(matrix))
    expected = [det_exact(matrix.submatrix(0, t, 0, t)) % 2 for t in range(1, 41)]
    assert parities.tolist() == expected


def test_hankel_block(paperfolding):
    block = hankel_block(paperfolding, 0, 2, 2)
    assert block.to_rows() == [[1, 1], [1, 0]]
    assert det_exact(block) == -1
    with pytest.raises(LengthError):
        hankel_block([1, 1, 0], 0, 3, 3)


def test_u_matrix_conjugation_is_permutation():
    matrix = IntMatrix.from_rows([[i * 5 + j for j in range(5)] for i in range(5)])
    U = u_matrix(5)
    assert U.transpose() @ matrix @ U == matrix.permuted((0, 2, 4, 1, 3))


@pytest.mark.parametrize("odd_case", [False, True])
def test_conjugation_block_structure(paperfolding, odd_case):
    for n in range(1, 16):
        result = conjugate_by_U(paperfolding, n, odd_case)
        assert result.holds, result.to_dict()


def test_conjugation_detects_other_sequences():
    values = [1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0]
    assert not conjugate_by_U(values, 2).holds


@pytest.mark.slow
@pytest.mark.parametrize("odd_case", [False, True])
def test_conjugation_block_structure_acceptance(paperfolding, odd_case):
    for n in range(1, 201):
        assert conjugate_by_U(paperfolding, n, odd_case).holds, n


def test_det_invariant_under_transpose(random_corpus):
    for matrix in random_corpus:
        assert det_exact(matrix.transpose()) == det_exact(matrix)


def test_det_invariant_under_symmetric_permutation(random_corpus):
    rng = np.random.default_rng(3)
    for matrix in random_corpus:
        perm = tuple(int(i) for i in rng.permutation(matrix.rows))
        assert det_exact(matrix.permuted(perm)) == det_exact(matrix)


def test_u_matrix_is_orthogonal():
    for n in range(1, 12):
        U = u_matrix(n)
        assert U.transpose() @ U == IntMatrix.identity(n)
        assert det_exact(U) ** 2 == 1


@pytest.mark.parametrize("n", [0, 1, 2, 7, 10])
def test_alpha_beta_partition(n):
    assert all(a + b == 1 for a, b in zip(alpha(n), beta(n)))
    assert len(alpha(n)) == len(beta(n)) == n
    assert alpha(n)[:2] == (1, 0)[:n]
    assert beta(n) == tuple(i % 2 for i in range(n))
