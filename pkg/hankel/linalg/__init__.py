"""Exact linear algebra module"""
from hankel.linalg.matrix import BitMatrix, IntMatrix
from hankel.linalg.determinants import (
    ORACLE_MAX_DIM,
    det_cofactor_oracle,
    det_exact,
    leading_minors_exact,
)
from hankel.linalg.gf2 import det_mod2, gf2_inverse, leading_minors_mod2
from hankel.linalg.structure import (
    ConjugationResult,
    alpha,
    beta,
    column,
    conjugate_by_U,
    hankel_block,
    row,
    struct_a,
    struct_b,
    u_matrix,
    u_permutation,
)

__all__ = [
    "BitMatrix",
    "IntMatrix",
    "ORACLE_MAX_DIM",
    "det_cofactor_oracle",
    "det_exact",
    "leading_minors_exact",
    "det_mod2",
    "gf2_inverse",
    "leading_minors_mod2",
    "ConjugationResult",
    "alpha",
    "beta",
    "column",
    "conjugate_by_U",
    "hankel_block",
    "row",
    "struct_a",
    "struct_b",
    "u_matrix",
    "u_permutation",
]
