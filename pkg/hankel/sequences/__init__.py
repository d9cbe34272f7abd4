"""Automatic sequences module"""
from hankel.sequences.generators import (
    CANTOR_MORPHISM,
    PAPERFOLDING_MORPHISM,
    SEQUENCE_ALIASES,
    THUE_MORSE_MORPHISM,
    coefficient_bound,
    fixed_point_word,
    get_sequence,
    morphic_prefix,
    paperfolding_closed,
    prefix,
)
from hankel.sequences.functional_equation import (
    EquationCheck,
    FunctionalEquation,
    check_functional_equation,
    equation_rhs,
    cantor_equation,
    paperfolding_equation,
    thue_morse_equation,
)

__all__ = [
    "CANTOR_MORPHISM",
    "PAPERFOLDING_MORPHISM",
    "SEQUENCE_ALIASES",
    "THUE_MORSE_MORPHISM",
    "coefficient_bound",
    "fixed_point_word",
    "get_sequence",
    "morphic_prefix",
    "paperfolding_closed",
    "prefix",
    "EquationCheck",
    "FunctionalEquation",
    "check_functional_equation",
    "equation_rhs",
    "cantor_equation",
    "paperfolding_equation",
    "thue_morse_equation",
]
