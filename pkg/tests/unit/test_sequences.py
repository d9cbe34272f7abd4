"""
Pruebas de generadores de sucesiones y ecuaciones funcionales
"""
from fractions import Fraction

import pytest

from hankel.exceptions import ConstructionError, DegenerateEvaluationError, PreconditionError, UsageError
from hankel.models import MorphicSpec, SequenceKind, SequenceSpec
from hankel.pade import IntPoly
from hankel.sequences import (
    FunctionalEquation,
    cantor_equation,
    check_functional_equation,
    coefficient_bound,
    get_sequence,
    morphic_prefix,
    paperfolding_closed,
    prefix,
    thue_morse_equation,
)
from tests.conftest import PAPER_PREFIX


def test_paperfolding_matches_known_prefix():
    assert "".join(map(str, paperfolding_closed(15))) == PAPER_PREFIX


def test_closed_form_and_morphic_agree():
    closed = prefix(get_sequence("paperfolding-closed"), 10_000)
    morphic = prefix(get_sequence("paperfolding-morphic"), 10_000)
    assert closed == morphic


def test_recursive_definition_holds():
    values = paperfolding_closed(2000)
    for j in range(500):
        assert values[4 * j] == 1
        assert values[4 * j + 2] == 0
        assert values[2 * j + 1] == values[j]


def test_thue_morse_pm1():
    values = prefix(get_sequence("thue-morse-pm1"), 64)
    assert values[:4] == [1, -1, -1, 1]
    for n in range(32):
        assert values[2 * n] == values[n]
        assert values[2 * n + 1] == -values[n]


def test_cantor_prefix():
    values = prefix(get_sequence("cantor"), 9)
    assert values == [1, 0, 1, 0, 0, 0, 1, 0, 1]


def test_empty_prefix():
    assert prefix(get_sequence("paperfolding"), 0) == []
    assert prefix(get_sequence("thue-morse-pm1"), 0) == []


def test_unknown_sequence_is_usage_error():
    with pytest.raises(UsageError):
        get_sequence("fibonacci")


def test_prefix_is_deterministic():
    spec = get_sequence("paperfolding-morphic")
    assert prefix(spec, 300) == prefix(spec, 300)
    assert prefix(spec, 100) == prefix(spec, 300)[:100]


def test_custom_morphic_requires_growth():
    spec = MorphicSpec(alphabet=("a", "b"), morphism={"a": "a", "b": "b"}, coding={"a": 1, "b": 0}, seed="a")
    with pytest.raises(ConstructionError):
        morphic_prefix(spec, 5)


def test_custom_morphic_rejects_non_prolongable_seed():
    with pytest.raises(ConstructionError):
        MorphicSpec(alphabet=("a", "b"), morphism={"a": "ba", "b": "ab"}, coding={"a": 1, "b": 0}, seed="a")


def test_custom_morphic_prefix():
    spec = MorphicSpec(alphabet=("a", "b"), morphism={"a": "ab", "b": "ba"}, coding={"a": 0, "b": 1}, seed="a")
    custom = SequenceSpec(SequenceKind.CUSTOM_MORPHIC, spec)
    assert prefix(custom, 8) == [0, 1, 1, 0, 1, 0, 0, 1]


def test_paperfolding_equation_holds(paperfolding_spec, fe):
    result = check_functional_equation(paperfolding_spec, fe, 4096)
    assert result.holds
    assert result.first_mismatch is None


@pytest.mark.parametrize("fe_factory", [thue_morse_equation, cantor_equation])
def test_other_generating_functions_satisfy_their_equation(fe_factory):
    equation = fe_factory()
    result = check_functional_equation(equation.sequence, equation, 4096)
    assert result.holds
    assert result.first_mismatch is None


def test_other_equation_constants():
    tm = thue_morse_equation()
    assert (tm.alpha, tm.beta, tm.gamma, tm.s, tm.eta, tm.k) == (0, 0, 1, 0, 1, 2)
    assert tm.zeta(2) == Fraction(1, 2)
    cantor = cantor_equation()
    assert (cantor.alpha, cantor.beta, cantor.gamma, cantor.s, cantor.eta, cantor.k) == (0, 0, 2, 0, 1, 3)
    assert cantor.zeta(2) == Fraction(5, 4)


def test_equations_are_not_interchangeable():
    result = check_functional_equation(get_sequence("cantor"), thue_morse_equation(), 64)
    assert not result.holds
    assert result.first_mismatch == 1


@pytest.mark.parametrize("name", ["paperfolding-closed", "paperfolding-morphic", "thue-morse-pm1", "cantor"])
def test_coefficient_bound(name):
    spec = get_sequence(name)
    assert coefficient_bound(spec) == 1
    assert max(abs(value) for value in prefix(spec, 500)) == 1


def test_coefficient_bound_custom_coding():
    spec = MorphicSpec(alphabet=("a", "b"), morphism={"a": "ab", "b": "ba"}, coding={"a": 3, "b": -5}, seed="a")
    assert coefficient_bound(SequenceSpec(SequenceKind.CUSTOM_MORPHIC, spec)) == 5


def test_wrong_equation_reports_first_mismatch(paperfolding_spec):
    wrong = FunctionalEquation(IntPoly([1]), IntPoly([1, 0, 0, -1]), IntPoly([0, 1]), 2)
    result = check_functional_equation(paperfolding_spec, wrong, 50)
    assert not result.holds
    assert result.first_mismatch == 3


def test_equation_constants(fe):
    assert (fe.alpha, fe.beta, fe.gamma, fe.s, fe.eta) == (0, 4, 1, 1, 1)
    assert fe.Y(11) == 16
    assert fe.zeta(2) == 1


def test_equation_validation():
    with pytest.raises(PreconditionError):
        FunctionalEquation(IntPoly([1]), IntPoly([0, 1]), IntPoly([0, 1]), 2)
    with pytest.raises(PreconditionError):
        FunctionalEquation(IntPoly([1]), IntPoly([1]), IntPoly([]), 2)
    with pytest.raises(PreconditionError):
        FunctionalEquation(IntPoly([1]), IntPoly([1]), IntPoly([0, 1]), 1)


def test_zeta_refuses_root_of_c():
    fe = FunctionalEquation(IntPoly([1]), IntPoly([1]), IntPoly([-1, 2]), 2)
    with pytest.raises(DegenerateEvaluationError):
        fe.zeta(2)
