"""
Pruebas de las familias orladas, las identidades y la tabla módulo 2
"""
import pytest

from hankel.exceptions import DependencyError, DomainError, LengthError
from hankel.families import (
    IDENTITIES,
    IDENTITY_BY_NUMBER,
    NEGATED,
    PRINTED,
    family_direct,
    family_direct_mod2,
    family_recurrence,
    family_table,
    family_table_mod2,
    hankel_minors_exact,
    mod2_table_by_recurrence,
    nonvanishing_check,
    required_prefix,
    star_check,
    verify_lemma1,
    verify_prop2,
)
from hankel.models import FAMILY_NAMES, FamilyRow, PROPOSITION2_TABLE
from hankel.sequences import get_sequence, prefix


ROW_1 = FamilyRow(1, a=1, b=0, c=-1, d=0, e=0, g=-1, h=1, x=1, y=0)
ROW_2 = FamilyRow(2, a=-1, b=1, c=0, d=-1, e=1, g=0, h=-1, x=0, y=-1)


@pytest.fixture(scope="module")
def small_table(paperfolding):
    return family_table(paperfolding, 30)


def test_hankel_determinants_first_values(paperfolding):
    assert hankel_minors_exact(paperfolding, 4) == [1, -1, -2, 2]


def test_family_rows_first_values(paperfolding):
    assert family_direct(paperfolding, 1) == ROW_1
    assert family_direct(paperfolding, 2) == ROW_2


def test_family_direct_requires_prefix():
    assert required_prefix(5) == 13
    with pytest.raises(LengthError):
        family_direct([1, 1, 0, 1], 2)


def test_generator_parities_match_direct(paperfolding):
    parities = family_table_mod2(paperfolding, 40)
    for n in range(1, 41):
        direct = family_direct_mod2(paperfolding, n)
        for family in FAMILY_NAMES:
            assert int(parities[family][n - 1]) == direct[family], (family, n)


def test_table_sorted_and_parallel_equal(paperfolding):
    inline = family_table(paperfolding, 8, jobs=1)
    parallel = family_table(paperfolding, 8, jobs=2)
    assert [row.n for row in inline] == list(range(1, 9))
    assert inline == parallel


def test_mod2_table_expected_values():
    assert PROPOSITION2_TABLE.expected("a", 10) == 1
    assert PROPOSITION2_TABLE.expected("a", 3) == 0
    assert PROPOSITION2_TABLE.expected_row(1) == ROW_1.mod2()
    assert PROPOSITION2_TABLE.expected_row(2) == ROW_2.mod2()


def test_identity_catalogue():
    assert len(IDENTITIES) == 18
    assert sorted(IDENTITY_BY_NUMBER) == list(range(1, 19))
    targets = {(identity.family, identity.parity) for identity in IDENTITIES}
    assert targets == {(family, parity) for family in FAMILY_NAMES for parity in (0, 1)}


def test_identities_at_n1_printed(paperfolding):
    rows = {1: ROW_1, 2: ROW_2}
    prediction = family_recurrence(rows, 1)
    direct_2 = family_direct(paperfolding, 2)
    direct_3 = family_direct(paperfolding, 3)
    assert prediction.even["a"] == direct_2.a
    for identity in IDENTITIES:
        target = direct_2 if identity.parity == 0 else direct_3
        variants = identity.variants(1, ROW_1, ROW_2 if identity.uses_next else None)
        assert target.get(identity.family) in (variants[PRINTED], variants[NEGATED]), identity.number


def test_identity_2_printed_at_n1():
    identity = IDENTITY_BY_NUMBER[2]
    assert identity.predict(1, ROW_1, None) == -2


def test_recurrence_requires_rows():
    with pytest.raises(DependencyError):
        family_recurrence({1: ROW_1}, 1)


def test_verify_lemma1(paperfolding, small_table):
    report = verify_lemma1(paperfolding, 30, rows=small_table)
    assert report.passed
    assert len(report.resolutions) == 18
    assert report.resolution(2).variant is not None
    assert all(check.status.value == "pass" for check in report.mod2_checks)


def test_verify_lemma1_detects_wrong_values(paperfolding, small_table):
    broken = [row if row.n != 7 else FamilyRow.from_values(7, {**row.values(), "a": row.a + 2}) for row in small_table]
    report = verify_lemma1(paperfolding, 30, rows=broken)
    assert not report.passed
    failed = {res.identity for res in report.resolutions if res.status.value == "fail"}
    assert 2 in failed


def test_verify_lemma1_domain():
    with pytest.raises(DomainError):
        verify_lemma1([1, 1, 0], 1)


def test_verify_prop2(paperfolding):
    report = verify_prop2(paperfolding, 300)
    assert report.passed
    assert report.to_dict()["deviation_count"] == 0


def test_verify_prop2_requires_ten(paperfolding):
    with pytest.raises(DomainError):
        verify_prop2(paperfolding, 5)


def test_recurrence_parities_follow_table():
    table = mod2_table_by_recurrence(ROW_1.mod2(), 500)
    for n, row in table.items():
        assert row == PROPOSITION2_TABLE.expected_row(n), n


def test_star_check(paperfolding):
    report = star_check(paperfolding, 400, exact_limit=60)
    assert report.passed
    assert report.pairs_checked == 40


def test_nonvanishing_thue_morse():
    values = prefix(get_sequence("thue-morse-pm1"), 120)
    assert nonvanishing_check(values, 50).passed


def test_nonvanishing_cantor_reported():
    values = prefix(get_sequence("cantor"), 60)
    report = nonvanishing_check(values, 20)
    assert report.n_max == 20
    assert all(1 <= n <= 20 for n in report.zero_indices)


@pytest.mark.slow
def test_prop2_acceptance(paperfolding):
    values = prefix(get_sequence("paperfolding"), 4 * 2000 + 8)
    assert verify_prop2(values, 2000).passed
    assert star_check(values, 2000, exact_limit=300).passed


@pytest.mark.slow
def test_lemma1_acceptance():
    values = prefix(get_sequence("paperfolding"), 300)
    report = verify_lemma1(values, 120, jobs=4)
    assert report.passed
