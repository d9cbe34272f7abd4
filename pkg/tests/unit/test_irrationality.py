"""
Pruebas de convergentes, encierros del error y cotas del exponente
"""
from fractions import Fraction

import pytest

from hankel.exceptions import (
    BoundInapplicableError,
    DegenerateOrderError,
    DomainError,
    EmptyWindowError,
    PreconditionError,
    UnsupportedAlphabetError,
)
from hankel.irrationality import (
    DirectAdmissibility,
    EnclosureCache,
    bound_ladder,
    build_convergent,
    check_composed_error,
    denominator_growth,
    effective_exponent,
    error_bracket,
    iterate_equation,
    lemma3_bound,
    lemma4_ratio,
    m0_threshold,
    majorant_radius,
    merged_bound,
    pade_error_series,
    paperfolding_admissibility,
    predicted_sandwich,
    rho_delta,
    tail_bound,
    tail_constant,
    theorem1_single_l_bound,
    xi_enclosure,
)
from hankel.models import Certification, SandwichStatus
from hankel.pade import IntPoly, RatSeries, approximant_series, pade
from hankel.sequences import cantor_equation, thue_morse_equation


@pytest.fixture(scope="module")
def ap11(paperfolding):
    return pade(RatSeries.from_sequence(paperfolding, 26), 11)


@pytest.fixture(scope="module")
def records11(fe, ap11):
    m0 = m0_threshold(fe, ap11)
    cache = EnclosureCache()
    records = []
    for m in range(1, 6):
        record = error_bracket(build_convergent(fe, ap11, m, 2), fe, ap11, cache=cache, m0=m0)
        records.append(record)
    return records


class TestIteration:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_paperfolding_iterates(self, fe, m):
        iterated = iterate_equation(fe, m)
        assert iterated.C_m == IntPoly.monomial(2 ** m - 1)
        assert iterated.B_m.degree == 4 * (2 ** m - 1)
        assert iterated.series_checked_to == max(8 * (2 ** m - 1), 16)

    @pytest.mark.parametrize("fe_factory", [thue_morse_equation, cantor_equation])
    def test_other_equations_iterate(self, fe_factory):
        equation = fe_factory()
        iterated = iterate_equation(equation, 4)
        assert iterated.A_m.is_zero()
        assert iterated.B_m == IntPoly.constant(1)
        assert iterated.series_checked_to == 16

    def test_depth_must_be_positive(self, fe):
        with pytest.raises(DomainError):
            iterate_equation(fe, 0)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_composed_error(self, fe, ap11, m):
        assert check_composed_error(fe, ap11, m, 300) is None


class TestEnclosure:
    def test_partial_sum_and_tail(self, paperfolding):
        enclosure = xi_enclosure(paperfolding, 2, 4)
        assert (enclosure.lo, enclosure.hi) == (Fraction(13, 8), Fraction(14, 8))
        first = xi_enclosure(paperfolding, 2, 1)
        assert (first.lo, first.hi) == (Fraction(1), Fraction(2))

    def test_width_shrinks(self, paperfolding):
        assert xi_enclosure(paperfolding, 3, 40).width == Fraction(1, 3 ** 39 * 2)

    def test_rejects_non_binary_terms(self):
        with pytest.raises(UnsupportedAlphabetError):
            xi_enclosure([1, -1, 1], 2, 3)

    def test_cache_refines_monotonically(self, paperfolding_spec):
        cache = EnclosureCache()
        fine = cache.get(paperfolding_spec, 2, 100)
        coarse = cache.get(paperfolding_spec, 2, 10)
        assert coarse is fine
        assert cache.hits == 1


class TestConvergents:
    def test_convergent_shape(self, fe, ap11):
        record = build_convergent(fe, ap11, 1, 2)
        assert record.q > 0
        assert record.exponent_base == 32
        assert Fraction(record.p, record.q) == Fraction(record.p_reduced, record.q_reduced)

    def test_sandwich_exponent(self, fe, ap11):
        assert predicted_sandwich(fe, ap11, 6, 2).exponent == 1471

    def test_sandwich_holds_from_m0(self, records11):
        for record in records11:
            assert record.err_lo > 0
            assert record.err_lo <= record.err_hi
            if record.m >= record.m0:
                assert record.sandwich is SandwichStatus.PASS
            else:
                assert record.sandwich is SandwichStatus.NOT_APPLICABLE

    def test_tail_constant_positive(self, fe, ap11):
        assert tail_constant(fe, ap11) > 0

    def test_majorant_radius(self):
        assert majorant_radius((1, -1)) == Fraction(1, 2)
        assert majorant_radius((1, 4)) == Fraction(1, 8)
        with pytest.raises(PreconditionError):
            majorant_radius((2, 1))

    def test_rational_part_majorized(self, fe, ap11):
        bound = tail_bound(fe, ap11)
        series = approximant_series(ap11, 300)
        for i in range(300):
            assert abs(series[i]) <= bound.majorant / bound.radius ** i

    def test_tail_bound_dominates_error(self, fe, ap11):
        bound = tail_bound(fe, ap11)
        y = bound.radius / 2
        error = pade_error_series(fe, ap11, 400)
        assert error[bound.start - 1] == ap11.h
        observed = sum(
            (abs(Fraction(error[i])) * y ** (i - bound.start) for i in range(bound.start, 400)),
            Fraction(0),
        )
        assert observed <= bound.constant(y)
        assert observed <= tail_bound(fe, ap11, tail_order=1).constant(y)
        assert bound.constant(y / 2) <= bound.constant(y)

    def test_tail_bound_domain(self, fe, ap11):
        bound = tail_bound(fe, ap11)
        with pytest.raises(DomainError):
            bound.constant(bound.radius)
        with pytest.raises(DomainError):
            bound.constant(0)

    def test_m0_is_minimal(self, fe, ap11):
        bound = tail_bound(fe, ap11)
        m0 = m0_threshold(fe, ap11)
        half_h = abs(ap11.h) / 2
        y = Fraction(1, 2 ** (2 ** m0))
        assert bound.constant(y) * y <= half_h
        for m in range(1, m0):
            y = Fraction(1, 2 ** (2 ** m))
            assert y >= bound.radius or bound.constant(y) * y > half_h

    def test_invalid_base(self, fe, ap11):
        with pytest.raises(DomainError):
            build_convergent(fe, ap11, 1, 1)

    def test_degenerate_h_rejected(self, fe, paperfolding):
        geometric = RatSeries([1, -1], 10).reciprocal()
        ap = pade(geometric, 1)
        with pytest.raises(DegenerateOrderError):
            build_convergent(fe, ap, 1, 2)

    def test_denominator_growth(self, fe, records11):
        growth = denominator_growth(records11, fe.k)
        assert growth.holds
        assert growth.scaled_min > 0

    def test_effective_exponent_brackets_value(self, records11):
        exponent = effective_exponent(records11[-1])
        assert exponent.lo <= exponent.value <= exponent.hi
        assert 1.2 < exponent.value < 1.6

    def test_effective_exponent_needs_bracket(self, fe, ap11):
        with pytest.raises(PreconditionError):
            effective_exponent(build_convergent(fe, ap11, 1, 2))


class TestBounds:
    def test_rho_delta(self, fe):
        assert rho_delta(fe, 11) == (Fraction(23, 16), Fraction(11, 8))

    def test_single_l_bounds(self, fe):
        assert theorem1_single_l_bound(fe, 11).mu_bound == Fraction(23, 3)
        assert theorem1_single_l_bound(fe, 21).mu_bound == Fraction(43, 8)

    def test_single_l_inapplicable(self, fe):
        with pytest.raises(BoundInapplicableError) as info:
            theorem1_single_l_bound(fe, 5)
        assert info.value.details["minimal_l"] == 6

    def test_certification(self, fe, paperfolding):
        bound = theorem1_single_l_bound(fe, 11, paperfolding_admissibility())
        assert bound.certification is Certification.THEOREM
        direct = theorem1_single_l_bound(fe, 12, DirectAdmissibility(paperfolding))
        assert direct.certification is Certification.VERIFIED_DIRECT
        with pytest.raises(PreconditionError):
            theorem1_single_l_bound(fe, 12, paperfolding_admissibility())

    def test_ladder_decreasing(self, fe):
        ladder = bound_ladder(fe, 11, 101, 10, paperfolding_admissibility())
        values = [bound.mu_bound for bound in ladder]
        assert len(values) == 10
        assert values[0] == Fraction(23, 3)
        assert all(b < a for a, b in zip(values, values[1:]))
        assert all(value > 2 * fe.k for value in values)

    def test_lemma3_bound(self):
        assert lemma3_bound(Fraction(1, 2), Fraction(1, 4), 2) == 12
        assert isinstance(lemma3_bound(0.5, 0.25, 2), float)
        with pytest.raises(DomainError):
            lemma3_bound(Fraction(1, 4), Fraction(1, 2), 2)
        with pytest.raises(DomainError):
            lemma3_bound(1, 0, 2)

    def test_merged_bounds(self, fe):
        admissibility = paperfolding_admissibility()
        assert float(merged_bound(fe, 10, admissibility).mu_bound) == pytest.approx(2.27, abs=0.01)
        assert float(merged_bound(fe, 13, admissibility).mu_bound) == pytest.approx(2.034, abs=0.005)
        values = [merged_bound(fe, L, admissibility).mu_bound for L in range(8, 14)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_merged_empty_window(self, fe):
        with pytest.raises(EmptyWindowError):
            merged_bound(fe, 3, paperfolding_admissibility())

    def test_merged_single_admissible(self, fe):
        bound = merged_bound(fe, 4, paperfolding_admissibility())
        assert bound.admissible == [11]
        assert bound.epsilon == 1
        assert bound.notes

    def test_lemma4_ratio(self):
        result = lemma4_ratio([4, 6], 2, 3, 1)
        assert result.bound == Fraction(7, 4)
        assert result.empirical_max == Fraction(3, 2)
        assert result.holds

    def test_lemma4_sparse_window(self):
        result = lemma4_ratio([17, 21, 25, 29], 2, 5, 4)
        assert result.bound == Fraction(7, 4)
        assert result.empirical_max == Fraction(21, 17)
        assert result.holds

    def test_lemma4_full_window(self):
        result = lemma4_ratio(range(16, 32), 2, 5, 1)
        assert result.bound == Fraction(19, 16)
        assert result.empirical_max == Fraction(17, 16)
        assert result.holds

    def test_lemma4_coverage(self):
        with pytest.raises(PreconditionError):
            lemma4_ratio([4], 2, 3, 1)
        with pytest.raises(PreconditionError):
            lemma4_ratio([3, 6], 2, 3, 1)


@pytest.mark.slow
def test_acceptance_sandwich_and_exponents(fe, ap11):
    m0 = m0_threshold(fe, ap11)
    cache = EnclosureCache()
    records = []
    for m in range(1, 9):
        record = error_bracket(build_convergent(fe, ap11, m, 2), fe, ap11, cache=cache, m0=m0)
        assert record.error_exponent == 22 * 2 ** m + 2 ** m - 1
        if m >= m0:
            assert record.sandwich is SandwichStatus.PASS
        records.append(record)
    exponent = effective_exponent(records[-1])
    assert 1.375 - 0.05 <= exponent.lo
    assert exponent.hi <= 1.4375 + 0.05
    assert denominator_growth(records, fe.k).holds
