"""Exact bound evaluation, piece decomposition, and the quadratic comparison."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from insdel_lab.bounds import (
    ComparisonReport,
    as_fraction,
    comparison_report,
    hy_crossover_delta,
    hy_crossover_delta_closed_form,
    hy_crossover_root,
    hy_list_size,
    hy_quadratic1,
    hy_quadratic2,
    insertion_bound,
    insertion_bound_piecewise,
    unique_decoding_bound,
)


class TestAsFraction:
    def test_float_uses_decimal_repr(self):
        assert as_fraction(0.9) == Fraction(9, 10)
        assert as_fraction(0.7) == Fraction(7, 10)

    def test_string_and_exact_inputs(self):
        assert as_fraction("3/10") == Fraction(3, 10)
        assert as_fraction("0.85") == Fraction(17, 20)
        assert as_fraction(Fraction(2, 3)) == Fraction(2, 3)
        assert as_fraction(1) == 1


class TestInsertionBound:
    def test_frozen_values(self):
        assert insertion_bound(0.9, 2, 1) == Fraction(17, 15)
        assert insertion_bound(0.9, 2, Fraction(3, 10)) == Fraction(1, 5)
        assert insertion_bound("9/10", 2, "3/10") == Fraction(1, 5)

    def test_zero_at_left_endpoint(self):
        for list_size in (2, 3, 7):
            for delta in (Fraction(1, 3), Fraction(9, 10), Fraction(99, 100)):
                assert insertion_bound(delta, list_size, 1 - delta) == 0

    def test_positive_beyond_left_endpoint(self):
        for list_size in (2, 5):
            delta = Fraction(4, 5)
            for k in range(1, 11):
                x = (1 - delta) + Fraction(k, 10) * delta
                assert insertion_bound(delta, list_size, x) > 0

    def test_matches_naive_max_formula(self):
        # independent evaluation without the integer-arithmetic fast path
        for list_size in (2, 3, 6):
            for dnum in (1, 5, 9):
                delta = Fraction(dnum, 10)
                for k in range(21):
                    x = (1 - delta) + Fraction(k, 20) * delta
                    naive = max(
                        Fraction(2 * list_size - r + 1, list_size + 1) * x
                        - Fraction(list_size, r) * (1 - delta)
                        for r in range(1, list_size + 1)
                    )
                    assert insertion_bound(delta, list_size, x) == naive

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            insertion_bound(0, 2, 1)
        with pytest.raises(ValueError):
            insertion_bound(1, 2, 1)
        with pytest.raises(ValueError):
            insertion_bound(0.9, 1, 1)
        with pytest.raises(ValueError):
            insertion_bound(0.9, 2, Fraction(1, 20))
        with pytest.raises(ValueError):
            insertion_bound(0.9, 2, 2)


class TestPiecewiseDecomposition:
    def test_two_piece_example(self):
        bound = insertion_bound_piecewise(0.9, 2)
        assert bound.r_min == 1
        assert bound.breakpoints() == (Fraction(3, 10),)
        assert [p.r for p in bound.pieces] == [2, 1]
        assert bound.pieces[0].lower == Fraction(1, 10)
        assert bound.pieces[-1].upper == 1
        assert bound.evaluate(1) == Fraction(17, 15)
        assert bound.evaluate(Fraction(3, 10)) == Fraction(1, 5)

    def test_single_piece_condition(self):
        # exactly one piece iff 1 - delta >= (L-1)/(L+1)
        for list_size in range(2, 8):
            for dnum in range(1, 20):
                delta = Fraction(dnum, 20)
                bound = insertion_bound_piecewise(delta, list_size)
                single = len(bound.pieces) == 1
                assert single == (
                    1 - delta >= Fraction(list_size - 1, list_size + 1)
                )
                assert len(bound.pieces) == list_size - bound.r_min + 1

    def test_single_piece_slope_one(self):
        bound = insertion_bound_piecewise(Fraction(1, 10), 2)
        assert len(bound.pieces) == 1
        assert bound.pieces[0].slope == 1
        assert bound.pieces[0].intercept == -Fraction(9, 10)

    def test_evaluate_agrees_with_max_form(self):
        for list_size in (2, 4):
            for delta in (Fraction(1, 3), Fraction(17, 20)):
                bound = insertion_bound_piecewise(delta, list_size)
                for k in range(41):
                    x = (1 - delta) + Fraction(k, 40) * delta
                    assert bound.evaluate(x) == insertion_bound(delta, list_size, x)

    def test_continuity_at_breakpoints(self):
        bound = insertion_bound_piecewise(Fraction(9, 10), 6)
        for left, right in zip(bound.pieces, bound.pieces[1:]):
            assert left.value(left.upper) == right.value(right.lower)

    def test_evaluate_rejects_outside_domain(self):
        bound = insertion_bound_piecewise(0.9, 2)
        with pytest.raises(ValueError):
            bound.evaluate(Fraction(1, 20))
        with pytest.raises(ValueError):
            bound.evaluate(Fraction(11, 10))

    @given(
        st.integers(2, 8),
        st.integers(1, 39),
        st.integers(0, 100),
    )
    def test_max_form_equals_pieces_property(self, list_size, dnum, step):
        delta = Fraction(dnum, 40)
        x = (1 - delta) + Fraction(step, 100) * delta
        bound = insertion_bound_piecewise(delta, list_size)
        assert bound.evaluate(x) == insertion_bound(delta, list_size, x)


class TestUniqueDecoding:
    def test_frozen_value(self):
        assert unique_decoding_bound(0.9, 0.7) == Fraction(1, 5)

    def test_rejects_tau_at_or_beyond_delta(self):
        with pytest.raises(ValueError):
            unique_decoding_bound(0.5, 0.5)
        with pytest.raises(ValueError):
            unique_decoding_bound(0.5, 0.6)


class TestHyQuadratics:
    def test_frozen_values(self):
        assert hy_quadratic1(0.9, 1) == 9
        assert hy_quadratic2(0.9, 2, 1) == Fraction(3, 2)
        assert hy_quadratic2(0.9, 2, Fraction(3, 10)) == -Fraction(3, 5)

    def test_second_strictly_below_first(self):
        for list_size in (2, 4):
            for dnum in range(1, 10):
                delta = Fraction(dnum, 10)
                for k in range(11):
                    x = Fraction(k, 10)
                    gap = hy_quadratic1(delta, x) - hy_quadratic2(delta, list_size, x)
                    assert gap > 0

    def test_list_size_examples(self):
        assert hy_list_size(0.9, 0.5, 0) == 1
        assert hy_list_size(0.9, 0.8, 0.05) == 2
        assert hy_list_size(0.5, 1, 0) is None  # outside the admissible region

    def test_list_size_region_boundary_is_strict(self):
        delta, tau_del = Fraction(9, 10), Fraction(1, 2)
        threshold = (delta - tau_del) * (1 - tau_del) / (1 - delta)
        assert hy_list_size(delta, threshold, tau_del) is None
        assert hy_list_size(delta, threshold - Fraction(1, 1000), tau_del) is not None

    def test_list_size_validation(self):
        with pytest.raises(ValueError):
            hy_list_size(0.9, -1, 0)
        with pytest.raises(ValueError):
            hy_list_size(0.9, 0.5, 1)


class TestCrossoverConstants:
    def test_golden_value_for_list_size_two(self):
        golden = (27 - math.sqrt(57)) / 28
        assert abs(hy_crossover_delta(2) - golden) < 1e-9
        assert abs(hy_crossover_delta_closed_form(2) - golden) < 1e-9

    def test_closed_forms_agree_up_to_fifty(self):
        for list_size in range(2, 51):
            direct = hy_crossover_delta(list_size)
            closed = hy_crossover_delta_closed_form(list_size)
            assert abs(direct - closed) < 1e-9

    def test_root_below_breakpoint_slope_ratio(self):
        # guarantees the max() guard in hy_crossover_delta never fires
        for list_size in range(2, 51):
            ratio = (list_size - 1) / (list_size + 1)
            assert 0 < hy_crossover_root(list_size) < ratio


class TestComparisonReport:
    def test_landmarks_for_delta_nine_tenths(self):
        report = comparison_report(0.9, 2)
        assert report.p2 == (0.7, 0.2)  # exact by construction
        assert report.interval is not None
        assert report.interval[1] == 0.7
        assert not report.extra_crossings

        c = 0.1
        alpha = (17 * c + 4 + math.sqrt(-143 * c * c - 188 * c + 124)) / 18
        assert report.p1 is not None
        assert abs(report.p1[0] - (1 - alpha)) < 1e-6
        assert 0 < report.interval[0] < report.interval[1]

    def test_below_crossover_reports_constants_only(self):
        report = comparison_report(0.6, 2)
        assert report.interval is None
        assert report.p1 is None
        assert report.p2 is None
        assert abs(report.delta1 - (27 - math.sqrt(57)) / 28) < 1e-9

    def test_window_above_crossover_for_list_size_three(self):
        report = comparison_report(0.8, 3)
        assert report.p2 is not None
        assert abs(report.p2[0] - 0.6) < 1e-12
        assert abs(report.p2[1] - 0.2) < 1e-12
        assert report.interval is not None
        assert report.p1 is not None  # quadratic regains the lead near tau_del = 0
        lo, hi = report.interval
        assert 0 < lo < hi == report.p2[0]

    def test_breakpoint_advantage_iff_beyond_crossover(self):
        # compare the bound and the quadratic where the advantage peaks
        for list_size in (2, 3, 5):
            delta1 = hy_crossover_delta(list_size)
            for i in range(1, 100):
                delta = Fraction(i, 100)
                if abs(float(delta) - delta1) < 1e-6:
                    continue
                x = Fraction(list_size + 1, list_size - 1) * (1 - delta)
                lhs = Fraction(2, list_size - 1) * (1 - delta)
                rhs = hy_quadratic2(delta, list_size, x)
                if x <= 1:
                    assert insertion_bound(delta, list_size, x) == lhs
                assert (lhs > rhs) == (float(delta) > delta1)

    def test_report_is_plain_data(self):
        report = comparison_report(0.9, 2)
        assert isinstance(report, ComparisonReport)
        assert report.list_size == 2
        assert report.delta == 0.9
