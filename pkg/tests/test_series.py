"""Tests for truncated Hilbert series"""
from fractions import Fraction

import pytest

from src.core.series import HilbertSeries, SeriesError, compare_series, format_rational


def coefficients(series: HilbertSeries) -> list:
    return [int(c) for c in series.as_list()]


class TestHilbertSeries:
    """Test construction and arithmetic"""

    def test_format_rational(self):
        """Test rational formatting"""
        assert format_rational(3) == "3"
        assert format_rational(Fraction(-1, 2)) == "-1/2"

    def test_geometric(self):
        """Test 1/(1 - q^2)"""
        assert coefficients(HilbertSeries.geometric(2, 6)) == [1, 0, 1, 0, 1, 0, 1]

    def test_geometric_needs_positive_degree(self):
        """Test 1/(1 - q^0)"""
        with pytest.raises(SeriesError):
            HilbertSeries.geometric(0, 5)

    def test_from_rational_n3(self):
        """Test (1 + q^2) / ((1 - q^2)(1 - q))"""
        series = HilbertSeries.from_rational({0: 1, 2: 1}, [2, 1], 7)
        assert coefficients(series) == [1, 1, 3, 3, 5, 5, 7, 7]

    def test_from_rational_n4(self):
        """Test (1 + q^3) / (1 - q^2)^2"""
        series = HilbertSeries.from_rational({0: 1, 3: 1}, [2, 2], 7)
        assert coefficients(series) == [1, 0, 2, 1, 3, 2, 4, 3]

    def test_reciprocal(self):
        """Test 1 / (1 - q) = sum q^k"""
        series = HilbertSeries.from_polynomial([1, -1], 5).reciprocal()
        assert series == HilbertSeries.geometric(1, 5)

    def test_reciprocal_needs_constant_term(self):
        """Test 1 / q"""
        with pytest.raises(SeriesError) as exc_info:
            HilbertSeries.monomial(1, 5).reciprocal()
        assert "constant term" in str(exc_info.value)

    def test_truncation_on_construction(self):
        """Test that terms above the order are dropped"""
        series = HilbertSeries({0: 1, 3: 2, 9: 5}, 4)
        assert series.exponents == [0, 3]
        with pytest.raises(SeriesError):
            series.coefficient(5)

    def test_truncate(self):
        """Test lowering the order"""
        series = HilbertSeries.geometric(1, 6).truncate(2)
        assert series.order == 2
        assert coefficients(series) == [1, 1, 1]
        with pytest.raises(SeriesError):
            series.truncate(3)

    def test_addition_uses_smaller_order(self):
        """Test order of a sum"""
        total = HilbertSeries.geometric(1, 3) + HilbertSeries.geometric(1, 5)
        assert total.order == 3
        assert coefficients(total) == [2, 2, 2, 2]

    def test_multiplication_order(self):
        """Test that a factor with positive valuation extends the other factor's order"""
        left = HilbertSeries.geometric(1, 4)
        right = HilbertSeries.monomial(2, 10)
        product = left * right
        assert product.order == 6
        assert product.exponents == [2, 3, 4, 5, 6]

    def test_half_integral_shift(self):
        """Test q^(1/2) shifts"""
        series = HilbertSeries.geometric(1, 3).shift(Fraction(1, 2))
        assert series.order == Fraction(7, 2)
        assert series.exponents == [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)]
        assert not series.is_integral()
        with pytest.raises(SeriesError):
            series.as_list()

    def test_with_order(self):
        """Test relabelling the completeness bound"""
        shifted = HilbertSeries.geometric(1, 3).shift(Fraction(1, 2))
        relabelled = shifted.with_order(4)
        assert relabelled.order == 4
        assert relabelled.coefficient(4) == 0
        with pytest.raises(SeriesError) as exc_info:
            shifted.with_order(Fraction(9, 2))
        assert "only complete below" in str(exc_info.value)

    def test_scale_and_subtract(self):
        """Test linear operations"""
        series = HilbertSeries.geometric(1, 3)
        assert series.scale(Fraction(1, 2)).coefficient(2) == Fraction(1, 2)
        assert (series - series) == HilbertSeries.zero(3)

    def test_valuation(self):
        """Test the lowest exponent"""
        assert HilbertSeries.monomial(Fraction(3, 2), 5).valuation == Fraction(3, 2)
        assert HilbertSeries.zero(4).valuation == 4

    def test_str(self):
        """Test display"""
        series = HilbertSeries.from_coefficients([1, 1, 3])
        assert str(series) == "1 + q + 3q^2 + O(q^3)"
        assert str(HilbertSeries.from_polynomial([1, -1], 1)) == "1 - q + O(q^2)"
        assert str(HilbertSeries.zero(2)) == "0 + O(q^3)"

    def test_to_dict(self):
        """Test the string form used in reports"""
        series = HilbertSeries({Fraction(1, 2): 2, 0: 1}, 1)
        assert series.to_dict() == {"0": "1", "1/2": "2"}

    def test_equality_needs_same_order(self):
        """Test that series of different orders differ"""
        assert HilbertSeries.geometric(1, 3) != HilbertSeries.geometric(1, 4)
        assert HilbertSeries.geometric(1, 3) == HilbertSeries.geometric(1, 4).truncate(3)


class TestCompareSeries:
    """Test coefficient comparison"""

    def test_match(self):
        """Test equal series"""
        a = HilbertSeries.from_rational({0: 1, 2: 1}, [2, 1], 6)
        b = HilbertSeries.from_coefficients([1, 1, 3, 3, 5, 5, 7])
        comparison = compare_series(a, b)
        assert comparison.equal
        assert comparison.order == 6
        assert "agree up to q^6" in comparison.describe()

    def test_first_mismatch(self):
        """Test the N = 3 and N = 4 series"""
        n3 = HilbertSeries.from_rational({0: 1, 2: 1}, [2, 1], 6)
        n4 = HilbertSeries.from_rational({0: 1, 3: 1}, [2, 2], 6)
        comparison = compare_series(n3, n4)
        assert not comparison.equal
        assert comparison.first_mismatch == 1
        assert (comparison.left, comparison.right) == (1, 0)
        assert comparison.describe() == "series differ at q^1: 1 != 0"

    def test_common_order(self):
        """Test comparison up to the smaller order"""
        a = HilbertSeries.geometric(1, 3)
        b = HilbertSeries.geometric(1, 8)
        assert compare_series(a, b).equal
        assert compare_series(a, b).order == 3
        assert compare_series(b, HilbertSeries.geometric(1, 8) + HilbertSeries.monomial(7, 8), order=6).equal
