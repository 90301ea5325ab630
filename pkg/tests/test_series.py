from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzlab.errors import OrderOutOfRange
from syzlab.series import SeriesQ, big_binom, series_coeff, series_expand


class TestBigBinom:
    @pytest.mark.parametrize(
        "n,r,expected",
        [(4, 2, 6), (9, 4, 126), (9, 5, 126), (2, -1, 0), (3, 5, 0), (-2, 1, 0)],
    )
    def test_examples(self, n, r, expected):
        assert big_binom(n, r) == expected

    def test_pascal_identity_up_to_300(self):
        for n in range(1, 301):
            for r in range(0, n + 1):
                assert big_binom(n, r) == big_binom(n - 1, r - 1) + big_binom(n - 1, r)


class TestExpand:
    def test_geometric(self):
        s = series_expand([1], 1, 4)
        assert [s.coeff(i) for i in range(5)] == [1, -1, 1, -1, 1]

    def test_binomial(self):
        s = series_expand([1], -5, 5)
        assert [s.coeff(i) for i in range(6)] == [big_binom(5, i) for i in range(6)]

    def test_shifted_geometric(self):
        s = series_expand([2], 2, 3)
        assert [s.coeff(i) for i in range(4)] == [2, -4, 6, -8]

    def test_inverse_pair_is_one(self):
        T = 12
        prod = series_expand([1, 1], 0, T) * series_expand([1], 1, T)
        assert prod == SeriesQ.one(T)


class TestCoeff:
    def test_hand_expansion_16(self):
        # t^2 (1+t)^2 (-t^2 + 2t + 7): coefficient of t^3
        s = (SeriesQ.one_plus_t_pow(2, 6) * SeriesQ([7, 2, -1], 6)).shift(2)
        assert series_coeff(s, 3) == 16
        assert series_coeff(s, 0) == 0

    def test_hand_expansion_45(self):
        s = (SeriesQ.one_plus_t_pow(4, 6) * SeriesQ([5, 4, -1], 6)).shift(2)
        assert series_coeff(s, 4) == 45

    def test_out_of_range(self):
        with pytest.raises(OrderOutOfRange):
            SeriesQ.one(3).coeff(4)


small_series = st.builds(
    lambda cs: SeriesQ(cs, 6),
    st.lists(st.fractions(max_denominator=20), min_size=1, max_size=7),
)


class TestRingLaws:
    @given(small_series, small_series, small_series)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(small_series, small_series, small_series)
    def test_mul_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(small_series, small_series)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    def test_mismatched_orders_truncate_to_min(self):
        a = SeriesQ([1, 1, 1, 1], 3)
        b = SeriesQ([1, 2], 1)
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_inverse_of_unit(self):
        s = SeriesQ([3, 1, Fraction(1, 2)], 8)
        assert s * s.inverse() == SeriesQ.one(8)

    def test_coeff_returns_fraction(self):
        assert isinstance(SeriesQ([1, 2], 4).coeff(1), Fraction)
