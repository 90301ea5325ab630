import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzlab.classverify import (
    KClassSeries,
    assemble_n_from_pushforwards,
    check_series_identities,
    harris_mumford_class,
    mumford_coeff,
    n_closed_form,
    n_from_binomials,
    n_from_bracket,
    rank_identity,
    verify_class,
    verify_class_range,
)
from syzlab.errors import TruncationTooSmall
from syzlab.series import SeriesQ


class TestMumford:
    @pytest.mark.parametrize("n,expected", [(1, 1), (-1, 13), (0, 1), (2, 13)])
    def test_values(self, n, expected):
        assert mumford_coeff(n) == expected

    def test_symmetry(self):
        for n in range(-50, 51):
            assert mumford_coeff(n) == mumford_coeff(1 - n)


class TestNValues:
    @pytest.mark.parametrize("k,n", [(3, 16), (4, 45), (5, 144)])
    def test_spot_values_all_routes(self, k, n):
        assert assemble_n_from_pushforwards(k) == n
        assert n_from_bracket(k) == n
        assert n_from_binomials(k) == n
        assert n_closed_form(k) == n

    @pytest.mark.parametrize("k,hm", [(3, 8), (4, 15)])
    def test_gonal_class_spot_values(self, k, hm):
        assert harris_mumford_class(k) == hm

    def test_four_routes_and_ratio_to_100(self):
        for k in range(3, 101):
            n = n_closed_form(k)
            assert (
                assemble_n_from_pushforwards(k)
                == n_from_bracket(k)
                == n_from_binomials(k)
                == n
            )
            assert n == (k - 1) * harris_mumford_class(k)

    def test_truncation_guards(self):
        with pytest.raises(TruncationTooSmall):
            assemble_n_from_pushforwards(5, order=4)
        with pytest.raises(TruncationTooSmall):
            assemble_n_from_pushforwards(5, order=10)  # above g = 9


class TestSeriesIdentities:
    def test_odd_genus_range(self):
        for g in range(5, 42, 2):
            id1, id2, note = check_series_identities(g, max(6, g - 1))
            assert id1 and id2, g
            assert note["id1_printed_plus_6i_matches"] is False
            assert note["id2_printed_minus_2g1_matches"] is False
            assert note["combined_bracket_checked"] is True

    def test_low_order_rejected(self):
        with pytest.raises(TruncationTooSmall):
            check_series_identities(7, 5)


class TestRankIdentity:
    def test_spot_values(self):
        # k=3: all four expressions are 40; k=4: 210
        from syzlab.series import big_binom

        assert big_binom(4, 3) * 10 == 40
        assert big_binom(5, 2) * 4 == 40
        assert big_binom(6, 4) * 14 == 210
        assert big_binom(7, 4) * 7 - big_binom(7, 3) == 210
        assert rank_identity(3) and rank_identity(4)

    def test_range_to_100(self):
        assert all(rank_identity(k) for k in range(3, 101))


small_kclass = st.builds(
    lambda r, c: KClassSeries(SeriesQ(r, 5), SeriesQ(c, 5)),
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    st.lists(st.fractions(max_denominator=12), min_size=1, max_size=6),
)


class TestKClassAlgebra:
    @given(small_kclass, small_kclass, small_kclass)
    def test_product_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(small_kclass, small_kclass)
    def test_product_rule(self, a, b):
        prod = a * b
        assert prod.rank == a.rank * b.rank
        assert prod.c1 == a.rank * b.c1 + b.rank * a.c1

    @given(small_kclass, small_kclass, small_kclass)
    def test_distributes(self, a, b, c):
        assert (a + b) * c == a * c + b * c


class TestVerify:
    def test_verify_class_bundle(self):
        r = verify_class(6)
        assert r.all_ok and r.n_consistent
        assert r.n_closed == 5 * harris_mumford_class(6)
        doc = r.to_dict()
        assert doc["ratio_is_k_minus_1"] and doc["all_ok"]

    def test_range_runs_fast(self):
        results, elapsed = verify_class_range(100)
        assert len(results) == 98
        assert all(r.all_ok for r in results)
        assert elapsed < 5.0

    def test_kmax_guard(self):
        with pytest.raises(ValueError):
            verify_class_range(2)
