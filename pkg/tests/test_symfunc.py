"""Schur polynomials against independent oracles and classical identities."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whitlocal import (
    InexactDivision,
    LaurentPoly,
    Partition,
    cauchy_check,
    cauchy_product_side,
    cauchy_schur_side,
    complete_homogeneous,
    homogeneous_list,
    partitions_of,
    partitions_up_to,
    schur,
    schur_bialternant_oracle,
    series_equal,
    series_expand,
)


def _vars(n, prefix="x"):
    return [LaurentPoly.var(f"{prefix}{i}") for i in range(1, n + 1)]


def weyl_dimension(lam: Partition, n: int) -> Fraction:
    padded = lam.padded(n)
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(padded[i] - padded[j] + j - i, j - i)
    return dim


class TestPartition:
    def test_trailing_zeros_dropped(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition(()).length == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_accessors(self):
        lam = Partition((4, 2, 1))
        assert lam.weight == 7
        assert lam.length == 3
        assert lam.part(2) == 2
        assert lam.part(9) == 0
        assert lam.padded(5) == (4, 2, 1, 0, 0)

    def test_json_round_trip(self):
        lam = Partition((3, 3, 1))
        assert Partition.from_json_obj(lam.to_json_obj()) == lam


class TestEnumeration:
    def test_lex_descending_order(self):
        got = [p.parts for p in partitions_of(4, 4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_length_cap(self):
        assert [p.parts for p in partitions_of(4, 2)] == [(4,), (3, 1), (2, 2)]
        assert list(partitions_of(3, 0)) == []
        assert [p.parts for p in partitions_of(0, 0)] == [()]

    def test_known_counts(self):
        # partition numbers p(0..8) with unrestricted length
        counts = [sum(1 for _ in partitions_of(w, w or 1)) for w in range(9)]
        assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_up_to_matches_union(self):
        got = list(partitions_up_to(4, 2))
        want = [p for w in range(5) for p in partitions_of(w, 2)]
        assert got == want


class TestHomogeneous:
    def test_small_values(self):
        x, y = _vars(2)
        hs = homogeneous_list(3, [x, y])
        assert hs[0] == LaurentPoly.one()
        assert hs[1] == x + y
        assert hs[2] == x ** 2 + x * y + y ** 2
        assert hs[3] == x ** 3 + x ** 2 * y + x * y ** 2 + y ** 3

    def test_negative_degree_is_zero(self):
        assert complete_homogeneous(-1, _vars(2)) == LaurentPoly.zero()

    def test_generating_function(self):
        # sum_k h_k t^k = prod_i 1/(1 - x_i t)
        from whitlocal import RationalFunction

        xs = _vars(3)
        den = LaurentPoly.one()
        for x in xs:
            den = den * (LaurentPoly.one() - x * LaurentPoly.var("t"))
        expansion = series_expand(RationalFunction(LaurentPoly.one(), den), "t", 5)
        hs = homogeneous_list(5, xs)
        for k in range(6):
            assert expansion.coeffs[k] == hs[k]


class TestSchur:
    def test_empty_partition_is_one(self):
        assert schur(Partition(()), _vars(3)) == LaurentPoly.one()

    def test_too_long_partition_is_zero(self):
        assert schur(Partition((1, 1, 1)), _vars(2)) == LaurentPoly.zero()

    def test_single_row_is_homogeneous(self):
        xs = _vars(3)
        for k in range(5):
            assert schur(Partition((k,)), xs) == complete_homogeneous(k, xs)

    def test_single_column_is_elementary(self):
        x, y, z = _vars(3)
        assert schur(Partition((1, 1)), [x, y, z]) == x * y + x * z + y * z
        assert schur(Partition((1, 1, 1)), [x, y, z]) == x * y * z

    def test_worked_value(self):
        x, y = _vars(2)
        # s_(2,1)(x, y) = x^2 y + x y^2
        assert schur(Partition((2, 1)), [x, y]) == x ** 2 * y + x * y ** 2

    def test_accepts_raw_tuples_and_numbers(self):
        assert schur((2,), [1, 1]).as_fraction() == 3
        assert schur((1, 1), [Fraction(1, 2), 2]).as_fraction() == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_bialternant_oracle(self, n):
        names = [f"x{i}" for i in range(1, n + 1)]
        values = [LaurentPoly.var(v) for v in names]
        for lam in partitions_up_to(6, n):
            assert schur(lam, values) == schur_bialternant_oracle(lam, names)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symmetry_under_all_permutations(self, n):
        values = _vars(n)
        for lam in partitions_up_to(5 if n < 4 else 4, n):
            base = schur(lam, values)
            for perm in permutations(values):
                assert schur(lam, list(perm)) == base

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_dimension_formula_at_all_ones(self, n):
        ones = [LaurentPoly.one()] * n
        for lam in partitions_up_to(6, n):
            assert schur(lam, ones).as_fraction() == weyl_dimension(lam, n)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pieri_rule(self, n):
        values = _vars(n)
        h1 = complete_homogeneous(1, values)
        for lam in partitions_up_to(4, n):
            rhs = LaurentPoly.zero()
            for i in range(min(lam.length + 1, n)):
                grown = list(lam.padded(min(lam.length + 1, n)))
                grown[i] += 1
                if all(a >= b for a, b in zip(grown, grown[1:])):
                    rhs = rhs + schur(Partition(grown), values)
            assert schur(lam, values) * h1 == rhs

    def test_homogeneity_degree(self):
        lam = Partition((3, 2))
        poly = schur(lam, _vars(3))
        for mon, _ in poly.sorted_terms():
            assert sum(e for _, e in mon.exps) == lam.weight

    def test_oracle_needs_distinct_names(self):
        with pytest.raises(ValueError):
            schur_bialternant_oracle(Partition((1,)), ["x", "x"])


class TestCauchy:
    def test_product_side_is_rational(self):
        rf = cauchy_product_side(2, 2, "X")
        expansion = series_expand(rf, "X", 3)
        assert expansion.coeffs[0] == LaurentPoly.one()

    def test_schur_side_first_coefficients(self):
        s = cauchy_schur_side(2, 1, "X", 2)
        a1, a2, b1 = (LaurentPoly.var(v) for v in ("a1", "a2", "b1"))
        assert s.coeffs[0] == LaurentPoly.one()
        assert s.coeffs[1] == (a1 + a2) * b1
        assert s.coeffs[2] == (a1 ** 2 + a1 * a2 + a2 ** 2) * b1 ** 2

    def test_sides_agree(self):
        lhs = cauchy_schur_side(2, 2, "X", 5)
        rhs = series_expand(cauchy_product_side(2, 2, "X"), "X", 5)
        assert series_equal(lhs, rhs)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 3), (3, 3)])
    def test_check_passes(self, n, m):
        report = cauchy_check(n, m, 4)
        assert report.passed

    def test_check_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            cauchy_check(0, 1, 3)
        with pytest.raises(ValueError):
            cauchy_check(1, 1, -1)


class TestSchurProducts:
    @given(st.integers(0, 3), st.integers(0, 3))
    def test_row_times_row_expands_by_pieri_chain(self, a, b):
        # h_a * h_b = sum of s_mu over two-row mu = (mu1, a+b-mu1), mu1 >= max(a,b)
        xs = _vars(3)
        lhs = complete_homogeneous(a, xs) * complete_homogeneous(b, xs)
        rhs = LaurentPoly.zero()
        for mu1 in range(max(a, b), a + b + 1):
            rhs = rhs + schur(Partition((mu1, a + b - mu1)), xs)
        assert lhs == rhs


def test_inexact_division_error_exists():
    assert issubclass(InexactDivision, ArithmeticError)
