"""Tests for Betti tables, K-polynomials, and the Hilbert-series route."""
import pytest

from degmult import betti
from degmult.errors import (
    DivisibilityError,
    DivisionError,
    NotPure,
)

from bruteforce import one_minus_s_power, poly_mul


def table(codim, entries):
    return betti.BettiTable.from_entries(codim, entries)


# Frozen small tables reused throughout.
KOSZUL_23 = table(2, [(1, 2, 1), (1, 3, 1), (2, 5, 1)])
GOR3_TABLE = table(
    3,
    [(1, 2, 2), (1, 3, 2), (1, 4, 1), (2, 3, 1), (2, 4, 2), (2, 5, 2), (3, 7, 1)],
)
PURE_235 = table(3, [(1, 2, 5), (2, 3, 5), (3, 5, 1)])
CI_11 = table(2, [(1, 1, 2), (2, 2, 1)])
CI_22 = table(2, [(1, 2, 2), (2, 4, 1)])
CM2_1121 = table(2, [(1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 1)])


class TestBettiTable:
    def test_aggregates_ranks(self):
        t = table(1, [(1, 2, 1), (1, 2, 3), (1, 5, 1)])
        assert t.steps == (((2, 4), (5, 1)),)

    def test_every_step_must_be_covered(self):
        with pytest.raises(ValueError):
            table(1, [(2, 3, 1)])

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            table(1, [(1, 0, 1)])
        with pytest.raises(ValueError):
            table(1, [(1, 2, 0)])
        with pytest.raises(ValueError):
            table(3, [(1, 1, 1), (2, 2, 1)])  # codim > p

    def test_json_round_trip(self):
        doc = GOR3_TABLE.to_json_dict()
        assert doc["codim"] == 3
        assert betti.BettiTable.from_json_dict(doc) == GOR3_TABLE


class TestKPolynomial:
    def test_koszul_23(self):
        assert betti.k_polynomial(KOSZUL_23).coeffs == (1, 0, -1, -1, 0, 1)

    def test_gor3_table(self):
        assert betti.k_polynomial(GOR3_TABLE).coeffs == (1, 0, -2, -1, 1, 2, 0, -1)

    def test_degree_one_ideal(self):
        t = table(1, [(1, 1, 1)])
        assert betti.k_polynomial(t).coeffs == (1, -1)

    def test_str(self):
        assert str(betti.k_polynomial(GOR3_TABLE)) == "1 - 2*s^2 - s^3 + s^4 + 2*s^5 - s^7"

    def test_vanishes_at_one(self):
        for t in (KOSZUL_23, GOR3_TABLE, PURE_235, CI_11, CI_22, CM2_1121):
            assert betti.k_polynomial(t).evaluate(1) == 0


class TestMultiplicity:
    @pytest.mark.parametrize(
        "t,expected",
        [(KOSZUL_23, 6), (GOR3_TABLE, 12), (PURE_235, 5), (CI_11, 1), (CI_22, 4)],
    )
    def test_examples(self, t, expected):
        assert betti.multiplicity(t) == expected

    @pytest.mark.parametrize("t", [KOSZUL_23, GOR3_TABLE, PURE_235, CI_11, CM2_1121])
    def test_division_was_exact(self, t):
        # oracle: multiply the quotient back by (1-s)^c and compare
        q = betti._hilbert_quotient(t)
        k = list(betti.k_polynomial(t).coeffs)
        assert poly_mul(one_minus_s_power(t.codim), q) == k

    def test_inconsistent_table_raises(self):
        bad = table(2, [(1, 2, 1), (2, 5, 1)])  # K = 1 - s^2 + s^5, K(1) != 0
        with pytest.raises(DivisionError):
            betti.multiplicity(bad)

    def test_not_divisible_twice(self):
        bad = table(2, [(1, 1, 2), (2, 3, 1)])  # K = 1 - 2s + s^3, simple zero at 1
        with pytest.raises(DivisionError):
            betti.multiplicity(bad)


class TestShiftSummary:
    def test_koszul(self):
        assert betti.shift_summary(KOSZUL_23) == ((2, 5), (3, 5))

    def test_gor3(self):
        assert betti.shift_summary(GOR3_TABLE) == ((2, 3, 7), (4, 5, 7))

    def test_pure(self):
        s = betti.shift_summary(PURE_235)
        assert s.m == s.M == (2, 3, 5)


class TestPurity:
    def test_pure_table(self):
        assert betti.purity(PURE_235) == (True, True)

    def test_not_quasi_pure(self):
        # m2 = 3 < M1 = 4
        assert betti.purity(GOR3_TABLE) == (False, False)

    def test_quasi_pure_not_pure(self):
        t = table(2, [(1, 2, 1), (1, 3, 1), (2, 4, 1), (2, 5, 1)])
        assert betti.purity(t) == (False, True)


class TestHunekeMiller:
    def test_pure_235(self):
        assert betti.huneke_miller(PURE_235) == 5

    def test_linear_ci(self):
        assert betti.huneke_miller(CI_11) == 1

    def test_pure_24(self):
        assert betti.huneke_miller(CI_22) == 4

    def test_not_pure(self):
        with pytest.raises(NotPure):
            betti.huneke_miller(KOSZUL_23)

    def test_impossible_pure_table(self):
        bad = table(2, [(1, 1, 1), (2, 3, 1)])  # 2! does not divide 1*3
        with pytest.raises(DivisibilityError):
            betti.huneke_miller(bad)

    def test_codim_mismatch(self):
        t = table(1, [(1, 1, 1)])
        shifted = betti.BettiTable(codim=1, steps=(((1, 1),), ((2, 1),)))
        with pytest.raises(ValueError):
            betti.huneke_miller(shifted)


class TestGenus:
    def test_line(self):
        assert betti.genus_dim2(CI_11) == 0

    def test_elliptic_quartic(self):
        assert betti.genus_dim2(CI_22) == 1

    def test_cm2_table(self):
        assert betti.genus_dim2(CM2_1121) == 1
