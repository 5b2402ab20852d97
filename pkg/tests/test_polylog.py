import math
from fractions import Fraction as F

import mpmath
import pytest

from plethys import (
    DomainError,
    InputError,
    Polylog,
    build_polynomial,
    build_via_series,
    eulerian_polynomial,
    polylog_series_closed_form,
    series_exp,
    zeta_convergence,
    zeta_value,
)


class TestEulerian:
    @pytest.mark.parametrize("m,coeffs", [(0, (1,)), (1, (1,)), (2, (1, 1)), (3, (1, 4, 1)), (4, (1, 11, 11, 1))])
    def test_small(self, m, coeffs):
        assert eulerian_polynomial(m).coeffs == coeffs

    @pytest.mark.parametrize("m", range(13))
    def test_sum_and_palindrome(self, m):
        c = eulerian_polynomial(m).coeffs
        assert sum(c) == math.factorial(m)
        if m:
            assert c == c[::-1]

    def test_brute_force_descents(self):
        # <m, j> counts permutations of m letters with j descents
        from itertools import permutations

        for m in range(1, 7):
            counts = [0] * m
            for p in permutations(range(m)):
                counts[sum(p[i] > p[i + 1] for i in range(m - 1))] += 1
            assert tuple(counts) == eulerian_polynomial(m).coeffs

    def test_negative_order(self):
        with pytest.raises(InputError):
            eulerian_polynomial(-1)


class TestClosedForm:
    def test_m1(self):
        assert polylog_series_closed_form(1, 4).coeffs == (0, 1, 2, 3, 4)

    def test_m0(self):
        assert polylog_series_closed_form(0, 3).coeffs == (0, 1, 1, 1)

    def test_m3(self):
        assert polylog_series_closed_form(3, 4).coeffs == (0, 1, 8, 27, 64)

    @pytest.mark.parametrize("m", range(7))
    def test_coefficients_are_powers(self, m):
        c = polylog_series_closed_form(m, 50).coeffs
        assert list(c[1:]) == [k**m for k in range(1, 51)]

    @pytest.mark.parametrize("m", range(5))
    def test_family_consistency(self, m):
        f = series_exp(-polylog_series_closed_form(m, 25))
        assert f.coeffs == build_polynomial(Polylog(-m), 25).coeffs
        assert f.coeffs == build_via_series(Polylog(-m), 25).coeffs


class TestZeta:
    def test_zeta2(self):
        z = zeta_value(2, 128)
        with mpmath.workprec(160):
            assert abs(z - mpmath.pi**2 / 6) < mpmath.mpf(10) ** -35

    def test_zeta4(self):
        z = zeta_value(4, 128)
        with mpmath.workprec(160):
            assert abs(z - mpmath.pi**4 / 90) < mpmath.mpf(10) ** -35

    def test_apery(self):
        z = zeta_value(3, 128)
        with mpmath.workprec(160):
            assert abs(z - mpmath.mpf("1.2020569031595942853997381615114499907649862923405")) < 1e-35

    @pytest.mark.parametrize("s", [1.5, 2.5, 7, F(5, 2)])
    def test_against_mpmath(self, s):
        bits = 200
        z = zeta_value(s, bits)
        with mpmath.workprec(bits + 20):
            sv = mpmath.mpf(s.numerator) / s.denominator if isinstance(s, F) else mpmath.mpf(s)
            assert abs(z - mpmath.zeta(sv)) <= mpmath.ldexp(1, -bits + 8)

    @pytest.mark.parametrize("s", [1, 0.5, -2])
    def test_domain(self, s):
        with pytest.raises(DomainError):
            zeta_value(s)

    def test_complex_rejected(self):
        with pytest.raises(DomainError):
            zeta_value(2 + 1j)


class TestZetaConvergence:
    def test_s2_decreasing(self):
        rec = zeta_convergence(2, [10, 20, 40, 80], 128)
        devs = rec.deviations
        assert all(b < a for a, b in zip(devs, devs[1:]))

    def test_target(self):
        rec = zeta_convergence(2, [10], 128)
        assert abs(rec.target - 0.19302528913989804) < 1e-15

    def test_s4_target(self):
        rec = zeta_convergence(4, [20], 128)
        with mpmath.workprec(128):
            assert abs(rec.target - mpmath.exp(-mpmath.pi**4 / 90)) < mpmath.mpf(10) ** -30

    def test_rows_are_partial_sums(self):
        rec = zeta_convergence(3, [3, 5], 128)
        a = build_polynomial(Polylog(3), 5).coeffs
        for n, value, _ in rec.rows:
            exact = sum(a[: n + 1])
            with mpmath.workprec(128):
                assert abs(value - mpmath.mpf(exact.numerator) / exact.denominator) < mpmath.mpf(10) ** -30

    def test_s1_rejected(self):
        with pytest.raises(DomainError):
            zeta_convergence(1, [10])

    def test_n_list_ascending(self):
        with pytest.raises(InputError):
            zeta_convergence(2, [20, 10])
