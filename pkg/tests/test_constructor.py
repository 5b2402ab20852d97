import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_vectors
from plethys import (
    COMPLEX64,
    RATIONAL,
    BackendError,
    Constant,
    ContractError,
    Explicit,
    InputError,
    IntegralityError,
    Polylog,
    PolynomialRealization,
    TruncatedSeries,
    bigcomplex,
    build_polynomial,
    build_via_series,
    phi_embedding,
    scaled_integer_coefficients,
)


class TestAlphaSequences:
    def test_explicit_bounds(self):
        a = Explicit([1, 2])
        assert a.term(2) == 2
        with pytest.raises(InputError):
            a.term(3)
        with pytest.raises(InputError):
            a.term(0)

    def test_constant(self):
        assert Constant(F(3, 2)).terms(4) == [F(3, 2)] * 4

    def test_polylog_rational(self):
        assert Polylog(0).terms(4) == [1, 2, 3, 4]
        assert Polylog(-2).terms(3) == [1, 8, 27]
        assert Polylog(3).terms(3) == [1, F(1, 4), F(1, 9)]

    def test_polylog_noninteger_needs_float(self):
        with pytest.raises(BackendError):
            Polylog(0.5).term(2, RATIONAL)
        assert Polylog(0.5).term(4, COMPLEX64) == pytest.approx(2.0)

    def test_polylog_complex_principal_branch(self):
        s = 0.5 + 2j
        v = Polylog(s).term(3, COMPLEX64)
        assert v == pytest.approx(complex(3 ** (1 - s)))


class TestBuildPolynomial:
    def test_constant_one_gives_one_minus_x(self):
        real = build_polynomial(Constant(1), 5)
        assert real.coeffs == (1, -1, 0, 0, 0, 0)
        assert real.effective_degree == 1

    def test_polylog_zero(self):
        assert build_polynomial(Polylog(0), 5).coeffs == (1, -1, F(-1, 2), F(-1, 6), F(1, 24), F(19, 120))

    def test_zero_alphas(self):
        real = build_polynomial(Explicit([0] * 4), 4)
        assert real.coeffs == (1, 0, 0, 0, 0)
        assert real.effective_degree == 0

    def test_polylog_minus_two(self):
        assert build_polynomial(Polylog(-2), 4).coeffs == (1, -1, F(-7, 2), F(-31, 6), F(-23, 24))

    def test_degree_zero(self):
        real = build_polynomial(Explicit([]), 0)
        assert real.coeffs == (1,)

    def test_short_explicit(self):
        with pytest.raises(InputError):
            build_polynomial(Explicit([1, 2]), 3)

    def test_rational_needs_integer_s(self):
        with pytest.raises(BackendError):
            build_polynomial(Polylog(F(1, 2)), 3)

    @pytest.mark.parametrize("backend", [COMPLEX64, bigcomplex(128)])
    def test_float_backends_match_rational(self, backend):
        exact = build_polynomial(Polylog(-1), 30).coeffs
        approx = build_polynomial(Polylog(-1), 30, backend).coeffs
        for x, y in zip(exact, approx):
            assert abs(complex(y) - float(x)) <= 1e-13 * max(1, abs(float(x)))

    def test_complex_targets(self):
        real = build_polynomial(Explicit([1j, 2, -1 + 1j]), 3, COMPLEX64)
        # a_1 = -alpha_1, a_2 = (alpha_1**2 - alpha_2)/2
        assert real.coeffs[1] == -1j
        assert real.coeffs[2] == pytest.approx(((1j) ** 2 - 2) / 2)

    def test_a0_is_one(self):
        with pytest.raises(ContractError):
            PolynomialRealization(TruncatedSeries((2, 1)), 1, 1)

    def test_float_effective_degree_threshold(self):
        real = build_polynomial(Explicit([1, 1, 1, 1 + 1e-14]), 4, COMPLEX64)
        assert real.effective_degree == 1


@given(rational_vectors(0, 20))
@settings(max_examples=100, deadline=None)
def test_recurrence_matches_series_exp(v):
    n = len(v)
    assert build_polynomial(Explicit(v), n).coeffs == build_via_series(Explicit(v), n).coeffs


def test_series_path_examples():
    assert build_via_series(Constant(1), 5).coeffs == (1, -1, 0, 0, 0, 0)
    assert build_via_series(Polylog(0), 5).coeffs == (1, -1, F(-1, 2), F(-1, 6), F(1, 24), F(19, 120))


@given(rational_vectors(2, 20))
@settings(max_examples=50, deadline=None)
def test_truncation_nesting(v):
    n = len(v)
    assert build_polynomial(Explicit(v), n - 1).coeffs == build_polynomial(Explicit(v), n).coeffs[:n]


class TestScaledIntegers:
    @pytest.mark.parametrize(
        "s,n,expected",
        [
            (0, 5, [1, -1, -1, -1, 1, 19]),
            (-1, 4, [1, -1, -3, -7, 1]),
            (-3, 4, [1, -1, -15, -115, -215]),
        ],
    )
    def test_table_values(self, s, n, expected):
        assert scaled_integer_coefficients(build_polynomial(Polylog(s), n)) == expected

    def test_integrality_violation(self):
        with pytest.raises(IntegralityError):
            scaled_integer_coefficients(build_polynomial(Explicit([F(1, 3), 0]), 2))

    def test_needs_rational(self):
        with pytest.raises(BackendError):
            scaled_integer_coefficients(build_polynomial(Polylog(0), 3, COMPLEX64))

    @pytest.mark.parametrize("s", [0, -1, -2, -3, -4])
    def test_integral_to_sixty(self, s):
        b = scaled_integer_coefficients(build_polynomial(Polylog(s), 60))
        assert all(isinstance(x, int) for x in b)


class TestPhi:
    def test_single(self):
        real = phi_embedding([1])
        assert real.roots.roots == (1,)

    def test_quadratic(self):
        real = phi_embedding([1, 2])
        got = sorted(r.real for r in real.roots.roots)
        assert got == pytest.approx([-1 - math.sqrt(3), -1 + math.sqrt(3)], abs=1e-12)

    def test_degenerate(self):
        real = phi_embedding([1, 1])
        assert real.coeffs == (1, -1, 0)
        assert real.effective_degree == 1
        assert real.roots.roots == (1,)
        assert real.roots.multiplicities == (1,)

    def test_empty(self):
        with pytest.raises(InputError):
            phi_embedding([])

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=10))
    @settings(max_examples=30, deadline=None)
    def test_root_count_matches_effective_degree(self, v):
        real = phi_embedding(v)
        assert real.roots.degree == real.effective_degree
