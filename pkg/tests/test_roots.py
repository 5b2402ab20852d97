import math
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plethys import (
    COMPLEX64,
    RATIONAL,
    BackendError,
    Constant,
    ContractError,
    ConvergenceError,
    DomainError,
    Explicit,
    Polylog,
    RootMultiset,
    RootSolveConfig,
    bigcomplex,
    build_polynomial,
    find_roots,
    power_sums_from_roots,
    reconstruct_from_roots,
)
from plethys.roots import _backward_bound

SQRT3 = math.sqrt(3)


def assert_same_roots(xs, ys, tol):
    ys = [complex(y) for y in ys]
    assert len(xs) == len(ys)
    for x in xs:
        i = min(range(len(ys)), key=lambda j: abs(complex(x) - ys[j]))
        assert abs(complex(x) - ys.pop(i)) < tol


def rel_close(a, b, tol):
    scale = max(abs(complex(x)) for x in a)
    return all(abs(complex(x) - complex(y)) <= tol * scale for x, y in zip(a, b))


class TestFindRoots:
    def test_linear(self):
        rm = find_roots(build_polynomial(Constant(1), 1, COMPLEX64))
        assert rm.roots == (1,)

    @pytest.mark.parametrize("backend", [COMPLEX64, bigcomplex(128)])
    def test_quadratic(self, backend):
        rm = find_roots(build_polynomial(Explicit([1, 2]), 2, backend))
        lo, hi = rm.roots
        assert abs(complex(lo) - (-1 - SQRT3)) < 1e-12
        assert abs(complex(hi) - (-1 + SQRT3)) < 1e-12

    def test_p5_first_power_sum(self):
        rm = find_roots(build_polynomial(Polylog(0), 5, COMPLEX64))
        assert abs(power_sums_from_roots(rm, 1)[0] - 1) <= 1e-10

    def test_degree_zero_is_empty(self):
        rm = find_roots(build_polynomial(Explicit([0, 0, 0]), 3, COMPLEX64))
        assert rm.roots == () and rm.degree == 0

    def test_rational_rejected(self):
        with pytest.raises(BackendError):
            find_roots(build_polynomial(Polylog(0), 3, RATIONAL))

    def test_sorted_and_deterministic(self):
        real = build_polynomial(Polylog(0), 25, COMPLEX64)
        a, b = find_roots(real), find_roots(real)
        assert a == b
        keys = [(r.real, r.imag) for r in a.roots]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("backend", [COMPLEX64, bigcomplex(256)])
    def test_residual_bound(self, backend):
        real = build_polynomial(Polylog(0), 40, backend)
        cfg = RootSolveConfig()
        tol = cfg.tolerance(backend)
        rm = find_roots(real, cfg)
        with mpmath.workprec(300):
            coeffs = [mpmath.mpc(c) for c in real.coeffs]
            for r, res in zip(rm.roots, rm.residuals):
                assert res <= tol * _backward_bound(coeffs, mpmath.mpc(r))

    def test_double_root_clustered(self):
        # alpha_k = 2 for all k gives (1 - x)**2
        rm = find_roots(build_polynomial(Constant(2), 2, COMPLEX64))
        assert rm.multiplicities == (2,)
        assert abs(rm.roots[0] - 1) < 1e-7

    def test_non_convergence(self):
        real = build_polynomial(Polylog(0), 30, COMPLEX64)
        with pytest.raises(ConvergenceError) as info:
            find_roots(real, RootSolveConfig(max_iterations=1))
        assert info.value.best is not None and info.value.residuals is not None

    @pytest.mark.parametrize("backend", [COMPLEX64, bigcomplex(128)])
    def test_companion_agrees_with_aberth(self, backend):
        real = build_polynomial(Polylog(-1), 12, backend)
        ab = find_roots(real)
        co = find_roots(real, RootSolveConfig(method="companion"))
        assert ab.degree == co.degree == 12
        assert_same_roots(ab.roots, co.roots, 1e-9)

    def test_matches_numpy_roots(self):
        real = build_polynomial(Polylog(0), 15, COMPLEX64)
        ref = np.roots(np.array(real.coeffs[::-1]))
        assert_same_roots(find_roots(real).roots, ref, 1e-8)

    def test_config_validation(self):
        with pytest.raises(ContractError):
            RootSolveConfig(method="newton")
        with pytest.raises(ContractError):
            RootSolveConfig(max_iterations=0)
        with pytest.raises(ContractError):
            RootSolveConfig(convergence_tol=0)


class TestReconstruct:
    def test_single(self):
        rm = RootMultiset((1 + 0j,), (1,), (0.0,))
        assert reconstruct_from_roots(rm).coeffs == (1, -1)

    def test_quadratic(self):
        rm = find_roots(build_polynomial(Explicit([1, 2]), 2, COMPLEX64))
        got = reconstruct_from_roots(rm).coeffs
        for x, y in zip(got, (1, -1, -0.5)):
            assert abs(x - y) <= 1e-12

    def test_empty(self):
        rm = RootMultiset((), (), ())
        assert reconstruct_from_roots(rm).coeffs == (1,)

    def test_multiplicity_expands(self):
        rm = RootMultiset((2 + 0j,), (3,), (0.0,))
        # (1 - x/2)**3
        assert reconstruct_from_roots(rm).coeffs == (1, -1.5, 0.75, -0.125)

    def test_zero_root(self):
        with pytest.raises(DomainError):
            RootMultiset((0j,), (1,), (0.0,))

    def test_bigcomplex(self):
        real = build_polynomial(Polylog(0), 20, bigcomplex(256))
        back = reconstruct_from_roots(find_roots(real))
        with mpmath.workprec(256):
            assert all(abs(x - y) < mpmath.mpf(10) ** -60 for x, y in zip(back, real.coeffs))


complex_alpha = st.builds(
    complex,
    st.floats(-1, 1, allow_nan=False),
    st.floats(-1, 1, allow_nan=False),
)


@given(st.lists(complex_alpha, min_size=1, max_size=40))
@settings(max_examples=60, deadline=None)
def test_reconstruction_round_trip(alphas):
    real = build_polynomial(Explicit(alphas), len(alphas), COMPLEX64)
    back = reconstruct_from_roots(find_roots(real))
    assert back.order == real.effective_degree
    assert rel_close(real.coeffs[: back.order + 1], back.coeffs, 1e-9)
