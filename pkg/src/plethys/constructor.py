"""Polynomials with prescribed negative power sums.

Given targets alpha_1..alpha_n, the degree-n truncation of
``exp(-sum_k alpha_k x**k / k)`` has coefficients

    a_0 = 1,    a_k = -(1/k) * sum_{j=1..k} alpha_j a_{k-j},

and its roots rho_i satisfy ``sum_i rho_i**-k == alpha_k`` for every k <= n.
"""

from __future__ import annotations

import cmath
import math
import numbers
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .backends import COMPLEX64, RATIONAL, Backend
from .errors import BackendError, ContractError, InputError, IntegralityError
from .series import TruncatedSeries, series_exp

#: Relative magnitude below which a float coefficient does not count toward the degree.
DEGENERACY_THRESHOLD = 1e-12


class AlphaSequence:
    """Source of power-sum targets alpha_k, k >= 1."""

    length: int | None = None  # None: unbounded

    def term(self, k: int, backend: Backend = RATIONAL):
        raise NotImplementedError

    def terms(self, n: int, backend: Backend = RATIONAL) -> list:
        """alpha_1 .. alpha_n in ``backend``."""
        if self.length is not None and n > self.length:
            raise InputError(f"alpha sequence supplies {self.length} terms, {n} requested")
        with backend.context():
            return [self.term(k, backend) for k in range(1, n + 1)]

    def _check_index(self, k):
        if not isinstance(k, numbers.Integral) or k < 1:
            raise InputError(f"alpha index must be a positive integer, got {k!r}")


@dataclass(frozen=True)
class Explicit(AlphaSequence):
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def length(self):
        return len(self.values)

    def term(self, k, backend=RATIONAL):
        self._check_index(k)
        if k > len(self.values):
            raise InputError(f"explicit alpha sequence has {len(self.values)} terms, term {k} requested")
        return backend.coerce(self.values[k - 1])


@dataclass(frozen=True)
class Constant(AlphaSequence):
    c: object

    def term(self, k, backend=RATIONAL):
        self._check_index(k)
        return backend.coerce(self.c)


@dataclass(frozen=True)
class Polylog(AlphaSequence):
    """alpha_k = k**(1 - s); its log-generating function is Li_s(x).

    Exact in the rational backend for integer ``s``; complex ``s`` uses the
    principal branch k**(1-s) = exp((1-s) log k).
    """

    s: object

    def term(self, k, backend=RATIONAL):
        self._check_index(k)
        e = 1 - self.s
        if backend.kind == "rational":
            return Fraction(k) ** _integer_exponent(self.s)
        if backend.kind == "complex64":
            if isinstance(e, numbers.Integral):
                return complex(float(Fraction(k) ** int(e)))
            if isinstance(e, numbers.Real):
                return complex(k ** float(e))
            return cmath.exp(complex(e) * math.log(k))
        with backend.context():
            if isinstance(e, Fraction):
                e = mpmath.mpf(e.numerator) / e.denominator
            return mpmath.mpc(mpmath.power(mpmath.mpf(k), e))


def _integer_exponent(s) -> int:
    if isinstance(s, numbers.Integral) and not isinstance(s, bool):
        return 1 - int(s)
    if isinstance(s, Fraction) and s.denominator == 1:
        return 1 - int(s)
    if isinstance(s, float) and s.is_integer():
        return 1 - int(s)
    raise BackendError(f"polylog family with s={s!r} is not rational; use a float backend")


@dataclass(frozen=True)
class PolynomialRealization:
    """P_n with its nominal/effective degree and (optionally) its roots."""

    poly: TruncatedSeries
    nominal_degree: int
    effective_degree: int
    roots: object = None  # RootMultiset, filled by plethys.roots

    def __post_init__(self):
        if self.poly.coeffs[0] != 1:
            raise ContractError("P_n must have constant coefficient exactly 1")
        if self.poly.order != self.nominal_degree:
            raise ContractError("poly order and nominal degree disagree")
        if not 0 <= self.effective_degree <= self.nominal_degree:
            raise ContractError("effective degree out of range")
        if self.roots is not None and self.roots.degree != self.effective_degree:
            raise ContractError("root count does not match the effective degree")

    @property
    def backend(self) -> Backend:
        return self.poly.backend

    @property
    def coeffs(self) -> tuple:
        return self.poly.coeffs

    def with_roots(self, roots) -> "PolynomialRealization":
        return PolynomialRealization(self.poly, self.nominal_degree, self.effective_degree, roots)


def effective_degree(poly: TruncatedSeries) -> int:
    """Index of the last nonzero coefficient.

    Exact zero test in the rational backend; float backends ignore
    coefficients with |a_j| <= DEGENERACY_THRESHOLD * max_i |a_i|.
    """
    c = poly.coeffs
    if poly.backend.is_exact:
        nz = [j for j, v in enumerate(c) if v != 0]
        return nz[-1]
    with poly.backend.context():
        mags = [abs(v) for v in c]
        cutoff = DEGENERACY_THRESHOLD * max(mags)
        return max(j for j, m in enumerate(mags) if m > cutoff)


def _realize(coeffs, n, backend) -> PolynomialRealization:
    poly = TruncatedSeries(tuple(coeffs), backend)
    return PolynomialRealization(poly, n, effective_degree(poly))


def _check_n(n):
    if not isinstance(n, numbers.Integral) or n < 0:
        raise InputError(f"degree n must be a non-negative integer, got {n!r}")


def build_polynomial(alpha: AlphaSequence, n: int, backend: Backend = RATIONAL) -> PolynomialRealization:
    """Coefficients of P_n by the O(n**2) recurrence."""
    _check_n(n)
    al = alpha.terms(n, backend)
    if backend == COMPLEX64:
        from ._kernels import recurrence_c128

        a = recurrence_c128(np.array(al, dtype=np.complex128).reshape(n), n)
        return _realize([complex(v) for v in a], n, backend)

    with backend.context():
        a = [backend.one()]
        for k in range(1, n + 1):
            acc = al[0] * a[k - 1]
            for j in range(2, k + 1):
                acc += al[j - 1] * a[k - j]
            a.append(-acc / k)
        return _realize(a, n, backend)


def log_generating_series(alpha: AlphaSequence, n: int, backend: Backend = RATIONAL) -> TruncatedSeries:
    """g(x) = sum_{k=1..n} alpha_k x**k / k as an order-n series."""
    al = alpha.terms(n, backend)
    with backend.context():
        g = [backend.zero()] + [al[k - 1] / k for k in range(1, n + 1)]
    return TruncatedSeries(tuple(g), backend)


def build_via_series(alpha: AlphaSequence, n: int, backend: Backend = RATIONAL) -> PolynomialRealization:
    """[exp(-g(x))]_{deg<=n} through the generic series exponential."""
    _check_n(n)
    f = series_exp(-log_generating_series(alpha, n, backend))
    return _realize(f.coeffs, n, backend)


def scaled_integer_coefficients(real: PolynomialRealization) -> list[int]:
    """b_j = j! a_j, required to be integers."""
    if real.backend != RATIONAL:
        raise BackendError("factorial-scaled coefficients need the rational backend")
    out = []
    fact = 1
    for j, a in enumerate(real.coeffs):
        if j:
            fact *= j
        b = a * fact
        if b.denominator != 1:
            raise IntegralityError(f"b_{j} = {j}! * a_{j} = {b} is not an integer")
        out.append(int(b))
    return out


def phi_embedding(alpha_values, backend: Backend = COMPLEX64, cfg=None) -> PolynomialRealization:
    """Send (alpha_1..alpha_n) to P_n together with its root multiset."""
    from .roots import RootSolveConfig, find_roots

    values = tuple(alpha_values)
    if not values:
        raise InputError("phi_embedding needs at least one alpha value")
    real = build_polynomial(Explicit(values), len(values), backend)
    return real.with_roots(find_roots(real, cfg or RootSolveConfig()))
