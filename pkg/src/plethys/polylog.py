"""The family alpha_k = k**(1-s): Eulerian closed forms and zeta values.

For s = -m <= 0 the log-generating function is the rational function

    Li_{-m}(x) = x A_m(x) / (1 - x)**(m+1),

with A_m the Eulerian polynomial. For real s > 1, Li_s(1) = zeta(s), so
P_n^{(s)}(1) tends to exp(-zeta(s)).
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .backends import RATIONAL, bigcomplex
from .constructor import Polylog, build_polynomial
from .errors import DomainError, InputError
from .series import TruncatedSeries

# B_2 .. B_12, then B_14 for the remainder bound
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
)
_B14 = Fraction(7, 6)


@dataclass(frozen=True)
class EulerianPolynomial:
    """A_m(x) = sum_j coeffs[j] x**j with coeffs[j] = <m, j>."""

    m: int
    coeffs: tuple

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def eulerian_polynomial(m: int) -> EulerianPolynomial:
    if not isinstance(m, numbers.Integral) or m < 0:
        raise InputError("Eulerian order must be a non-negative integer")
    row = [1]
    for r in range(1, m + 1):
        # <r, j> = (j+1)<r-1, j> + (r-j)<r-1, j-1>
        prev = row + [0]
        row = [(j + 1) * prev[j] + ((r - j) * prev[j - 1] if j else 0) for j in range(r)]
    return EulerianPolynomial(m, tuple(row))


def polylog_series_closed_form(m: int, order: int) -> TruncatedSeries:
    """Li_{-m}(x) to ``order`` from x A_m(x) (1-x)**-(m+1)."""
    if order < 0:
        raise InputError("order must be non-negative")
    num = [0] + list(eulerian_polynomial(m).coeffs)
    # [x**i] (1-x)**-(m+1) = C(i+m, m)
    inv = [math.comb(i + m, m) for i in range(order + 1)]
    out = [sum(num[j] * inv[k - j] for j in range(min(k, len(num) - 1) + 1)) for k in range(order + 1)]
    return TruncatedSeries(tuple(Fraction(c) for c in out), RATIONAL)


def _real_s(s):
    if isinstance(s, (complex, mpmath.mpc)) or not isinstance(s, (numbers.Real, mpmath.mpf)):
        raise DomainError(f"zeta_value takes real s only, got {s!r}")
    if not s > 1:
        raise DomainError(f"zeta(s) needs s > 1 here (s = {s}): divergent or analytic continuation required")
    return s


def zeta_value(s, precision_bits: int = 256):
    """zeta(s) for real s > 1 by Euler-Maclaurin summation.

    Uses the Dirichlet sum up to N-1, the integral and half-term corrections,
    and Bernoulli terms B_2..B_12. N is chosen so the first omitted term (a
    bound on the remainder for real s) is below 2**-(precision_bits + 4); the
    arithmetic carries 32 guard bits. The returned value is within
    2**(-precision_bits + 8) of zeta(s).
    """
    s = _real_s(s)
    if isinstance(s, Fraction):
        s = mpmath.mpf(s.numerator) / s.denominator
    wp = precision_bits + 32
    with mpmath.workprec(wp):
        s = mpmath.mpf(s)
        # (s)_13 |B_14| / 14! * N**(-s-13) <= eps
        rising = mpmath.rf(s, 13)
        coef = rising * mpmath.mpf(_B14.numerator) / _B14.denominator / mpmath.factorial(14)
        eps = mpmath.ldexp(1, -(precision_bits + 4))
        big_n = int(mpmath.ceil((coef / eps) ** (1 / (s + 13)))) + 1
        big_n = max(big_n, 10)

        total = mpmath.fsum(mpmath.power(k, -s) for k in range(1, big_n))
        nn = mpmath.mpf(big_n)
        total += nn ** (1 - s) / (s - 1) + nn ** (-s) / 2
        rising = s  # (s)_{2k-1}
        for k, b in enumerate(_BERNOULLI, start=1):
            term = mpmath.mpf(b.numerator) / b.denominator / mpmath.factorial(2 * k)
            total += term * rising * nn ** (-s - 2 * k + 1)
            rising *= (s + 2 * k - 1) * (s + 2 * k)
    with mpmath.workprec(precision_bits):
        return +total


@dataclass(frozen=True)
class ZetaConvergenceRecord:
    s: object
    target: object  # exp(-zeta(s))
    rows: tuple  # (n, P_n(1), |P_n(1) - target|)

    @property
    def deviations(self) -> list:
        return [r[2] for r in self.rows]


def zeta_convergence(s, n_list, precision_bits: int = 256) -> ZetaConvergenceRecord:
    """P_n^{(s)}(1) = sum_j a_j against exp(-zeta(s)) for each n in ``n_list``."""
    _real_s(s)
    n_list = list(n_list)
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise InputError("n_list must be non-empty and strictly ascending")
    backend = bigcomplex(precision_bits)
    zeta = zeta_value(s, precision_bits)
    # P_{n-1} is a prefix of P_n, so one build covers every n
    coeffs = build_polynomial(Polylog(s), n_list[-1], backend).coeffs
    with backend.context():
        target = mpmath.exp(-zeta)
        rows = []
        partial = mpmath.mpf(0)
        done = 0
        for n in n_list:
            for j in range(done, n + 1):
                partial += coeffs[j].real
            done = n + 1
            rows.append((n, +partial, abs(partial - target)))
    return ZetaConvergenceRecord(s, target, tuple(rows))
