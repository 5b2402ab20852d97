"""Truncated formal power series over a single coefficient backend.

A :class:`TruncatedSeries` of order ``n`` stores the coefficients of
``x**0 .. x**n``. The exp/log pair is computed by the differential-equation
recurrences ``f' = h' f`` (exp) and ``h' = f'/f`` (log), both O(n**2), so
that ``series_log(series_exp(h)) == h`` holds exactly in the rational backend.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .backends import COMPLEX64, RATIONAL, Backend, rational_to_mpf
from .errors import BackendError, ContractError, DomainError


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``coeffs[j]`` of ``x**j`` for ``j = 0 .. order``."""

    coeffs: tuple
    backend: Backend = RATIONAL

    def __post_init__(self):
        if not isinstance(self.backend, Backend):
            raise ContractError(f"backend must be a Backend, got {self.backend!r}")
        values = tuple(self.coeffs)
        if not values:
            raise ContractError("a truncated series needs at least the constant coefficient")
        if not all(self.backend.check(c) for c in values):
            values = tuple(self.backend.coerce(c) for c in values)
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def zeros(cls, order: int, backend: Backend = RATIONAL) -> "TruncatedSeries":
        if order < 0:
            raise ContractError("order must be non-negative")
        return cls((backend.zero(),) * (order + 1), backend)

    @classmethod
    def one(cls, order: int, backend: Backend = RATIONAL) -> "TruncatedSeries":
        z = cls.zeros(order, backend)
        return cls((backend.one(),) + z.coeffs[1:], backend)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def __neg__(self):
        with self.backend.context():
            return TruncatedSeries(tuple(-c for c in self.coeffs), self.backend)

    def __add__(self, other):
        _check_compatible(self, other)
        with self.backend.context():
            return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.backend)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_mul(self, other)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Keep coefficients up to ``x**order`` (``order`` <= current order)."""
        if not 0 <= order <= self.order:
            raise ContractError(f"cannot truncate order {self.order} series to order {order}")
        return TruncatedSeries(self.coeffs[: order + 1], self.backend)

    def evaluate(self, x):
        """Horner evaluation of the polynomial part at ``x``."""
        with self.backend.context():
            acc = self.backend.zero()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], backend={self.backend})"


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries):
    if not isinstance(a, TruncatedSeries) or not isinstance(b, TruncatedSeries):
        raise ContractError("operands must be TruncatedSeries")
    if a.backend != b.backend:
        raise BackendError(f"backend mismatch: {a.backend} vs {b.backend}")
    if a.order != b.order:
        raise ContractError(f"order mismatch: {a.order} vs {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    n = a.order
    if a.backend == COMPLEX64:
        prod = np.convolve(np.array(a.coeffs), np.array(b.coeffs))[: n + 1]
        return TruncatedSeries(tuple(complex(c) for c in prod), a.backend)
    with a.backend.context():
        out = []
        for j in range(n + 1):
            acc = a.coeffs[0] * b.coeffs[j]
            for i in range(1, j + 1):
                acc += a.coeffs[i] * b.coeffs[j - i]
            out.append(acc)
        return TruncatedSeries(tuple(out), a.backend)


def series_exp(h: TruncatedSeries) -> TruncatedSeries:
    """exp(h) truncated to ``h.order``; requires ``h[0] == 0``.

    Uses k f_k = sum_{j=1..k} j h_j f_{k-j}.
    """
    if h.coeffs[0] != 0:
        raise DomainError("series_exp needs a zero constant term")
    be = h.backend
    with be.context():
        jh = [j * c for j, c in enumerate(h.coeffs)]
        f = [be.one()]
        for k in range(1, h.order + 1):
            acc = jh[1] * f[k - 1]
            for j in range(2, k + 1):
                acc += jh[j] * f[k - j]
            f.append(acc / k)
        return TruncatedSeries(tuple(f), be)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) truncated to ``f.order``; requires ``f[0] == 1`` exactly.

    Uses k L_k = k f_k - sum_{j=1..k-1} j L_j f_{k-j}.
    """
    if f.coeffs[0] != 1:
        raise DomainError("series_log needs constant term exactly 1")
    be = f.backend
    with be.context():
        jl = [be.zero()]
        for k in range(1, f.order + 1):
            acc = k * f.coeffs[k]
            for j in range(1, k):
                acc -= jl[j] * f.coeffs[k - j]
            jl.append(acc)
        out = [be.zero()] + [jl[k] / k for k in range(1, f.order + 1)]
        return TruncatedSeries(tuple(out), be)


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    if f.order == 0:
        return TruncatedSeries.zeros(0, f.backend)
    with f.backend.context():
        return TruncatedSeries(tuple(j * f.coeffs[j] for j in range(1, f.order + 1)), f.backend)


def convert_backend(f: TruncatedSeries, target: Backend) -> TruncatedSeries:
    """Explicit, correctly rounded backend conversion.

    Allowed: rational -> complex64, rational -> bigcomplex, bigcomplex -> complex64.
    Converting to the same backend returns ``f`` unchanged.
    """
    src = f.backend
    if src == target:
        return f
    if src.kind == "rational" and target.kind == "complex64":
        return TruncatedSeries(tuple(complex(float(c), 0.0) for c in f.coeffs), target)
    if src.kind == "rational" and target.kind == "bigcomplex":
        with target.context():
            vals = tuple(mpmath.mpc(rational_to_mpf(c, target.bits)) for c in f.coeffs)
        return TruncatedSeries(vals, target)
    if src.kind == "bigcomplex" and target.kind == "complex64":
        return TruncatedSeries(tuple(complex(c) for c in f.coeffs), target)
    raise BackendError(f"unsupported conversion {src} -> {target}")

