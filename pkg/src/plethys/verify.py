"""Independent checks that the roots of P_n hit their power-sum targets.

Three routes to p_{-k} = sum_i rho_i**-k are provided:

* from an explicit root multiset (:func:`power_sums_from_roots`),
* root-free, by Newton's identities on the reversed polynomial
  (:func:`power_sums_newton`, exact in the rational backend),
* through the formal logarithm, whose x**k coefficient is -p_{-k}/k
  (:func:`log_series_check`).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import mpmath
import numpy as np

from .backends import RATIONAL, Backend, bigcomplex
from .constructor import AlphaSequence, PolynomialRealization, build_polynomial
from .errors import BackendError, ContractError, ConvergenceError, InputError
from .roots import RootMultiset, RootSolveConfig, find_roots
from .series import series_log

#: Deviations below this count as agreement for float backends.
EXACT_THRESHOLD = 1e-8
#: log10 floor used for zero / sub-1e-16 deviations in the error matrix.
LOG_FLOOR = -16.0


@dataclass(frozen=True)
class PowerSumReport:
    n: int
    k_max: int
    values: tuple
    targets: tuple  # None where the alpha source has no term
    deviations: tuple
    backend: Backend = RATIONAL

    def __post_init__(self):
        if not (len(self.values) == len(self.targets) == len(self.deviations) == self.k_max):
            raise ContractError("report vectors must all have length k_max")

    def exact(self, k: int) -> bool:
        """Whether entry k (1-based) agrees with its target.

        Identity in the rational backend, deviation < EXACT_THRESHOLD otherwise.
        """
        dev = self.deviations[k - 1]
        if dev is None:
            return False
        if self.backend.is_exact:
            return dev == 0
        return dev < EXACT_THRESHOLD


class CheckResult(NamedTuple):
    passed: bool
    witness: int | None  # first failing k


def power_sums_from_roots(rm: RootMultiset, k_max: int) -> list:
    """sum_i m_i rho_i**-k for k = 1..k_max by repeated multiplication."""
    if k_max < 1:
        raise ContractError("k_max must be >= 1")
    be = rm.backend
    if not be.is_float:
        raise BackendError("root-based power sums need a float backend")
    with be.context():
        sums = [be.zero() for _ in range(k_max)]
        for r, m in zip(rm.roots, rm.multiplicities):
            inv = 1 / r
            pw = inv
            for k in range(k_max):
                sums[k] += m * pw
                pw *= inv
        return sums


def power_sums_newton(real: PolynomialRealization, k_max: int) -> list:
    """p_{-k} of P_n's roots without finding them.

    The reversed polynomial sum_j a_j y**(d-j) is monic with roots 1/rho_i,
    so Newton's identities give p_k = -(k a_k + sum_{j=1..k-1} a_j p_{k-j}),
    with a_j = 0 beyond the effective degree d.
    """
    if k_max < 1:
        raise ContractError("k_max must be >= 1")
    be = real.backend
    d = real.effective_degree
    a = real.coeffs
    with be.context():
        zero = be.zero()
        p = [zero]
        for k in range(1, k_max + 1):
            acc = k * a[k] if k <= d else zero
            for j in range(1, min(k - 1, d) + 1):
                acc += a[j] * p[k - j]
            p.append(-acc)
        return p[1:]


def log_series_check(real: PolynomialRealization, alpha: AlphaSequence) -> CheckResult:
    """[log P_n]_{<=n} must have x**k coefficient -alpha_k/k for k = 1..n."""
    if real.backend != RATIONAL:
        raise BackendError("log_series_check is an exact check; use the rational backend")
    n = real.nominal_degree
    logp = series_log(real.poly)
    targets = alpha.terms(n, RATIONAL)
    for k in range(1, n + 1):
        if logp[k] != -targets[k - 1] / k:
            return CheckResult(False, k)
    return CheckResult(True, None)


def _targets(alpha: AlphaSequence, k_max: int, backend: Backend) -> list:
    avail = k_max if alpha.length is None else min(alpha.length, k_max)
    out = alpha.terms(avail, backend)
    return out + [None] * (k_max - avail)


def _report(n, k_max, values, targets, backend):
    with backend.context():
        devs = tuple(None if t is None else abs(v - t) for v, t in zip(values, targets))
    return PowerSumReport(n, k_max, tuple(values), tuple(targets), devs, backend)


def verification_table(
    alpha: AlphaSequence,
    n_list,
    k_max: int,
    backend: Backend = RATIONAL,
    cfg: RootSolveConfig | None = None,
) -> list[PowerSumReport]:
    """One :class:`PowerSumReport` per n: Newton sums (exact) or root sums (float)."""
    n_list = list(n_list)
    if not n_list:
        raise InputError("n_list must be non-empty")
    targets = _targets(alpha, k_max, backend)
    reports = []
    for n in n_list:
        real = build_polynomial(alpha, n, backend)
        if backend.is_exact:
            values = power_sums_newton(real, k_max)
        else:
            values = power_sums_from_roots(find_roots(real, cfg), k_max)
        reports.append(_report(n, k_max, values, targets, backend))
    return reports


@dataclass(frozen=True)
class ErrorMatrix:
    """log10 |p_{-k}^{(n)} - alpha_k| on the grid n = 1..n_max, k = 1..k_max.

    ``entries[n-1, k-1]``; deviations below 10**floor are stored as ``floor``;
    rows whose root solve failed are NaN and listed in ``failures``.
    """

    n_max: int
    k_max: int
    entries: np.ndarray
    floor: float = LOG_FLOOR
    failures: tuple = ()

    def __getitem__(self, nk):
        n, k = nk
        return float(self.entries[n - 1, k - 1])

    def lower_triangle(self) -> np.ndarray:
        """Entries with k <= n, flattened."""
        n_idx, k_idx = np.indices(self.entries.shape)
        return self.entries[k_idx <= n_idx]

    def theorem_holds(self, threshold: float = EXACT_THRESHOLD) -> bool:
        tri = self.lower_triangle()
        return not self.failures and bool(np.all(tri <= math.log10(threshold)))


def _log10_dev(dev, floor):
    if dev == 0:
        return floor
    v = float(mpmath.log10(dev)) if isinstance(dev, (mpmath.mpf, mpmath.mpc)) else math.log10(dev)
    return max(v, floor)


def _error_row(args):
    alpha, n, k_max, cfg, backend, floor = args
    real = build_polynomial(alpha, n, backend)
    try:
        rm = find_roots(real, cfg)
    except ConvergenceError:
        return n, None
    values = power_sums_from_roots(rm, k_max) if rm.degree else [backend.zero()] * k_max
    targets = alpha.terms(k_max, backend)
    with backend.context():
        row = [_log10_dev(abs(v - t), floor) for v, t in zip(values, targets)]
    return n, row


def error_matrix(
    alpha: AlphaSequence,
    n_max: int,
    k_max: int,
    cfg: RootSolveConfig | None = None,
    backend: Backend | None = None,
    workers: int = 1,
) -> ErrorMatrix:
    """Fill the (n, k) deviation grid; rows are independent and may run in parallel."""
    cfg = cfg or RootSolveConfig()
    backend = backend or bigcomplex(cfg.precision_bits)
    if not backend.is_float:
        raise BackendError("error_matrix needs a float backend")
    if n_max < 1 or k_max < 1:
        raise InputError("n_max and k_max must be >= 1")
    if alpha.length is not None and alpha.length < max(n_max, k_max):
        raise InputError("alpha source too short for the requested grid")
    jobs = [(alpha, n, k_max, cfg, backend, LOG_FLOOR) for n in range(1, n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_error_row, jobs))
    else:
        rows = [_error_row(j) for j in jobs]
    entries = np.full((n_max, k_max), np.nan)
    failures = []
    for n, row in rows:
        if row is None:
            failures.append(n)
        else:
            entries[n - 1] = row
    entries.setflags(write=False)
    return ErrorMatrix(n_max, k_max, entries, LOG_FLOOR, tuple(failures))
