"""Root extraction for P_n in complex128 or mpmath precision.

The default solver is Aberth-Ehrlich simultaneous iteration started from a
circle of radius |a_0/a_d|**(1/d). Multiprecision solves are seeded by a
complex128 Aberth pass and then iterated to the target tolerance at full
precision. A companion-matrix eigenvalue solver, followed by a short Newton
polish, is kept as a cross-check.

A reported root z is accepted when

    |P(z)| <= tol * sum_j |a_j| |z|**j

(backward-stable acceptance); residuals are re-evaluated with extra guard
bits so that they describe the reported root, not the rounding noise of the
evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .backends import COMPLEX64, Backend
from .constructor import PolynomialRealization
from .errors import BackendError, ContractError, ConvergenceError, DomainError
from .series import TruncatedSeries

CLUSTER_TOL = 1e-7
_METHODS = ("aberth", "companion")


@dataclass(frozen=True)
class RootSolveConfig:
    method: str = "aberth"
    max_iterations: int = 200
    # None: 1e-14 in complex64, 2**-(bits-16) in bigcomplex
    convergence_tol: float | None = None
    precision_bits: int = 256

    def __post_init__(self):
        if self.method not in _METHODS:
            raise ContractError(f"method must be one of {_METHODS}")
        if self.max_iterations < 1:
            raise ContractError("max_iterations must be >= 1")
        if self.convergence_tol is not None and not self.convergence_tol > 0:
            raise ContractError("convergence_tol must be positive")
        if self.precision_bits < 64:
            raise ContractError("precision_bits must be >= 64")

    def tolerance(self, backend: Backend):
        if self.convergence_tol is not None:
            return self.convergence_tol
        if backend.kind == "bigcomplex":
            return mpmath.ldexp(1, -(backend.bits - 16))
        return 1e-14


@dataclass(frozen=True)
class RootMultiset:
    roots: tuple
    multiplicities: tuple
    residuals: tuple
    backend: Backend = COMPLEX64

    def __post_init__(self):
        if not (len(self.roots) == len(self.multiplicities) == len(self.residuals)):
            raise ContractError("roots, multiplicities and residuals must be parallel")
        if any(m < 1 for m in self.multiplicities):
            raise ContractError("multiplicities must be positive")
        if any(r == 0 for r in self.roots):
            raise DomainError("zero root: P(0) = 1 rules these out")

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    def __len__(self):
        return len(self.roots)

    def expanded(self) -> list:
        """Roots repeated according to multiplicity."""
        return [r for r, m in zip(self.roots, self.multiplicities) for _ in range(m)]


def _backward_bound(coeffs, z):
    acc = 0
    az = abs(z)
    for c in reversed(coeffs):
        acc = acc * az + abs(c)
    return acc


def _horner(coeffs, z):
    p = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        p = p * z + c
    return p


def _initial_circle(d, radius):
    # quarter-step angular offset keeps guesses off the real axis
    k = np.arange(d)
    return radius * np.exp(1j * (2 * np.pi * k / d + np.pi / (2 * d) + 0.25))


def _aberth_c128(a, tol, max_iterations, z=None):
    """Vectorised Aberth-Ehrlich on coefficients a_0..a_d (lowest first)."""
    a = np.asarray(a, dtype=np.complex128)
    d = len(a) - 1
    if z is None:
        z = _initial_circle(d, abs(a[0] / a[d]) ** (1.0 / d))
    p = a[::-1]
    dp = np.polyder(p)
    absp = np.abs(p)
    done = np.zeros(d, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for it in range(max_iterations):
            pv = np.polyval(p, z)
            done = np.abs(pv) <= tol * np.polyval(absp, np.abs(z))
            if done.all():
                return z, True
            dv = np.polyval(dp, z)
            ratio = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            w = ratio / (1.0 - ratio * s)
            w[done | ~np.isfinite(w)] = 0
            if np.all(np.abs(w) <= tol * np.abs(z)):
                return z, False
            z = z - w
    return z, False


def _aberth_mp(a, z, tol, max_iterations):
    """Gauss-Seidel Aberth-Ehrlich at the current mpmath precision."""
    d = len(a) - 1
    z = list(z)
    absa = [abs(c) for c in a]
    for it in range(max_iterations):
        all_done = True
        moved = False
        for i in range(d):
            zi = z[i]
            p = a[d]
            dp = mpmath.mpc(0)
            for c in reversed(a[:-1]):
                dp = dp * zi + p
                p = p * zi + c
            if abs(p) <= tol * _backward_bound(absa, zi):
                continue
            all_done = False
            if dp == 0:
                dp = mpmath.mpc(tol)
            ratio = p / dp
            s = mpmath.mpc(0)
            for j in range(d):
                if j != i:
                    s += 1 / (zi - z[j])
            w = ratio / (1 - ratio * s)
            if abs(w) > tol * abs(zi):
                moved = True
            z[i] = zi - w
        if all_done:
            return z, True
        if not moved:
            return z, False
    return z, False


def _companion_roots(a, backend):
    d = len(a) - 1
    if backend.kind == "complex64":
        c = np.asarray(a, dtype=np.complex128) / a[d]
        m = np.zeros((d, d), dtype=np.complex128)
        m[0, :] = -c[d - 1 :: -1]
        m[np.arange(1, d), np.arange(d - 1)] = 1
        return list(np.linalg.eigvals(m))
    m = mpmath.zeros(d, d)
    for j in range(d):
        m[0, j] = -a[d - 1 - j] / a[d]
    for i in range(1, d):
        m[i, i - 1] = 1
    return list(mpmath.eig(m, left=False, right=False))


def _newton_polish(a, z, steps=3):
    # eigenvalues are backward stable for the matrix, not the coefficients
    dp = [j * a[j] for j in range(1, len(a))]
    out = []
    for zi in z:
        for _ in range(steps):
            d = _horner(dp, zi)
            if d == 0:
                break
            zi = zi - _horner(a, zi) / d
        out.append(zi)
    return out


def _cluster(z, scale, tol):
    """Group approximations closer than max(CLUSTER_TOL, 4 sqrt(tol)) * scale.

    A root of multiplicity m is only resolved to about tol**(1/m), so the
    floor tracks the solve tolerance for double roots in complex128.
    """
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    thr = max(CLUSTER_TOL, 4 * float(tol) ** 0.5) * scale
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) < thr:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(z[i])
    return [(sum(g[1:], g[0]) / len(g), len(g)) for g in groups.values()]


def find_roots(real: PolynomialRealization, cfg: RootSolveConfig | None = None) -> RootMultiset:
    """All ``real.effective_degree`` roots of P_n, sorted by (re, im)."""
    cfg = cfg or RootSolveConfig()
    backend = real.backend
    if not backend.is_float:
        raise BackendError("find_roots needs a float backend; convert the polynomial first")
    d = real.effective_degree
    if d == 0:
        return RootMultiset((), (), (), backend)
    tol = cfg.tolerance(backend)
    a = list(real.coeffs[: d + 1])

    if backend.kind == "complex64":
        if cfg.method == "aberth":
            z, _ = _aberth_c128(a, tol, cfg.max_iterations)
            z = [complex(v) for v in z]
        else:
            z = _newton_polish(a, [complex(v) for v in _companion_roots(a, backend)])
        clusters = _cluster(z, max(abs(v) for v in z), tol)
        guard = 128
    else:
        with backend.context():
            if cfg.method == "aberth":
                seed = None
                try:
                    ca = [complex(c) for c in a]
                    if all(map(math.isfinite, (abs(c) for c in ca))) and ca[d] != 0:
                        seed, _ = _aberth_c128(ca, 1e-14, cfg.max_iterations)
                        if not np.all(np.isfinite(seed)) or np.any(seed == 0):
                            seed = None
                except (OverflowError, ZeroDivisionError):
                    seed = None
                if seed is None:
                    r = abs(a[0] / a[d]) ** (mpmath.mpf(1) / d)
                    seed = [r * mpmath.expjpi(2 * mpmath.mpf(k) / d + mpmath.mpf(1) / (2 * d)) for k in range(d)]
                z, _ = _aberth_mp(a, [mpmath.mpc(v) for v in seed], tol, cfg.max_iterations)
            else:
                z = _newton_polish(a, [mpmath.mpc(v) for v in _companion_roots(a, backend)])
            clusters = _cluster(z, max(abs(v) for v in z), tol)
        guard = backend.bits + 32

    roots, mults, residuals = [], [], []
    failed = False
    with mpmath.workprec(guard):
        ma = [mpmath.mpc(c) for c in a]
        for r, m in clusters:
            rr = mpmath.mpc(r)
            res = abs(_horner(ma, rr))
            if not res <= tol * _backward_bound(ma, rr):
                failed = True
            roots.append(r)
            mults.append(m)
            residuals.append(res)
    if backend.kind == "complex64":
        residuals = [float(v) for v in residuals]
    else:
        with backend.context():
            residuals = [+v for v in residuals]

    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    roots = tuple(roots[i] for i in order)
    mults = tuple(mults[i] for i in order)
    residuals = tuple(residuals[i] for i in order)
    if failed or sum(mults) != d or any(r == 0 for r in roots):
        raise ConvergenceError(
            f"{cfg.method} root solve for degree {d} failed the backward-stable acceptance test",
            best=roots,
            residuals=residuals,
        )
    return RootMultiset(roots, mults, residuals, backend)


def reconstruct_from_roots(rm: RootMultiset) -> TruncatedSeries:
    """Expand prod_i (1 - x/rho_i)**m_i as an order-``rm.degree`` series."""
    be = rm.backend
    if any(r == 0 for r in rm.roots):
        raise DomainError("cannot form 1 - x/rho for rho = 0")
    d = rm.degree
    if be.kind == "complex64":
        c = np.zeros(d + 1, dtype=np.complex128)
        c[0] = 1
        deg = 0
        for r in rm.expanded():
            inv = 1 / complex(r)
            c[1 : deg + 2] -= inv * c[: deg + 1]
            deg += 1
        return TruncatedSeries(tuple(complex(v) for v in c), be)
    with be.context():
        c = [be.one()] + [be.zero()] * d
        deg = 0
        for r in rm.expanded():
            inv = 1 / r
            for j in range(deg + 1, 0, -1):
                c[j] = c[j] - inv * c[j - 1]
            deg += 1
        return TruncatedSeries(tuple(c), be)
