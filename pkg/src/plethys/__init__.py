"""Polynomials whose roots realise prescribed negative power sums.

For targets alpha_1..alpha_n the degree-n truncation P_n of
exp(-sum_k alpha_k x**k / k) has roots rho_i with sum_i rho_i**-k = alpha_k
for every k <= n. This package builds P_n in exact or floating arithmetic,
finds its roots, checks the identity by independent routes, and works out
the polylogarithm family alpha_k = k**(1-s).
"""

from .backends import COMPLEX64, RATIONAL, Backend, bigcomplex
from .constructor import (
    AlphaSequence,
    Constant,
    Explicit,
    Polylog,
    PolynomialRealization,
    build_polynomial,
    build_via_series,
    effective_degree,
    phi_embedding,
    scaled_integer_coefficients,
)
from .errors import (
    BackendError,
    ContractError,
    ConvergenceError,
    DomainError,
    InputError,
    IntegralityError,
    PlethysError,
)
from .polylog import (
    EulerianPolynomial,
    ZetaConvergenceRecord,
    eulerian_polynomial,
    polylog_series_closed_form,
    zeta_convergence,
    zeta_value,
)
from .roots import RootMultiset, RootSolveConfig, find_roots, reconstruct_from_roots
from .series import (
    TruncatedSeries,
    convert_backend,
    series_derivative,
    series_exp,
    series_log,
    series_mul,
)
from .verify import (
    ErrorMatrix,
    PowerSumReport,
    error_matrix,
    log_series_check,
    power_sums_from_roots,
    power_sums_newton,
    verification_table,
)

__version__ = "0.1.0"
