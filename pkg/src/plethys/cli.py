"""Command-line interface.

Exit codes: 0 success, 2 input or domain error, 3 root-solve non-convergence,
4 invariant violation.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

import mpmath

from . import io as pio
from .backends import RATIONAL, parse_backend
from .constructor import (
    Constant,
    Explicit,
    Polylog,
    build_polynomial,
    scaled_integer_coefficients,
)
from .errors import ConvergenceError, IntegralityError, PlethysError
from .polylog import zeta_convergence
from .roots import RootSolveConfig, find_roots
from .verify import error_matrix, log_series_check, power_sums_newton, verification_table

EXIT_OK, EXIT_INPUT, EXIT_CONVERGENCE, EXIT_INVARIANT = 0, 2, 3, 4

TABLE1_LABELS = {
    -3: ("k^4", "x(1+4x+x^2)/(1-x)^4"),
    -2: ("k^3", "x(1+x)/(1-x)^3"),
    -1: ("k^2", "x/(1-x)^2"),
    0: ("k", "x/(1-x)"),
    1: ("1", "-log(1-x)"),
    2: ("1/k", "Li_2(x)"),
    3: ("1/k^2", "Li_3(x)"),
}

PLOT_SCRIPT = '''\
"""Render a plethys heatmap CSV (n, k, log10_error) with matplotlib."""
import sys

import matplotlib.pyplot as plt
import numpy as np

path = sys.argv[1] if len(sys.argv) > 1 else {csv_path!r}
data = np.genfromtxt(path, delimiter=",", comments="#", skip_header=2)
n = data[:, 0].astype(int)
k = data[:, 1].astype(int)
grid = np.full((n.max(), k.max()), np.nan)
grid[n - 1, k - 1] = data[:, 2]
fig, ax = plt.subplots(figsize=(6, 5))
im = ax.imshow(grid, origin="lower", extent=(0.5, k.max() + 0.5, 0.5, n.max() + 0.5), cmap="viridis")
ax.set_xlabel("k")
ax.set_ylabel("n")
fig.colorbar(im, label="log10 |p_-k - alpha_k|")
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "heatmap.png", dpi=150)
'''


class UsageError(PlethysError):
    pass


def parse_n_list(text: str) -> list[int]:
    """'2,3,4' or '2..50' or a mix such as '2..5,10'."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"bad n-list {text!r}") from exc
    if not out:
        raise UsageError("empty n-list")
    return out


def parse_param(text: str):
    for conv in (int, Fraction, float, complex):
        try:
            v = conv(text.replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            continue
        if isinstance(v, Fraction) and v.denominator == 1:
            return int(v)
        return v
    raise UsageError(f"cannot parse parameter {text!r}")


def alpha_source(args):
    picked = sum(x is not None for x in (args.alphas, args.alphas_file, args.family))
    if picked != 1:
        raise UsageError("give exactly one of --alphas, --alphas-file, --family")
    if args.alphas is not None:
        return Explicit(pio.parse_alpha_list(args.alphas))
    if args.alphas_file is not None:
        return Explicit(pio.load_alphas_file(args.alphas_file))
    if args.family == "polylog":
        if args.s is None:
            raise UsageError("--family polylog needs --s")
        return Polylog(parse_param(args.s))
    if args.c is None:
        raise UsageError("--family constant needs --c")
    return Constant(args.c)


def resolve_n(args, alpha):
    if args.n is not None:
        return args.n
    if alpha.length is None:
        raise UsageError("--n is required for family sources")
    return alpha.length


def backend_of(args, default):
    return parse_backend(args.backend or default, args.bits)


def scalar_cells(v, backend):
    if backend.is_exact:
        return [v]
    return list(pio.split_complex(v))


def emit(args, kind, columns, rows):
    text = pio.render(kind, columns, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_alphas(args):
    alpha = alpha_source(args)
    backend = backend_of(args, "rational")
    n = resolve_n(args, alpha)
    vals = alpha.terms(n, backend)
    cols = ["k", "alpha"] if backend.is_exact else ["k", "re", "im"]
    emit(args, "alphas", cols, [[k] + scalar_cells(v, backend) for k, v in enumerate(vals, 1)])


def cmd_build(args):
    alpha = alpha_source(args)
    backend = backend_of(args, "rational")
    real = build_polynomial(alpha, resolve_n(args, alpha), backend)
    cols = ["j", "a"] if backend.is_exact else ["j", "re", "im"]
    with backend.context():
        emit(args, "coefficients", cols, [[j] + scalar_cells(a, backend) for j, a in enumerate(real.coeffs)])


def cmd_verify(args):
    alpha = alpha_source(args)
    backend = backend_of(args, "rational")
    cfg = RootSolveConfig(precision_bits=args.bits)
    n_list = parse_n_list(args.n_list)
    reports = verification_table(alpha, n_list, args.k_max, backend, cfg)
    if args.layout == "grid":
        cols = ["n"] + [f"k={k}" for k in range(1, args.k_max + 1)]
        rows = []
        for rep in reports:
            row = [rep.n]
            for k, v in enumerate(rep.values, 1):
                re_part = v.real if not backend.is_exact else v
                cell = f"{float(re_part):.2f}"
                row.append(cell + ("*" if k <= rep.n and rep.exact(k) else ""))
            rows.append(row)
        emit(args, "powersum_grid", cols, rows)
        return
    if backend.is_exact:
        cols = ["n", "k", "value", "target", "deviation", "exact"]
    else:
        cols = ["n", "k", "re", "im", "target_re", "target_im", "deviation", "exact"]
    rows = []
    with backend.context():
        for rep in reports:
            for k in range(1, rep.k_max + 1):
                t = rep.targets[k - 1]
                tcells = [t] if backend.is_exact else (list(pio.split_complex(t)) if t is not None else [None, None])
                rows.append(
                    [rep.n, k]
                    + scalar_cells(rep.values[k - 1], backend)
                    + tcells
                    + [rep.deviations[k - 1], int(k <= rep.n and rep.exact(k))]
                )
    emit(args, "powersums", cols, rows)


def cmd_roots(args):
    alpha = alpha_source(args)
    backend = backend_of(args, "complex64")
    cfg = RootSolveConfig(method=args.method, max_iterations=args.max_iterations, precision_bits=args.bits)
    if args.n_list:
        n_list = parse_n_list(args.n_list)
    else:
        n_list = [resolve_n(args, alpha)]
    rows = []
    for n in n_list:
        real = build_polynomial(alpha, n, backend)
        try:
            rm = find_roots(real, cfg)
        except ConvergenceError as exc:
            raise ConvergenceError(f"n={n}: {exc}", exc.best, exc.residuals) from exc
        with backend.context():
            for r, m, res in zip(rm.roots, rm.multiplicities, rm.residuals):
                rows.append([n, *pio.split_complex(r), m, res])
    with mpmath.workprec(args.bits):
        emit(args, "roots", ["n", "re", "im", "multiplicity", "residual"], rows)


def cmd_heatmap(args):
    alpha = alpha_source(args)
    backend = backend_of(args, "bigcomplex")
    cfg = RootSolveConfig(precision_bits=args.bits)
    em = error_matrix(alpha, args.n_max, args.k_max, cfg, backend, workers=args.workers)
    rows = []
    for n in range(1, em.n_max + 1):
        for k in range(1, em.k_max + 1):
            rows.append([n, k, em[n, k]])
    emit(args, "heatmap", ["n", "k", "log10_error"], rows)
    if args.plot_script:
        with open(args.plot_script, "w") as fh:
            fh.write(PLOT_SCRIPT.format(csv_path=args.out or "heatmap.csv"))
    if em.failures:
        print(f"root solve failed for n in {list(em.failures)}", file=sys.stderr)
        return EXIT_CONVERGENCE
    return EXIT_OK


def cmd_oeis(args):
    s = parse_param(args.s)
    if not isinstance(s, int) or s > 0:
        raise UsageError("oeis needs an integer s <= 0")
    b = scaled_integer_coefficients(build_polynomial(Polylog(s), args.count, RATIONAL))
    if args.bfile:
        rows = pio.compare_bfile(b, pio.parse_bfile(args.bfile))
        emit(args, "oeis", ["j", "b", "reference", "status"], rows)
        bad = [r[0] for r in rows if r[3] in ("mismatch", "sign")]
        if bad:
            print(f"{len(bad)} terms differ from the b-file (first at j={bad[0]})", file=sys.stderr)
        return EXIT_OK
    emit(args, "oeis", ["j", "b"], [[j, v] for j, v in enumerate(b)])
    return EXIT_OK


def cmd_table1(args):
    rows = []
    for s in range(-3, 4):
        a = build_polynomial(Polylog(s), 4, RATIONAL).coeffs
        rows.append([s, *TABLE1_LABELS[s], *a])
    emit(args, "table1", ["s", "alpha_k", "g", "a0", "a1", "a2", "a3", "a4"], rows)


def cmd_zeta(args):
    s = parse_param(args.s)
    rec = zeta_convergence(s, parse_n_list(args.n_list), args.bits)
    with mpmath.workprec(args.bits):
        rows = [[n, v, rec.target, dev] for n, v, dev in rec.rows]
        emit(args, "zeta", ["n", "value", "target", "deviation"], rows)


def cmd_check(args):
    """Exact truncation-exactness check on random rational alphas."""
    rng = random.Random(args.seed)
    rows = []
    failed = 0
    for trial in range(args.trials):
        n = rng.randint(1, args.max_n)
        vals = [Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(n)]
        real = build_polynomial(Explicit(vals), n, RATIONAL)
        newton_ok = power_sums_newton(real, n) == vals
        log_ok = log_series_check(real, Explicit(vals)).passed
        ok = newton_ok and log_ok
        failed += not ok
        rows.append([trial, n, int(newton_ok), int(log_ok)])
    emit(args, "check", ["trial", "n", "newton", "log_series"], rows)
    return EXIT_INVARIANT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--backend", choices=("rational", "complex64", "bigcomplex"))
    common.add_argument("--bits", type=int, default=256, help="bigcomplex precision")
    common.add_argument("--seed", type=int, default=0)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--alphas", help='inline JSON list, e.g. "[1, 2, \\"1/3\\"]"')
    source.add_argument("--alphas-file")
    source.add_argument("--family", choices=("polylog", "constant"))
    source.add_argument("--s", help="polylog parameter (alpha_k = k^(1-s))")
    source.add_argument("--c", help="constant alpha value")

    p = argparse.ArgumentParser(prog="plethys", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("alphas", parents=[common, source], help="write a tagged alpha file")
    q.add_argument("--n", type=int)
    q.set_defaults(func=cmd_alphas)

    q = sub.add_parser("build", parents=[common, source], help="coefficients of P_n")
    q.add_argument("--n", type=int)
    q.set_defaults(func=cmd_build)

    q = sub.add_parser("verify", parents=[common, source], help="power sums of P_n against targets")
    q.add_argument("--n-list", required=True)
    q.add_argument("--k-max", type=int, required=True)
    q.add_argument("--layout", choices=("long", "grid"), default="long")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("roots", parents=[common, source], help="root multisets of P_n")
    q.add_argument("--n", type=int)
    q.add_argument("--n-list")
    q.add_argument("--method", choices=("aberth", "companion"), default="aberth")
    q.add_argument("--max-iterations", type=int, default=200)
    q.set_defaults(func=cmd_roots)

    q = sub.add_parser("heatmap", parents=[common, source], help="log10 power-sum error grid")
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--k-max", type=int, required=True)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--plot-script", help="also write a matplotlib script reading the CSV")
    q.set_defaults(func=cmd_heatmap)

    q = sub.add_parser("oeis", parents=[common], help="factorial-scaled integer sequence b_j")
    q.add_argument("--s", required=True)
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--bfile", help="local OEIS b-file to compare against")
    q.set_defaults(func=cmd_oeis)

    q = sub.add_parser("table1", parents=[common], help="polylog family coefficients a_0..a_4")
    q.set_defaults(func=cmd_table1)

    q = sub.add_parser("zeta", parents=[common], help="P_n(1) against exp(-zeta(s))")
    q.add_argument("--s", required=True)
    q.add_argument("--n-list", default="10,20,40,80")
    q.set_defaults(func=cmd_zeta)

    q = sub.add_parser("check", parents=[common], help="random exact checks of the power-sum identity")
    q.add_argument("--trials", type=int, default=200)
    q.add_argument("--max-n", type=int, default=30)
    q.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ConvergenceError as exc:
        print(f"plethys: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except IntegralityError as exc:
        print(f"plethys: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except PlethysError as exc:
        print(f"plethys: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
