"""Command-line frontend.

Subcommands compute any library quantity over parameter grids and emit CSV
on stdout (header row, 12 significant digits, LF endings, rows ordered n
outer, lambda middle, alpha inner).  ``profile`` writes plot-ready density
curves to a file and ``table`` replays one embedded reference table and
reports a pass/fail matrix.

Exit codes: 0 ok, 1 golden-table mismatch, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from .model import ModelParams, density_position, effective_frequency, energy
from .position_entropy import (
    BudgetExceededError,
    EntropyOrder,
    disequilibrium,
    entropic_moment,
)
from .quadrature import (
    entropic_moment_numeric,
    momentum_profile,
    shannon_numeric,
)
from .strong_nonlinear import (
    approx_momentum_closed,
    bifurcation_threshold,
    density_critical_points,
    harmonic_weight,
)
from .tables import TABLE_IDS, verify_table
from .uncertainty import xi_renyi, xi_tsallis

USAGE_EXIT = 2
NUMERIC_EXIT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single-line diagnostic, exit code 2
        raise _UsageError(message)


def _parse_grid(text: str, kind=float) -> list:
    """Parse '0.4' | '0,0.1,0.2' | 'start:stop:step' (inclusive range)."""
    if ":" in text:
        start, stop, step = (float(t) for t in text.split(":"))
        if step <= 0 or stop < start:
            raise _UsageError(f"bad range {text!r}")
        count = int(round((stop - start) / step)) + 1
        vals = [round(start + k * step, 12) for k in range(count)]
        return [kind(v) for v in vals if v <= stop + 1e-12]
    return [kind(float(t)) for t in text.split(",")]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _emit(header: list[str], rows: list[list], out_path: str | None) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else str(v) for v in row])
    data = buf.getvalue()
    if out_path:
        Path(out_path).write_text(data)
    else:
        sys.stdout.write(data)


def _common_flags(sp, alpha=False, space=False, grid=False):
    sp.add_argument("--omega", type=float, default=1.0)
    sp.add_argument("--lambda", dest="lam", type=str, default="0")
    sp.add_argument("--n", type=str, default="0")
    if alpha:
        sp.add_argument("--alpha", type=str, default="2")
    if space:
        sp.add_argument("--space", choices=("position", "momentum"), default="position")
    if grid:
        sp.add_argument("--grid-points", type=int, default=None)
        sp.add_argument("--half-width", type=float, default=None)
    sp.add_argument("--out", type=str, default=None)
    sp.add_argument("--format", choices=("csv",), default="csv")


def _validated(args, need_alpha=False):
    if args.omega <= 0 or not math.isfinite(args.omega):
        raise _UsageError(f"--omega must be positive, got {args.omega}")
    lams = _parse_grid(args.lam)
    if any(l < 0 for l in lams):
        raise _UsageError("--lambda values must be non-negative")
    ns = _parse_grid(args.n, kind=int)
    if any(n < 0 for n in ns):
        raise _UsageError("--n values must be non-negative integers")
    alphas = None
    if need_alpha:
        alphas = _parse_grid(args.alpha)
        if any(a <= 0 for a in alphas):
            raise _UsageError("--alpha values must be positive")
    return lams, ns, alphas


def _custom_moment(args, params, n, alpha, space):
    """Moment on a user-specified grid (--grid-points / --half-width)."""
    from .quadrature import (
        GridSpec,
        integrate,
        momentum_density,
        position_half_width,
    )

    points = args.grid_points or 512
    if space == "position":
        half = args.half_width or position_half_width(params, n, min(alpha, 1.0))
        grid = GridSpec(half_width=half, points=points)
        return integrate(lambda x: np.power(density_position(params, n, x), alpha), grid)
    prof_default = None
    if args.half_width is None:
        prof_default = momentum_density(params, n).grid.half_width
    grid_p = GridSpec(half_width=args.half_width or prof_default, points=points)
    prof = momentum_density(params, n, None, grid_p)
    return float(prof.weights @ np.power(prof.gamma, alpha))


def _moment_value(args, params, n, alpha, space):
    if args.grid_points is not None or args.half_width is not None:
        return _custom_moment(args, params, n, alpha, space)
    analytic = space == "position" and alpha >= 1 and EntropyOrder.of(alpha).analytic_eligible
    if analytic:
        return entropic_moment(params, n, int(alpha))
    return entropic_moment_numeric(params, n, alpha, space)


def _scalar_command(args, header, fn):
    lams, ns, _ = _validated(args)
    rows = [[n, lam, fn(ModelParams(args.omega, lam), n)] for n in ns for lam in lams]
    _emit(header, rows, args.out)


def _entropy_command(args, kind):
    lams, ns, alphas = _validated(args, need_alpha=True)
    rows = []
    for n in ns:
        for lam in lams:
            params = ModelParams(args.omega, lam)
            for a in alphas:
                if a == 1.0:
                    raise _UsageError(f"{kind} order 1 is Shannon; use the shannon command")
                w = _moment_value(args, params, n, a, args.space)
                v = math.log(w) / (1.0 - a) if kind == "renyi" else (1.0 - w) / (a - 1.0)
                rows.append([n, lam, a, args.space, v])
    _emit(["n", "lambda", "alpha", "space", kind], rows, args.out)


def _moment_command(args):
    lams, ns, alphas = _validated(args, need_alpha=True)
    rows = []
    for n in ns:
        for lam in lams:
            params = ModelParams(args.omega, lam)
            for a in alphas:
                rows.append([n, lam, a, args.space, _moment_value(args, params, n, a, args.space)])
    _emit(["n", "lambda", "alpha", "space", "moment"], rows, args.out)


def _shannon_command(args):
    lams, ns, _ = _validated(args)
    rows = [
        [n, lam, args.space, shannon_numeric(ModelParams(args.omega, lam), n, args.space)]
        for n in ns
        for lam in lams
    ]
    _emit(["n", "lambda", "space", "shannon"], rows, args.out)


def _xi_command(args, kind):
    lams, ns, alphas = _validated(args, need_alpha=True)
    rows = []
    for n in ns:
        for lam in lams:
            params = ModelParams(args.omega, lam)
            for a in alphas:
                r = xi_renyi(params, n, a) if kind == "renyi" else xi_tsallis(params, n, a)
                rows.append([n, lam, a, r.value, r.position_method])
    _emit(["n", "lambda", "alpha", "xi", "position_method"], rows, args.out)


def _weight_command(args):
    lams, ns, _ = _validated(args)
    rows = []
    for n in ns:
        for lam in lams:
            s = harmonic_weight(ModelParams(args.omega, lam), n)
            rows.append([n, lam, s.f, s.complement])
    _emit(["n", "lambda", "f", "complement"], rows, args.out)


def _threshold_command(args):
    _, ns, _ = _validated(args)
    rows = [
        [n, args.omega, bifurcation_threshold(ModelParams(args.omega, 0.0), n)] for n in ns
    ]
    _emit(["n", "omega", "lambda_c"], rows, args.out)


def _critical_command(args):
    lams, ns, _ = _validated(args)
    rows = []
    for n in ns:
        for lam in lams:
            for c in density_critical_points(ModelParams(args.omega, lam), n):
                rows.append([n, lam, c.x, c.kind])
    _emit(["n", "lambda", "x", "kind"], rows, args.out)


def _profile_command(args):
    lams, ns, _ = _validated(args)
    if len(lams) != 1 or len(ns) != 1:
        raise _UsageError("profile needs exactly one --lambda and one --n")
    if not args.out:
        raise _UsageError("profile requires --out <path>")
    lam, n = lams[0], ns[0]
    params = ModelParams(args.omega, lam)
    points = args.grid_points or 801
    if points % 2 == 0:
        points += 1
    if args.kind == "density-position":
        from .quadrature import position_half_width

        half = args.half_width or position_half_width(params, n, 1.0, tail_log=25.0)
        xs = np.linspace(-half, half, points)
        dens = np.asarray(density_position(params, n, xs))
    elif args.kind == "density-momentum":
        prof = momentum_profile(params, n)
        half = args.half_width or 0.75 * prof.grid.half_width
        xs = np.linspace(-half, half, points)
        from .quadrature import fourier_transform

        dens = np.abs(fourier_transform(params, n, None, xs)) ** 2
    else:  # approx-momentum
        prof_half = momentum_profile(params, n).grid.half_width if args.half_width is None else None
        half = args.half_width or 0.75 * prof_half
        xs = np.linspace(-half, half, points)
        dens = np.abs(np.asarray(approx_momentum_closed(params, n, xs))) ** 2
    sym = np.max(np.abs(dens - dens[::-1]))
    if sym > 1e-10 * max(float(np.max(dens)), 1e-300):
        raise ArithmeticError(f"profile symmetry check failed: asymmetry {sym:.2e}")
    _emit(["coordinate", "density"], [[float(x), float(d)] for x, d in zip(xs, dens)], args.out)


def _table_command(args) -> int:
    if args.table not in TABLE_IDS:
        raise _UsageError(f"unknown table {args.table!r}; known: {', '.join(TABLE_IDS)}")
    report = verify_table(args.table, args.tolerance)
    out_dir = Path(args.out) if args.out else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    recomputed = [["row", "col", "reference", "computed", "tolerance", "pass", "gating"]]
    for c in report.cells:
        recomputed.append(
            [c.row, c.col, c.reference_text, _fmt(c.computed), _fmt(c.tolerance),
             "pass" if c.passed else "FAIL", "gating" if c.gating else "info"]
        )
    with open(out_dir / f"{args.table}_recomputed.csv", "w", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(recomputed)
    n_pass = sum(1 for c in report.cells if c.passed)
    print(f"table {args.table}: {n_pass}/{len(report.cells)} cells within tolerance")
    for c in report.cells:
        if not c.passed:
            tag = "FAIL" if c.gating else "info"
            print(
                f"  [{tag}] row {c.row} col {c.col}: reference {c.reference_text} "
                f"computed {_fmt(c.computed)} (tol {_fmt(c.tolerance)})"
            )
    if not report.passed:
        print(f"table {args.table}: FAILED ({len(report.failures)} gating mismatches)")
        return 1
    print(f"table {args.table}: PASS")
    return 0


def build_parser() -> _Parser:
    ap = _Parser(prog="darboux3", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("energy", "omega", "disequilibrium", "weight-f"):
        sp = sub.add_parser(name)
        _common_flags(sp)
    for name in ("renyi", "tsallis"):
        sp = sub.add_parser(name)
        _common_flags(sp, alpha=True, space=True, grid=True)
    sp = sub.add_parser("moment")
    _common_flags(sp, alpha=True, space=True, grid=True)
    sp = sub.add_parser("shannon")
    _common_flags(sp, space=True)
    for name in ("xi-renyi", "xi-tsallis"):
        sp = sub.add_parser(name)
        _common_flags(sp, alpha=True)
    sp = sub.add_parser("threshold")
    _common_flags(sp)
    sp = sub.add_parser("critical-points")
    _common_flags(sp)
    sp = sub.add_parser("profile")
    sp.add_argument("kind", choices=("density-position", "density-momentum", "approx-momentum"))
    _common_flags(sp, grid=True)
    sp = sub.add_parser("table")
    sp.add_argument("table", type=str)
    sp.add_argument("--tolerance", type=float, default=None)
    sp.add_argument("--out", type=str, default=None)
    return ap


_DISPATCH = {
    "energy": lambda a: _scalar_command(a, ["n", "lambda", "energy"], energy),
    "omega": lambda a: _scalar_command(
        a, ["n", "lambda", "omega_eff"], effective_frequency
    ),
    "disequilibrium": lambda a: _scalar_command(
        a, ["n", "lambda", "disequilibrium"], disequilibrium
    ),
    "weight-f": _weight_command,
    "renyi": lambda a: _entropy_command(a, "renyi"),
    "tsallis": lambda a: _entropy_command(a, "tsallis"),
    "moment": _moment_command,
    "shannon": _shannon_command,
    "xi-renyi": lambda a: _xi_command(a, "renyi"),
    "xi-tsallis": lambda a: _xi_command(a, "tsallis"),
    "threshold": _threshold_command,
    "critical-points": _critical_command,
    "profile": _profile_command,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    try:
        if args.command == "table":
            return _table_command(args)
        _DISPATCH[args.command](args)
        return 0
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (ArithmeticError, BudgetExceededError) as exc:
        origin = "darboux3"
        tb = exc.__traceback__
        while tb is not None:  # deepest package frame names the failing module
            mod = tb.tb_frame.f_globals.get("__name__", "")
            if mod.startswith("darboux3"):
                origin = mod
            tb = tb.tb_next
        print(f"numeric failure in {origin}: {exc}", file=sys.stderr)
        return NUMERIC_EXIT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT
    except Exception as exc:  # no traceback reaches the user
        print(f"numeric failure in darboux3 ({type(exc).__name__}): {exc}", file=sys.stderr)
        return NUMERIC_EXIT


if __name__ == "__main__":
    sys.exit(main())
