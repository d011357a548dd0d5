"""Command-line front end.

Subcommands: ``coeffs`` (weight dumps), ``phaselag`` (PL curves),
``stability`` (region scans), ``solve`` (one scattering run), ``bench``
(energy x method x step sweeps).  CSV is the canonical figure-data format;
JSON is available where a structured dump makes sense.  Output files are
written atomically (temp file + rename) and start with a version header
line, then a column-name row.

Exit codes: 0 success, 2 usage/validation error, 3 computational error.
"""

from __future__ import annotations

import argparse
import io
import math
import os
import sys
import tempfile

from . import __version__
from .coefficients import ALL_METHODS, MethodId, coefficients
from .errors import OscintError
from .phaselag import phase_lag
from .schrodinger import (
    OMEGA_CONVENTIONS,
    RadialScatteringProblem,
    benchmark_sweep,
    solve_phase_shift,
)
from .stability import scan_region

#: default step ladder: h_k = 15/(250 * 2^k)
LADDER_BASE_STEPS = 250
DEFAULT_ENERGIES = (989.701916, 341.495874, 163.215341)


def _parse_methods(spec: str):
    if spec.strip().lower() == "all":
        return list(ALL_METHODS)
    return [MethodId.from_name(tok) for tok in spec.split(",") if tok.strip()]


def _parse_floats(spec: str):
    return [float(tok) for tok in spec.split(",") if tok.strip()]


def _write_atomic(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".oscint-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _header(columns) -> str:
    return f"# oscint {__version__}\n" + ",".join(columns) + "\n"


def cmd_coeffs(args) -> int:
    methods = _parse_methods(args.method)
    vs = _parse_floats(args.v) if args.v else [0.0]
    for m in methods:
        if m.is_fitted and (not args.v or any(v <= 0 for v in vs)):
            print(f"error: {m.label} needs --v with positive value(s)", file=sys.stderr)
            return 2
    sets = []
    for m in methods:
        for v in vs if m.is_fitted else [0.0]:
            sets.append(coefficients(m, v))
    if args.format == "json":
        body = "[\n" + ",\n".join(cs.to_json() for cs in sets) + "\n]\n"
        _write_atomic(args.out, f'{{"tool": "oscint {__version__}", "sets": {body}}}')
        return 0
    buf = io.StringIO()
    buf.write(_header(["method", "v", "index", "a", "b", "precision_bits_used"]))
    for cs in sets:
        for j in range(15):
            buf.write(f"{cs.method.label},{cs.v!r},{j},{cs.a[j]},{float(cs.b[j])!r},"
                      f"{cs.precision_bits_used}\n")
    _write_atomic(args.out, buf.getvalue())
    return 0


def cmd_phaselag(args) -> int:
    method = MethodId.from_name(args.method)
    if method.is_fitted and args.v is None:
        print("error: fitted methods need --v", file=sys.stderr)
        return 2
    cs = coefficients(method, args.v or 0.0)
    buf = io.StringIO()
    buf.write(_header(["s", "phase_lag"]))
    for k in range(args.n):
        s = args.s_min + (args.s_max - args.s_min) * k / (args.n - 1)
        buf.write(f"{s!r},{phase_lag(cs, s)!r}\n")
    _write_atomic(args.out, buf.getvalue())
    return 0


def cmd_stability(args) -> int:
    method = MethodId.from_name(args.method)
    try:
        n_s, n_v = (int(tok) for tok in args.grid.lower().split("x"))
    except ValueError:
        print("error: --grid must look like 50x50", file=sys.stderr)
        return 2
    grid = scan_region(method, args.smin, args.smax, args.vmin, args.vmax,
                       n_s, n_v, workers=args.workers)
    buf = io.StringIO()
    buf.write(_header(["s", "v", "stable"]))
    for s, v, flag in grid.rows():
        buf.write(f"{s!r},{v!r},{int(flag)}\n")
    _write_atomic(args.out, buf.getvalue())
    return 0


_SOLVE_COLUMNS = ["E", "method", "h", "steps", "rhs_evals", "tan_delta",
                  "delta", "digits", "omega_convention"]


def cmd_solve(args) -> int:
    method = MethodId.from_name(args.method)
    prob = RadialScatteringProblem(E=args.E, h=args.h, l=args.l)
    res = solve_phase_shift(prob, method, args.omega_convention)
    buf = io.StringIO()
    buf.write(_header(_SOLVE_COLUMNS))
    buf.write(f"{res.E!r},{res.method.label},{res.h!r},{res.steps},{res.rhs_evals},"
              f"{res.tan_delta!r},{res.delta!r},{res.digits!r},{res.omega_convention}\n")
    _write_atomic(args.out, buf.getvalue())
    return 0


def cmd_bench(args) -> int:
    energies = _parse_floats(args.energies)
    methods = _parse_methods(args.methods)
    h_values = [15.0 / (LADDER_BASE_STEPS * 2 ** k) for k in range(args.h_ladder)]
    rows = benchmark_sweep(energies, methods, h_values,
                           omega_convention=args.omega_convention,
                           workers=args.workers)
    buf = io.StringIO()
    buf.write(_header(_SOLVE_COLUMNS + ["note"]))
    for row in rows:
        E, name, h, steps, evals, td, delta, digits, conv, note = row
        buf.write(f"{E!r},{name},{h!r},{steps},{evals},{td!r},{delta!r},"
                  f"{digits!r},{conv},{note}\n")
    _write_atomic(args.out, buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oscint", description=__doc__)
    p.add_argument("--version", action="version", version=f"oscint {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", help="dump weight sets")
    c.add_argument("--method", required=True, help="classical, pfd0..pfd6, comma list, or 'all'")
    c.add_argument("--v", help="fitted frequency value(s), comma separated")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--out")
    c.set_defaults(func=cmd_coeffs)

    pl = sub.add_parser("phaselag", help="emit (s, PL) curve for one method")
    pl.add_argument("--method", required=True)
    pl.add_argument("--v", type=float)
    pl.add_argument("--s-min", type=float, default=0.01)
    pl.add_argument("--s-max", type=float, default=2.0)
    pl.add_argument("--n", type=int, default=200)
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_phaselag)

    stab = sub.add_parser("stability", help="scan an (s, v) rectangle")
    stab.add_argument("--method", required=True)
    stab.add_argument("--grid", default="400x400", help="n_s x n_v, e.g. 50x50")
    stab.add_argument("--smin", type=float, default=0.0)
    stab.add_argument("--smax", type=float, default=10.0)
    stab.add_argument("--vmin", type=float, default=0.0)
    stab.add_argument("--vmax", type=float, default=10.0)
    stab.add_argument("--workers", type=int, default=None)
    stab.add_argument("--out")
    stab.set_defaults(func=cmd_stability)

    sv = sub.add_parser("solve", help="one scattering phase-shift run")
    sv.add_argument("--method", required=True)
    sv.add_argument("--E", type=float, required=True)
    sv.add_argument("--h", type=float, required=True)
    sv.add_argument("--l", type=int, default=0)
    sv.add_argument("--omega-convention", choices=OMEGA_CONVENTIONS, default="paper")
    sv.add_argument("--out")
    sv.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="energy x method x step sweep")
    b.add_argument("--energies", default=",".join(str(e) for e in DEFAULT_ENERGIES))
    b.add_argument("--methods", default="all")
    b.add_argument("--h-ladder", type=int, default=8,
                   help="number of rungs h_k = 15/(250*2^k)")
    b.add_argument("--omega-convention", choices=OMEGA_CONVENTIONS, default="paper")
    b.add_argument("--workers", type=int, default=None)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OscintError as exc:
        print(f"computational error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
