"""Command-line front end.

Subcommands: eval, laurent, special, verify.  Output is JSON on stdout
(schema_version "1"); verify can also write CSV.  Exit codes: 0 success,
1 verification failure, 2 pole hit, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
import time

from .barnes import BarnesParams, log_gamma2, polygamma2, zeta2, zeta2_direct, \
    zeta2_integral_rep
from .config import EvalConfig
from .errors import PoleError
from .hurwitz import stieltjes_constants
from .laurent import gammak_at_2_limit, laurent_at_1, laurent_at_2, \
    residue_at_1, residue_at_2
from .numerics import QuadratureSpec
from .verify import run_suites

SCHEMA_VERSION = "1"
EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_POLE = 2
EXIT_USAGE = 64

_COMPLEX_RE = re.compile(
    r"^\s*([+-]?\d*\.?\d+(?:[eE][+-]?\d+)?)"
    r"(?:\s*([+-])\s*(\d*\.?\d+(?:[eE][+-]?\d+)?)i)?\s*$")


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi' or 'a-bi'."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}")
    re_part = float(m.group(1))
    im_part = 0.0
    if m.group(2):
        im_part = float(m.group(3))
        if m.group(2) == "-":
            im_part = -im_part
    return complex(re_part, im_part)


def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.17g}{sign}{abs(z.imag):.17g}i"


def _num(x: float) -> float:
    # 17 significant digits survive the JSON round trip exactly
    return float(f"{x:.17g}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_config_args(sp):
    sp.add_argument("--M", type=int, default=None,
                    help="outer Euler-Maclaurin truncation (also direct-sum M)")
    sp.add_argument("--em-order", type=int, default=None)
    sp.add_argument("--quad-tol", type=float, default=None)
    sp.add_argument("--contour-radius", type=float, default=None)
    sp.add_argument("--contour-nodes", type=int, default=None)
    sp.add_argument("--fd-step", type=float, default=None)


def _config_from(args) -> EvalConfig:
    kw = {}
    if args.M is not None:
        kw["direct_M"] = args.M
    if args.em_order is not None:
        kw["em_order"] = args.em_order
    if args.quad_tol is not None:
        kw["quad"] = QuadratureSpec(tail_tol=args.quad_tol)
    if args.contour_radius is not None:
        kw["contour_radius"] = args.contour_radius
    if args.contour_nodes is not None:
        kw["contour_nodes"] = args.contour_nodes
    if args.fd_step is not None:
        kw["fd_step"] = args.fd_step
    return EvalConfig(**kw)


def _params_from(args) -> BarnesParams:
    return BarnesParams(args.alpha, args.v, args.w)


def _emit(record: dict):
    json.dump(record, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _record(args, cfg, started, **fields) -> dict:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "command": vars_echo(args),
        "config": cfg.snapshot(),
        "wall_time_ms": _num((time.perf_counter() - started) * 1000.0),
    }
    rec.update(fields)
    return rec


def vars_echo(args) -> dict:
    echo = {}
    for key, val in sorted(vars(args).items()):
        if key in ("func",) or val is None:
            continue
        echo[key] = format_complex(val) if isinstance(val, complex) else val
    return echo


def _cmd_eval(args) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    p = _params_from(args)
    s = args.s
    if s in (1.0 + 0j, 2.0 + 0j) and not args.laurent_fallback:
        sys.stderr.write(f"zeta2 has a pole at s = {int(s.real)}\n")
        return EXIT_POLE
    method = args.method
    if method == "auto":
        method = "direct" if s.real > 2.5 else "em"
    try:
        if s in (1.0 + 0j, 2.0 + 0j):
            # --laurent-fallback: report the regular part at the pole
            exp = (laurent_at_1 if s.real == 1.0 else laurent_at_2)(p, 0, cfg)
            value, err, method = complex(exp.gammas[0]), exp.errs[0], "laurent"
        elif method == "direct":
            value, err = zeta2_direct(s, p, cfg.direct_M * 32, with_error=True)
        elif method == "integral":
            value, err = zeta2_integral_rep(s, p, cfg), cfg.quad.tail_tol * 8
        else:
            value, err = zeta2(s, p, cfg), None
    except PoleError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_POLE
    rec = _record(args, cfg, started,
                  value={"re": _num(value.real), "im": _num(value.imag)},
                  est_error=(None if err is None else _num(err)),
                  method=method)
    _emit(rec)
    return EXIT_OK


def _cmd_laurent(args) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    p = _params_from(args)
    exact = residue_at_2(p) if args.pole == 2 else residue_at_1(p)
    if args.method == "limit":
        if args.pole != 2:
            sys.stderr.write("limit-formula route exists only for pole 2\n")
            return EXIT_USAGE
        m_list = None
        if args.M is not None:
            m_list = [max(16, args.M >> k) for k in range(6, -1, -1)]
        values, errs = [], []
        for k in range(args.kmax + 1):
            val, err = gammak_at_2_limit(p, k, m_list)
            values.append(val)
            errs.append(err)
        rec = _record(args, cfg, started,
                      pole=args.pole, method="limit_formula",
                      exact_residue=_num(exact),
                      gammas=[_num(v) for v in values],
                      est_errors=[_num(e) for e in errs])
    else:
        fn = laurent_at_2 if args.pole == 2 else laurent_at_1
        exp = fn(p, args.kmax, cfg)
        rec = _record(args, cfg, started,
                      pole=args.pole, method=exp.method,
                      gamma_minus1=_num(exp.gamma_minus1),
                      exact_residue=_num(exact),
                      err_minus1=_num(exp.err_minus1),
                      gammas=[_num(g) for g in exp.gammas],
                      est_errors=[_num(e) for e in exp.errs])
    _emit(rec)
    return EXIT_OK


def _cmd_special(args) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    if args.what == "stieltjes":
        if args.a is None:
            sys.stderr.write("--a is required for stieltjes\n")
            return EXIT_USAGE
        table = stieltjes_constants(args.a, args.kmax, cfg)
        rec = _record(args, cfg, started, what=args.what, a=table.a,
                      gammas=[_num(g) for g in table.gammas],
                      est_errors=[_num(e) for e in table.errs])
    else:
        p = _params_from(args)
        if args.what == "gamma2":
            value = log_gamma2(p, cfg)
            rec = _record(args, cfg, started, what=args.what,
                          log_gamma2=_num(value),
                          gamma2=_num(math.exp(value)))
        else:  # polygamma
            value = polygamma2(args.k, p, cfg)
            rec = _record(args, cfg, started, what=args.what, k=args.k,
                          value=_num(value))
    _emit(rec)
    return EXIT_OK


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    seed = None
    env_seed = os.environ.get("BARNES_ZETA_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            sys.stderr.write("BARNES_ZETA_SEED must be a decimal integer\n")
            return EXIT_USAGE
    reports = run_suites((args.suite,), tol=args.tol, cfg=cfg, seed=seed)
    all_pass = all(r.passed for r in reports)
    rec = {
        "schema_version": SCHEMA_VERSION,
        "command": vars_echo(args),
        "config": cfg.snapshot(),
        "suites": [r.to_dict() for r in reports],
        "pass": all_pass,
        "wall_time_ms": _num((time.perf_counter() - started) * 1000.0),
    }
    _emit(rec)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            header_done = False
            for r in reports:
                for i, row in enumerate(r.csv_rows()):
                    if i == 0:
                        if header_done:
                            continue
                        header_done = True
                    fh.write(row + "\n")
    return EXIT_OK if all_pass else EXIT_VERIFY_FAIL


def build_parser() -> _Parser:
    parser = _Parser(prog="barneszeta",
                     description="Barnes double zeta-function toolkit")
    sub = parser.add_subparsers(dest="cmd", required=True)

    pe = sub.add_parser("eval", help="evaluate zeta2(s, alpha; v, w)")
    pe.add_argument("--s", type=parse_complex, required=True)
    pe.add_argument("--alpha", type=float, required=True)
    pe.add_argument("--v", type=float, required=True)
    pe.add_argument("--w", type=float, required=True)
    pe.add_argument("--method", choices=["auto", "direct", "em", "integral"],
                    default="auto")
    pe.add_argument("--laurent-fallback", action="store_true")
    _add_config_args(pe)
    pe.set_defaults(func=_cmd_eval)

    pl = sub.add_parser("laurent", help="Laurent coefficients at a pole")
    pl.add_argument("--pole", type=int, choices=[1, 2], required=True)
    pl.add_argument("--alpha", type=float, required=True)
    pl.add_argument("--v", type=float, required=True)
    pl.add_argument("--w", type=float, required=True)
    pl.add_argument("--kmax", type=int, default=2)
    pl.add_argument("--method", choices=["contour", "limit"], default="contour")
    _add_config_args(pl)
    pl.set_defaults(func=_cmd_laurent)

    ps = sub.add_parser("special", help="Stieltjes constants / Gamma2 / psi2")
    ps.add_argument("--what", choices=["stieltjes", "gamma2", "polygamma"],
                    required=True)
    ps.add_argument("--a", type=float, default=None)
    ps.add_argument("--kmax", type=int, default=3)
    ps.add_argument("--k", type=int, default=0)
    ps.add_argument("--alpha", type=float, default=1.0)
    ps.add_argument("--v", type=float, default=1.0)
    ps.add_argument("--w", type=float, default=1.0)
    _add_config_args(ps)
    ps.set_defaults(func=_cmd_special)

    pv = sub.add_parser("verify", help="run identity-verification suites")
    pv.add_argument("--suite",
                    choices=["theorem1", "theorem2", "bounds", "reduction", "all"],
                    default="all")
    pv.add_argument("--tol", type=float, default=None)
    pv.add_argument("--csv", type=str, default=None)
    _add_config_args(pv)
    pv.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
