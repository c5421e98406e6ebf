"""Command-line front end: tables, amplitude sweeps and verification suites.

All numerical work lives in the library modules; the commands here parse
values, fan out over (x, k) grids, and serialize CSV/JSON.  Numbers are
written with 17 significant digits so double precision round-trips, and
output is byte-stable for identical configurations.

Exit codes: 0 success, 1 usage error, 2 numerical non-convergence or a
failed verification suite, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from . import grazing, raybeam, spectral, verification
from .errors import NonConvergenceError

__all__ = ["RunConfig", "main"]

_SPECTRAL_K_CAP = 1e4
_METHODS = ("closed", "u-integral", "z-integral", "spectral")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated grid configuration for the amplitude-sweep commands."""

    command: str
    x_values: List[float]
    k_values: List[Optional[float]]
    method: str
    tol: float
    output_path: Optional[str]
    output_format: str
    thread_budget: int

    def __post_init__(self):
        if self.tol <= 0:
            raise UsageError("tol must be positive")
        if not self.x_values:
            raise UsageError("need at least one x value")
        if any(k is not None and k <= 0 for k in self.k_values):
            raise UsageError("k values must be positive")
        if self.method not in _METHODS:
            raise UsageError("unknown method %r" % self.method)
        if self.method == "spectral" and any(
                k is not None and k > _SPECTRAL_K_CAP for k in self.k_values):
            raise UsageError(
                "spectral method refused for k > %g: the three-fold "
                "quadrature budget grows too fast; use u-integral or "
                "z-integral instead" % _SPECTRAL_K_CAP)
        if self.thread_budget < 1:
            raise UsageError("thread budget must be at least 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_values(text: str):
    """Parse '0.5,1,2' or 'start:stop:step' (inclusive stop, within 1e-9)."""
    text = text.strip()
    if not text:
        raise UsageError("empty value list")
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError("range needs start:stop:step")
            start, stop, step = (float(p) for p in parts)
            if step == 0 or (stop - start)*step < 0:
                raise ValueError("inconsistent range direction")
            n = int(math.floor((stop - start)/step + 1e-9)) + 1
            return [start + i*step for i in range(n)]
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError("cannot parse values %r: %s" % (text, exc))


def _fmt(v) -> str:
    if v is None:
        return ""
    return "%.17g" % v


def _emit(lines, out_path):
    payload = "\n".join(lines) + "\n"
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print("cannot write %s: %s" % (out_path, exc), file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _thread_budget(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("GRAZEBEAM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError("GRAZEBEAM_THREADS must be an integer")
    return 1


def _map_cells(fn, cells, threads):
    """Evaluate fn over cells, possibly in a thread pool; order preserved."""
    if threads <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, cells))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_ray_trace(args) -> int:
    ys = _parse_values(args.y)
    lines = ["y,x,t,xi,eta,tau,hamiltonian"]
    for y in ys:
        p = raybeam.central_ray(y)
        lines.append(",".join(_fmt(v) for v in
                              (p.y, p.x, p.t, p.xi, p.eta, p.tau,
                               raybeam.hamiltonian(p))))
    return _emit(lines, args.out)


def _cmd_beam_field(args) -> int:
    xs, ys, ts = (_parse_values(a) for a in (args.x, args.y, args.t))
    k = float(args.k)
    lines = ["x,y,t,k,re_v,im_v,abs_v"]
    for x in xs:
        for y in ys:
            for t in ts:
                v = raybeam.beam_field(x, y, t, k)
                lines.append(",".join(_fmt(q) for q in
                                      (x, y, t, k, v.real, v.imag, abs(v))))
    return _emit(lines, args.out)


def _cmd_beam_on_ray(args) -> int:
    xs = _parse_values(args.x)
    lines = ["x,re_v,im_v,abs_v"]
    for x in xs:
        v = raybeam.beam_on_ray(x)
        lines.append(",".join(_fmt(q) for q in (x, v.real, v.imag, abs(v))))
    return _emit(lines, args.out)


def _graze_cell(cell):
    x, k, method, tol = cell
    closed = grazing.w_on_ray_closed(x)
    status = "ok"
    quad_err = 0.0
    if method == "closed":
        w = closed
        k_out = None
    else:
        k_out = k
        try:
            if method == "u-integral":
                res = grazing.u_integral(x, k, tol)
                w, quad_err = res.w_value, res.error_estimate
            elif method == "z-integral":
                res = grazing.z_integral(x, k, tol)
                w, quad_err = res.w_value, res.error_estimate
            else:  # spectral
                y = 2.0*math.sqrt(x)
                t = y + y**3/12.0
                qr = spectral.exact_solution(x, y, t, k, tol=max(tol, 0.02))
                w, quad_err = qr.value, qr.error_estimate
                if not qr.converged:
                    status = "non-converged"
        except NonConvergenceError as exc:
            res = exc.result
            w = res.value if res is not None else float("nan")
            quad_err = res.error_estimate if res is not None else float("inf")
            status = "non-converged"
    rel = abs(w - closed)/abs(closed) if method != "closed" else 0.0
    return (x, k_out, method, w, closed, rel, quad_err, status)


def _cmd_graze_w(args) -> int:
    cfg = RunConfig(
        command="graze w",
        x_values=_parse_values(args.x),
        k_values=(_parse_values(args.k) if args.method != "closed"
                  else [None]),
        method=args.method,
        tol=args.tol,
        output_path=args.out,
        output_format=args.format,
        thread_budget=_thread_budget(args))
    cells = [(x, k, cfg.method, cfg.tol)
             for x in cfg.x_values for k in cfg.k_values]
    rows = _map_cells(_graze_cell, cells, cfg.thread_budget)
    lines = ["x,k,method,re_w,im_w,abs_w,re_closed,im_closed,rel_err,"
             "quad_err,status"]
    any_bad = False
    for (x, k, method, w, closed, rel, qerr, status) in rows:
        any_bad = any_bad or status != "ok"
        lines.append(",".join(
            [_fmt(x), _fmt(k), method, _fmt(w.real), _fmt(w.imag),
             _fmt(abs(w)), _fmt(closed.real), _fmt(closed.imag),
             _fmt(rel), _fmt(qerr), status]))
    code = _emit(lines, cfg.output_path)
    if code:
        return code
    return EXIT_NUMERICAL if any_bad else EXIT_OK


def _cmd_graze_reflected(args) -> int:
    xs = _parse_values(args.x)
    if not xs:
        raise UsageError("need at least one x value")
    lines = ["x,abs_v,abs_w,abs_v_minus_w,ratio"]
    for x in xs:
        v = raybeam.beam_on_ray(x)
        w = grazing.w_on_ray_closed(x)
        d = grazing.reflected_amplitude(x)
        lines.append(",".join(_fmt(q) for q in
                              (x, abs(v), abs(w), abs(d), abs(d)/abs(v))))
    return _emit(lines, args.out)


def _cmd_verify(args) -> int:
    try:
        report = verification.run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc))
    payload = json.dumps(report.to_dict(), indent=2)
    code = _emit([payload], args.out)
    if code:
        return code
    return EXIT_OK if report.overall else EXIT_NUMERICAL


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    p = _Parser(prog="grazebeam",
                description="Grazing-beam numerical laboratory")
    sub = p.add_subparsers(dest="group", required=True)

    ray = sub.add_parser("ray", help="ray geometry").add_subparsers(
        dest="action", required=True)
    trace = ray.add_parser("trace", help="tabulate the central ray")
    trace.add_argument("--y", required=True,
                       help="y values: comma list or start:stop:step")
    trace.add_argument("--out")
    trace.set_defaults(func=_cmd_ray_trace)

    beam = sub.add_parser("beam", help="beam evaluation").add_subparsers(
        dest="action", required=True)
    field = beam.add_parser("field", help="beam field on a grid")
    field.add_argument("--x", required=True)
    field.add_argument("--y", required=True)
    field.add_argument("--t", required=True)
    field.add_argument("--k", required=True, type=float)
    field.add_argument("--out")
    field.set_defaults(func=_cmd_beam_field)
    onray = beam.add_parser("on-ray", help="beam value along the ray")
    onray.add_argument("--x", required=True)
    onray.add_argument("--out")
    onray.set_defaults(func=_cmd_beam_on_ray)

    graze = sub.add_parser("graze", help="grazing amplitude").add_subparsers(
        dest="action", required=True)
    w = graze.add_parser("w", help="reflected amplitude by method")
    w.add_argument("--x", required=True)
    w.add_argument("--k", default="1000")
    w.add_argument("--method", default="closed",
                   choices=["closed", "u-integral", "z-integral", "spectral"])
    w.add_argument("--tol", type=float, default=1e-8)
    w.add_argument("--out")
    w.add_argument("--format", choices=["csv"], default="csv")
    w.add_argument("--threads", type=int, default=None)
    w.set_defaults(func=_cmd_graze_w)
    refl = graze.add_parser("reflected", help="emerging-amplitude curve")
    refl.add_argument("--x", required=True)
    refl.add_argument("--out")
    refl.set_defaults(func=_cmd_graze_reflected)

    ver = sub.add_parser("verify", help="verification suites")
    ver.add_argument("suite", choices=sorted(verification.SUITES))
    ver.add_argument("--out")
    ver.add_argument("--format", choices=["json"], default="json")
    ver.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
