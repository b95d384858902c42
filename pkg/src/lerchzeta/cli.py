"""Command line front end: point evaluation, verification report, sweeps.

Three subcommands:

  eval    one point, one method, value + error estimate on stdout
  verify  run the cross-method identity suites, write a json-lines report
  table   evaluate a sweep spec into a CSV or json-lines table

Complex literals use the single-token form "a+bi" (also "a-bi", plain
reals, and exponent notation like 2.5e-3-1e-2i).  Values print with 15
significant digits.  Exit codes: 0 success, 1 verification failures,
2 domain/usage errors, 3 accuracy not attained.

The environment variable LERCHZETA_TOL overrides the default tolerance
for `eval` and `table` when no --tol flag is given; `verify` tolerances
are pinned per suite so reports stay comparable.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

from .errors import DomainError, LerchZetaError
from .fracrep import (lerch_theorem1, lerch_theorem1_real_t, lerch_theorem2,
                      riemann_halfpoint, riemann_limit)
from .lerch_ref import EvaluationPoint, hurwitz, lerch_series
from .quadrature import QuadratureConfig
from .suites import SUITE_ORDER, TOLERANCES, run_suite, suite_names

TOL_ENV = "LERCHZETA_TOL"

METHODS = ("series", "theorem1", "theorem1-real-t", "theorem2",
           "riemann-halfpoint", "riemann-limit", "hurwitz")

#: columns of the table subcommand, in this exact order
TABLE_COLUMNS = ("t_re", "t_im", "x_re", "x_im", "s_re", "s_im", "method",
                 "val_re", "val_im", "err", "ms", "status")


def parse_complex(text: str) -> complex:
    """Parse "a+bi" single-token complex literals (or plain reals)."""
    cleaned = text.strip()
    if cleaned.endswith(("i", "I")):
        cleaned = cleaned[:-1] + "j"
    try:
        return complex(cleaned)
    except ValueError:
        raise DomainError(
            f"cannot parse complex literal {text!r}; expected forms like "
            "2, -0.5, 0.2+0.6i, 2.5e-3-1e-2i")


def _fmt_part(v: float, force_sign: bool) -> str:
    """One real component, 15 significant digits, fixed style when sane."""
    if not math.isfinite(v):
        return f"{v:+}" if force_sign else str(v)
    a = abs(v)
    if a == 0.0:
        exp10 = 0
    else:
        exp10 = math.floor(math.log10(a))
        if 10.0 ** exp10 > a:
            exp10 -= 1
        elif 10.0 ** (exp10 + 1) <= a:
            exp10 += 1
    if -5 < exp10 < 15:
        dec = 14 - exp10
        return f"{v:+.{dec}f}" if force_sign else f"{v:.{dec}f}"
    return f"{v:+.14e}" if force_sign else f"{v:.14e}"


def format_value(z: complex) -> str:
    return _fmt_part(z.real, False) + _fmt_part(z.imag, True) + "i"


def _default_tol(flag_value):
    if flag_value is not None:
        return flag_value
    env = os.environ.get(TOL_ENV)
    if env is None:
        return None
    try:
        tol = float(env)
    except ValueError:
        raise DomainError(f"{TOL_ENV}={env!r} is not a number")
    if not tol > 0.0:
        raise DomainError(f"{TOL_ENV} must be positive; got {env}")
    return tol


def _quad_cfg(tol):
    if tol is None:
        return None
    return QuadratureConfig(rel_tol=tol, abs_tol=max(1e-3 * tol, 1e-15))


def dispatch(method: str, t: complex | None, x: complex | None,
             s: complex | None, tol: float | None) -> tuple[complex, float]:
    """Evaluate L(t, x, s) (or zeta(s)) by the named route."""
    if s is None:
        raise DomainError("--s is required")
    if method == "series":
        _need(t, x, method)
        res = lerch_series(EvaluationPoint(t, x, s), tol=tol or 1e-12)
        return res.value, res.error
    if method == "theorem1":
        _need(t, x, method)
        return lerch_theorem1(EvaluationPoint(t, x, s), _quad_cfg(tol))
    if method == "theorem1-real-t":
        _need(t, x, method)
        r = lerch_theorem1_real_t(t, x, s, cfg=_quad_cfg(tol))
        return r.value, r.error
    if method == "theorem2":
        _need(t, x, method)
        # the reflection form natively produces L(t, x, 1-s'), so feed it
        # s' = 1-s and this route reports the same L(t, x, s) as the rest
        return lerch_theorem2(t, x, 1.0 - s)
    if method == "riemann-halfpoint":
        return riemann_halfpoint(s, cfg=_quad_cfg(tol))
    if method == "riemann-limit":
        r = riemann_limit(s, cfg=_quad_cfg(tol))
        return r.value, r.error
    if method == "hurwitz":
        if x is None:
            raise DomainError("method hurwitz needs --x and --s")
        if t not in (None, 0, 0j):
            raise DomainError("hurwitz fixes t = 0; drop --t or pass 0")
        res = hurwitz(x, s, tol=tol or 1e-12)
        return res.value, res.error
    raise DomainError(f"unknown method {method!r}; choose from {METHODS}")


def _need(t, x, method):
    if t is None or x is None:
        raise DomainError(f"method {method} needs --t, --x and --s")


def cmd_eval(args) -> int:
    t = parse_complex(args.t) if args.t is not None else None
    x = parse_complex(args.x) if args.x is not None else None
    s = parse_complex(args.s) if args.s is not None else None
    value, err = dispatch(args.method, t, x, s, _default_tol(args.tol))
    print(format_value(value))
    print(f"error estimate {err:.3e}")
    return 0


def _record_json(rec) -> dict:
    p = rec.point
    return {
        "suite": rec.suite,
        "label": rec.label,
        "t": [complex(p.t).real, complex(p.t).imag],
        "x": [complex(p.x).real, complex(p.x).imag],
        "s": [complex(p.s).real, complex(p.s).imag],
        "method_a": rec.method_a,
        "method_b": rec.method_b,
        "value_a": [rec.value_a.real, rec.value_a.imag],
        "value_b": [rec.value_b.real, rec.value_b.imag],
        "abs_residual": rec.abs_residual,
        "rel_residual": rec.rel_residual,
        "tolerance": rec.tolerance,
        "status": rec.status,
    }


def cmd_verify(args) -> int:
    chosen = SUITE_ORDER if args.suite == "all" else (args.suite,)
    header = {
        "format": "lerchzeta-verify-v1",
        "suites": list(chosen),
        "grid_seed": args.grid_seed,
        "tolerances": {name: TOLERANCES[name] for name in chosen},
    }
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    # records stream to disk as they finish, so a crash mid-suite still
    # leaves a usable partial report
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header) + "\n")
        fh.flush()
        for rec in run_suite(args.suite, args.grid_seed):
            counts[rec.status.split(":")[0]] += 1
            fh.write(json.dumps(_record_json(rec)) + "\n")
            fh.flush()
    print(f"{counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['skipped']} skipped -> {args.output}")
    return 1 if counts["fail"] else 0


def _axis_values(name, spec) -> list[complex]:
    if not isinstance(spec, dict):
        raise DomainError(f"sweep axis {name!r} must be an object")
    if "start" in spec or "stop" in spec or "count" in spec:
        for key in ("component", "start", "stop", "count"):
            if key not in spec:
                raise DomainError(f"sweep axis {name!r} needs {key!r}")
        comp = spec["component"]
        if comp not in ("re", "im"):
            raise DomainError(
                f"axis {name!r} component must be 're' or 'im'; got {comp!r}")
        count = int(spec["count"])
        if count < 1:
            raise DomainError(f"axis {name!r} count must be >= 1")
        start, stop = float(spec["start"]), float(spec["stop"])
        other = float(spec.get("fixed", 0.0))
        if count == 1:
            ticks = [start]
        else:
            step = (stop - start) / (count - 1)
            ticks = [start + step * i for i in range(count)]
        if comp == "re":
            return [complex(v, other) for v in ticks]
        return [complex(other, v) for v in ticks]
    if "fixed" in spec:
        raw = spec["fixed"]
        return [parse_complex(raw) if isinstance(raw, str) else complex(raw)]
    raise DomainError(
        f"sweep axis {name!r} needs either 'fixed' or start/stop/count")


def _load_sweep(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read sweep spec {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise DomainError(f"sweep spec {path} is not valid JSON: {exc}")
    if not isinstance(spec, dict):
        raise DomainError("sweep spec must be a JSON object")
    methods = spec.get("methods")
    if (not isinstance(methods, list) or not methods
            or any(m not in METHODS for m in methods)):
        raise DomainError(f"sweep spec 'methods' must be a non-empty list "
                          f"drawn from {METHODS}")
    axes = [_axis_values(name, spec.get(name, {"fixed": 0}))
            for name in ("t", "x", "s")]
    tol = spec.get("tol")
    if tol is not None and not float(tol) > 0.0:
        raise DomainError("sweep spec 'tol' must be positive")
    return axes, methods, (float(tol) if tol is not None else None)


def _table_rows(axes, methods, tol):
    ts, xs, ss = axes
    for t in ts:
        for x in xs:
            for s in ss:
                for method in methods:
                    began = time.perf_counter()
                    value = err = None
                    try:
                        value, err = dispatch(method, t, x, s, tol)
                        status = "ok"
                    except DomainError as exc:
                        status = f"skipped: {exc}"
                    except LerchZetaError as exc:
                        value = getattr(exc, "value", None)
                        err = getattr(exc, "estimate", None)
                        status = f"no-convergence: {exc}"
                    ms = (time.perf_counter() - began) * 1e3
                    yield {
                        "t_re": t.real, "t_im": t.imag,
                        "x_re": x.real, "x_im": x.imag,
                        "s_re": s.real, "s_im": s.imag,
                        "method": method,
                        "val_re": None if value is None else complex(value).real,
                        "val_im": None if value is None else complex(value).imag,
                        "err": err,
                        "ms": round(ms, 3),
                        "status": status,
                    }


def cmd_table(args) -> int:
    axes, methods, spec_tol = _load_sweep(args.spec)
    tol = _default_tol(args.tol) if args.tol is not None else (
        spec_tol if spec_tol is not None else _default_tol(None))
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        if args.format == "csv":
            writer = csv.writer(fh)
            writer.writerow(TABLE_COLUMNS)
            for row in _table_rows(axes, methods, tol):
                writer.writerow(["" if row[c] is None else row[c]
                                 for c in TABLE_COLUMNS])
        else:
            for row in _table_rows(axes, methods, tol):
                fh.write(json.dumps(row) + "\n")
    print(f"wrote {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerchzeta",
        description="Lerch zeta evaluation and identity verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one point")
    p_eval.add_argument("--method", required=True, choices=METHODS)
    p_eval.add_argument("--t", help="complex literal, e.g. 0.2+0.6i")
    p_eval.add_argument("--x", help="complex literal")
    p_eval.add_argument("--s", required=True, help="complex literal")
    p_eval.add_argument("--tol", type=float,
                        help=f"target tolerance (default from {TOL_ENV})")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all", choices=suite_names())
    p_verify.add_argument("--grid-seed", type=int, default=0)
    p_verify.add_argument("--output", default="lerchzeta-verify.jsonl")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="evaluate a sweep spec")
    p_table.add_argument("spec", help="sweep spec JSON file")
    p_table.add_argument("--output", required=True)
    p_table.add_argument("--format", default="csv",
                         choices=("csv", "json-lines"))
    p_table.add_argument("--tol", type=float)
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LerchZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
