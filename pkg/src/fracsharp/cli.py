"""Command-line surface: constants, checks, probes, suite, registry listing.

Subcommands
-----------
constant <id> k=v ...    evaluate a registry constant
check <id> k=v ...       run one verification check (or ``discrete_nsw``)
probe <id> family=... schedule=1,2,4   run a sharpness probe
suite [ids...] [--list]  run (or list) the whole check registry
list                     list constants and checks

Exit codes: 0 all requested checks pass, 1 any check failed,
2 usage or parameter errors.

All floating-point values are emitted with 17 significant digits
(round-trip exact for doubles); identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional

from .constants import CONSTANTS, constant_ids, eval_constant
from .errors import FracsharpError
from .verify import (CheckReport, check_ids, check_spec, discrete_nsw_test,
                     run_check, sharpness_probe)


# --------------------------------------------------------------------------
# deterministic serialization (17 significant digits)
# --------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    if x != x:
        return "NaN"
    if x == float("inf"):
        return "Infinity"
    if x == float("-inf"):
        return "-Infinity"
    return format(x, ".17g")


def to_json(obj) -> str:
    """JSON with floats at 17 significant digits and sorted keys."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return '"' + out + '"'
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        return "{" + ",".join(to_json(str(k)) + ":" + to_json(v)
                              for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    try:  # numpy scalars
        import numpy as np
        if isinstance(obj, np.floating):
            return _fmt_float(float(obj))
        if isinstance(obj, np.integer):
            return str(int(obj))
    except ImportError:  # pragma: no cover
        pass
    raise TypeError(f"not serializable: {type(obj)!r}")


_REPORT_COLUMNS = ("id", "params", "lhs", "rhs", "margin", "tol", "pass",
                   "evals", "seed", "notes")


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, (dict, list, tuple)):
        s = to_json(v)
    else:
        s = "" if v is None else str(v)
    if any(ch in s for ch in ',"\n'):
        s = '"' + s.replace('"', '""') + '"'
    return s


def reports_csv(reports: List[Dict[str, object]]) -> str:
    lines = [",".join(_REPORT_COLUMNS)]
    for rec in reports:
        lines.append(",".join(_csv_cell(rec.get(col)) for col in _REPORT_COLUMNS))
    return "\n".join(lines) + "\n"


def _report_pretty(rec: Dict[str, object]) -> str:
    status = "PASS" if rec["pass"] else "FAIL"
    return (f"{rec['id']:<24s} {status}  margin={_fmt_float(rec['margin'])}"
            f"  lhs={_fmt_float(rec['lhs'])}  rhs={_fmt_float(rec['rhs'])}"
            f"  tol={_fmt_float(rec['tol'])}")


# --------------------------------------------------------------------------
# key=value parsing
# --------------------------------------------------------------------------


def _parse_value(text: str):
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    if "," in text:
        return [_parse_value(t) for t in text.split(",") if t]
    try:
        i = int(text)
        return i
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def _parse_kv(pairs: List[str]) -> Dict[str, object]:
    out: Dict[str, object] = {}
    for item in pairs:
        if "=" not in item:
            raise _UsageError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k] = _parse_value(v)
    return out


def _build_check_params(kv: Dict[str, object]) -> Dict[str, object]:
    """Assemble run_check params; profile=<kind> plus profile_<p>=<v> keys."""
    params: Dict[str, object] = {}
    profile: Dict[str, object] = {}
    for k, v in kv.items():
        if k == "profile":
            profile["kind"] = v
        elif k.startswith("profile_"):
            profile[k[len("profile_"):]] = v
        else:
            params[k] = v
    if profile:
        params["profile"] = profile
    return params


class _UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_constant(args) -> int:
    kv = _parse_kv(args.params)
    value = eval_constant(args.id, **kv).value
    rec = {"id": args.id, "params": kv, "value": float(value)}
    if args.output == "json":
        _emit(to_json(rec) + "\n", args.out)
    elif args.output == "csv":
        _emit("id,params,value\n"
              f"{args.id},{_csv_cell(kv)},{_fmt_float(float(value))}\n",
              args.out)
    else:
        _emit(f"{args.id}({', '.join(f'{k}={v}' for k, v in kv.items())})"
              f" = {_fmt_float(float(value))}\n", args.out)
    return 0


def _run_one(args) -> CheckReport:
    kv = _parse_kv(args.params)
    if args.id == "discrete_nsw":
        m = kv.pop("m", None)
        p = float(kv.pop("p", 0.0))
        trials = int(kv.pop("trials", 1000))
        if kv:
            raise _UsageError(f"unknown discrete_nsw keys: {sorted(kv)}")
        return discrete_nsw_test(m, p, trials,
                                 args.seed if args.seed is not None else 0)
    return run_check(args.id, _build_check_params(kv), tol=args.tol,
                     seed=args.seed)


def _emit_reports(reports: List[CheckReport], args) -> int:
    recs = [r.to_dict() for r in reports]
    if args.output == "json":
        payload = to_json(recs[0] if len(recs) == 1 else recs) + "\n"
    elif args.output == "csv":
        payload = reports_csv(recs)
    else:
        lines = [_report_pretty(rec) for rec in recs]
        n_fail = sum(1 for rec in recs if not rec["pass"])
        if len(recs) > 1:
            lines.append(f"{len(recs) - n_fail}/{len(recs)} checks passed")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0 if all(rec["pass"] for rec in recs) else 1


def _cmd_check(args) -> int:
    return _emit_reports([_run_one(args)], args)


def _cmd_probe(args) -> int:
    kv = _parse_kv(args.params)
    family = kv.pop("family", None)
    schedule = kv.pop("schedule", None)
    if family is None or schedule is None:
        raise _UsageError("probe requires family=<name> and schedule=v1,v2,...")
    if not isinstance(schedule, list):
        schedule = [schedule]
    if kv:
        raise _UsageError(f"unknown probe keys: {sorted(kv)}")
    ratios = sharpness_probe(args.id, str(family),
                             [float(s) for s in schedule])
    ok = all(r["ratio"] <= 1.0 + 1e-6 for r in ratios)
    rec = {"id": args.id, "family": family, "ratios": ratios, "pass": ok}
    if args.output == "json":
        _emit(to_json(rec) + "\n", args.out)
    elif args.output == "csv":
        lines = ["config,ratio"]
        lines += [f"{_csv_cell(r['config'])},{_fmt_float(r['ratio'])}"
                  for r in ratios]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"{args.id} probe [{family}]"]
        lines += [f"  {to_json(r['config'])}  ratio={_fmt_float(r['ratio'])}"
                  for r in ratios]
        lines.append("PASS" if ok else "FAIL")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _cmd_suite(args) -> int:
    if args.list:
        lines = []
        for cid in check_ids():
            spec = check_spec(cid)
            lines.append(f"{cid:<24s} [{spec.kind}] tol={_fmt_float(spec.tol)}"
                         f"  {spec.description}")
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    ids = args.ids or check_ids()
    reports = [run_check(cid, seed=args.seed) for cid in ids]
    return _emit_reports(reports, args)


def _cmd_list(args) -> int:
    lines = ["constants:"]
    for cid in constant_ids():
        spec = CONSTANTS[cid]
        lines.append(f"  {cid:<22s} ({', '.join(spec.param_names)})"
                     f"  {spec.formula_note}")
    lines.append("checks:")
    for cid in check_ids():
        lines.append(f"  {cid:<22s} [{check_spec(cid).kind}]")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


# --------------------------------------------------------------------------
# argument parser / dispatch
# --------------------------------------------------------------------------


def _add_common(sub) -> None:
    sub.add_argument("--output", choices=("json", "csv", "pretty"),
                     default="pretty")
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--budget", type=int, default=None,
                     help="evaluation budget hint for expensive quadratures")
    sub.add_argument("--out", default=None, help="write the report to a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fracsharp",
        description="numerical verification of sharp weighted inequalities "
                    "for the fractional Laplacian")
    subs = ap.add_subparsers(dest="subcommand", required=True)

    p_const = subs.add_parser("constant", help="evaluate a sharp constant")
    p_const.add_argument("id", choices=constant_ids())
    p_const.add_argument("params", nargs="*", metavar="key=value")
    _add_common(p_const)
    p_const.set_defaults(fn=_cmd_constant)

    p_check = subs.add_parser("check", help="run one verification check")
    p_check.add_argument("id")
    p_check.add_argument("params", nargs="*", metavar="key=value")
    _add_common(p_check)
    p_check.set_defaults(fn=_cmd_check)

    p_probe = subs.add_parser("probe", help="run a sharpness probe")
    p_probe.add_argument("id")
    p_probe.add_argument("params", nargs="*", metavar="key=value")
    _add_common(p_probe)
    p_probe.set_defaults(fn=_cmd_probe)

    p_suite = subs.add_parser("suite", help="run the full check registry")
    p_suite.add_argument("ids", nargs="*")
    p_suite.add_argument("--list", action="store_true",
                         help="list registry rows instead of running")
    _add_common(p_suite)
    p_suite.set_defaults(fn=_cmd_suite)

    p_list = subs.add_parser("list", help="list constants and checks")
    _add_common(p_list)
    p_list.set_defaults(fn=_cmd_list)
    return ap


def dispatch(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (FracsharpError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
