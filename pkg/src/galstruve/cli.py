"""Command-line interface: point evaluation, identity verification, sweeps.

Subcommands
-----------
eval    evaluate gtsf / wright / struve_h / kummer / whittaker_m /
        whittaker_w / bessel_k at a point
verify  run one transform-identity verification, emit text/json/csv
sweep   grid of verifications written to a report document
errata  print the ledger of corrections applied to the printed identities

Exit codes: 0 success (verification passed), 1 verification failed,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict

from . import __version__
from .errors import GalstruveError
from .gtsf import GtsfParams, eval_gtsf, eval_h_pbc
from .kernels import bessel_k, kummer_1f1, whittaker_m, whittaker_w
from .verify import (
    DEFAULT_SCALES,
    ERRATA,
    EulerCase,
    FracFourierCase,
    KTransformCase,
    LaplaceCase,
    VerificationReport,
    WhittakerCase,
    verify,
)
from .wright import WrightParams, eval_wright

SWEEP_CAP = 10_000

_PARAM_COLUMNS = (
    "lambda", "a", "mu", "xi", "p", "b", "c", "x",
    "r", "s", "zeta", "tau", "omega", "rho", "nu", "order",
)


def _add_gtsf_flags(p: argparse.ArgumentParser, defaults=True) -> None:
    p.add_argument("--a", type=int, default=1 if defaults else None)
    p.add_argument("--p", type=float, default=0.5 if defaults else None)
    p.add_argument("--b", type=float, default=1.0 if defaults else None)
    p.add_argument("--c", type=float, default=1.0 if defaults else None)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0 if defaults else None)
    p.add_argument("--mu", type=float, default=1.5 if defaults else None)
    p.add_argument("--xi", type=float, default=1.0 if defaults else None)


def _gtsf_from_args(args) -> GtsfParams:
    return GtsfParams(args.a, args.p, args.b, args.c, args.lam, args.mu, args.xi)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="galstruve",
        description="Galue-type Struve functions and their integral-transform identities",
    )
    ap.add_argument("--version", action="version", version=f"galstruve {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one function at a point")
    pe.add_argument(
        "function",
        choices=["gtsf", "wright", "struve_h", "kummer", "whittaker_m", "whittaker_w", "bessel_k"],
    )
    _add_gtsf_flags(pe)
    pe.add_argument("--z", type=float, required=True, help="evaluation point")
    pe.add_argument("--tol", type=float, default=1e-12)
    pe.add_argument("--upper", action="append", default=None, metavar="A,ALPHA",
                    help="wright upper pair, repeatable")
    pe.add_argument("--lower", action="append", default=None, metavar="B,BETA",
                    help="wright lower pair, repeatable")
    pe.add_argument("--alpha", type=float, default=None, help="kummer upper parameter")
    pe.add_argument("--gamma", type=float, default=None, help="kummer lower parameter")
    pe.add_argument("--tau", type=float, default=0.0)
    pe.add_argument("--omega", type=float, default=0.5)
    pe.add_argument("--nu", type=float, default=0.5)

    pv = sub.add_parser("verify", help="verify one transform identity")
    pv.add_argument("theorem", choices=["euler", "laplace", "whittaker", "ktransform", "frft"])
    _add_gtsf_flags(pv)
    pv.add_argument("--x", type=float, default=None, help="argument scale (per-theorem default)")
    pv.add_argument("--r", type=float, default=2.0)
    pv.add_argument("--s", type=float, default=3.0)
    pv.add_argument("--zeta", type=float, default=1.5)
    pv.add_argument("--tau", type=float, default=0.2)
    pv.add_argument("--omega", type=float, default=None,
                    help="whittaker second index / kernel scale / frft frequency")
    pv.add_argument("--rho", type=float, default=1.5)
    pv.add_argument("--nu", type=float, default=0.3)
    pv.add_argument("--order", type=float, default=1.0)
    pv.add_argument("--tol", type=float, default=None)
    pv.add_argument("--format", choices=["text", "json", "csv"], default="text")

    ps = sub.add_parser("sweep", help="verify a parameter grid, write a report document")
    ps.add_argument("theorem", choices=["euler", "laplace", "whittaker", "ktransform", "frft"])
    _add_gtsf_flags(ps)
    ps.add_argument("--x", type=float, default=None)
    ps.add_argument("--r", type=float, default=2.0)
    ps.add_argument("--s", type=float, default=3.0)
    ps.add_argument("--zeta", type=float, default=1.5)
    ps.add_argument("--tau", type=float, default=0.2)
    ps.add_argument("--omega", type=float, default=None)
    ps.add_argument("--rho", type=float, default=1.5)
    ps.add_argument("--nu", type=float, default=0.3)
    ps.add_argument("--order", type=float, default=1.0)
    ps.add_argument("--grid", action="append", default=[], metavar="NAME=MIN:MAX:COUNT",
                    help="sweep dimension, repeatable")
    ps.add_argument("--tol", type=float, default=None)
    ps.add_argument("--cap", type=int, default=SWEEP_CAP)
    ps.add_argument("--out", type=str, default=None, help="output path (default stdout)")
    ps.add_argument("--format", choices=["json", "csv"], default="json")

    sub.add_parser("errata", help="print the correction ledger for the printed identities")
    return ap


_OMEGA_DEFAULTS = {"whittaker": 0.3, "ktransform": 2.0, "frft": 1.0}


def _case_from_args(theorem: str, args, overrides: dict | None = None):
    vals = {
        "a": args.a, "p": args.p, "b": args.b, "c": args.c,
        "lambda": args.lam, "mu": args.mu, "xi": args.xi,
        "x": args.x, "r": args.r, "s": args.s, "zeta": args.zeta,
        "tau": args.tau, "omega": args.omega, "rho": args.rho,
        "nu": args.nu, "order": args.order,
    }
    if overrides:
        vals.update(overrides)
    if vals["x"] is None:
        vals["x"] = DEFAULT_SCALES[theorem]
    if vals["omega"] is None:
        vals["omega"] = _OMEGA_DEFAULTS.get(theorem, 0.3)
    gp = GtsfParams(int(vals["a"]), vals["p"], vals["b"], vals["c"],
                    vals["lambda"], vals["mu"], vals["xi"])
    if theorem == "euler":
        return EulerCase(gp, vals["x"], vals["r"], vals["s"])
    if theorem == "laplace":
        return LaplaceCase(gp, vals["x"], vals["s"])
    if theorem == "whittaker":
        return WhittakerCase(gp, vals["x"], vals["zeta"], vals["tau"], vals["omega"])
    if theorem == "ktransform":
        return KTransformCase(gp, vals["x"], vals["rho"], vals["nu"], vals["omega"])
    return FracFourierCase(gp, vals["x"], vals["order"], vals["omega"])


def _case_params(case) -> dict:
    gp = case.gtsf
    out = {
        "lambda": gp.lam, "a": gp.a, "mu": gp.mu, "xi": gp.xi,
        "p": gp.p, "b": gp.b, "c": gp.c, "x": case.x,
    }
    if isinstance(case, EulerCase):
        out.update(r=case.r, s=case.s)
    elif isinstance(case, LaplaceCase):
        out.update(s=case.s)
    elif isinstance(case, WhittakerCase):
        out.update(zeta=case.zeta, tau=case.tau, omega=case.omega)
    elif isinstance(case, KTransformCase):
        out.update(rho=case.rho, nu=case.nu, omega=case.omega)
    else:
        out.update(order=case.order, omega=case.omega)
    return out


def _complex_parts(v) -> dict | None:
    if v is None:
        return None
    c = complex(v)
    return {"re": c.real, "im": c.imag}


def _report_to_dict(theorem: str, rep: VerificationReport) -> dict:
    return {
        "theorem": theorem,
        "params": _case_params(rep.case),
        "lhs": _complex_parts(rep.lhs),
        "rhs": _complex_parts(rep.rhs),
        "abs_residual": rep.abs_residual,
        "rel_residual": rep.rel_residual,
        "quad_error": rep.quad_error,
        "series_terms": rep.series_terms,
        "passed": rep.passed,
        "notes": rep.notes,
    }


def _document(cases: list[dict], wall: float) -> dict:
    passed = sum(1 for c in cases if c["passed"])
    return {
        "tool_version": __version__,
        "cases": cases,
        "summary": {"total": len(cases), "passed": passed, "failed": len(cases) - passed},
        "wall_time_seconds": wall,
    }


def _fmt_value(v) -> str:
    if v is None:
        return ""
    c = complex(v)
    if c.imag == 0.0:
        return repr(c.real)
    return repr(c)


def _case_csv_row(d: dict) -> list:
    params = d["params"]
    row = [d["theorem"]]
    row += [params.get(k, "") for k in _PARAM_COLUMNS]
    lhs = d["lhs"]
    rhs = d["rhs"]
    row.append("" if lhs is None else _fmt_value(complex(lhs["re"], lhs["im"])))
    row.append("" if rhs is None else _fmt_value(complex(rhs["re"], rhs["im"])))
    row.append("" if d["abs_residual"] is None else repr(d["abs_residual"]))
    row.append("" if d["rel_residual"] is None else repr(d["rel_residual"]))
    row.append(d["passed"])
    return row


def _write_csv(handle, case_dicts: list[dict]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(["theorem", *_PARAM_COLUMNS, "lhs", "rhs", "abs_residual", "rel_residual", "passed"])
    for d in case_dicts:
        writer.writerow(_case_csv_row(d))


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _cmd_eval(args) -> int:
    try:
        if args.function in ("gtsf", "struve_h"):
            gp = _gtsf_from_args(args)
            if args.function == "struve_h":
                res = eval_h_pbc(args.p, args.b, args.c, args.z, args.tol)
            else:
                res = eval_gtsf(gp, args.z, args.tol)
            print(f"value = {res.value!r}")
            print(f"terms_used = {res.terms_used}")
            print(f"tail_estimate = {res.tail_estimate!r}")
            return 0
        if args.function == "wright":
            if not args.upper or not args.lower:
                return _fail("wright needs at least one --upper and one --lower pair")
            upper = tuple(tuple(float(t) for t in u.split(",")) for u in args.upper)
            lower = tuple(tuple(float(t) for t in l.split(",")) for l in args.lower)
            res = eval_wright(WrightParams(upper, lower), args.z, args.tol)
            print(f"value = {res.value!r}")
            print(f"terms_used = {res.terms_used}")
            print(f"tail_estimate = {res.tail_estimate!r}")
            return 0
        if args.function == "kummer":
            alpha = args.alpha if args.alpha is not None else 1.0
            gam = args.gamma if args.gamma is not None else 2.0
            print(f"value = {kummer_1f1(alpha, gam, args.z, args.tol)!r}")
            return 0
        if args.function == "whittaker_m":
            print(f"value = {whittaker_m(args.tau, args.omega, args.z)!r}")
            return 0
        if args.function == "whittaker_w":
            print(f"value = {whittaker_w(args.tau, args.omega, args.z)!r}")
            return 0
        print(f"value = {bessel_k(args.nu, args.z)!r}")
        return 0
    except (GalstruveError, ValueError) as exc:
        return _fail(str(exc))


def _print_text_report(theorem: str, d: dict) -> None:
    print(f"theorem: {theorem}")
    for key in ("lhs", "rhs"):
        v = d[key]
        print(f"{key}: " + ("n/a" if v is None else f"{v['re']!r} + {v['im']!r}j"))
    for key in ("abs_residual", "rel_residual", "quad_error"):
        v = d[key]
        print(f"{key}: " + ("n/a" if v is None else f"{v:.6e}"))
    print(f"series_terms: {d['series_terms']}")
    print(f"passed: {d['passed']}")
    if d["notes"]:
        print(f"notes: {d['notes']}")


def _cmd_verify(args) -> int:
    try:
        case = _case_from_args(args.theorem, args)
    except (GalstruveError, ValueError) as exc:
        return _fail(str(exc))
    rep = verify(case, args.tol)
    d = _report_to_dict(args.theorem, rep)
    if args.format == "json":
        print(json.dumps(d, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        _write_csv(buf, [d])
        print(buf.getvalue(), end="")
    else:
        _print_text_report(args.theorem, d)
    if rep.lhs is None:  # precondition gate: no quadrature attempted
        print(f"error: {rep.notes}", file=sys.stderr)
        return 2
    return 0 if rep.passed else 1


def _parse_grid(spec: str) -> tuple[str, list[float]]:
    name, _, rng = spec.partition("=")
    parts = rng.split(":")
    if not name or len(parts) != 3:
        raise ValueError(f"malformed grid spec {spec!r}, expected NAME=MIN:MAX:COUNT")
    lo, hi = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError(f"grid count must be >= 1 in {spec!r}")
    if count == 1:
        return name, [lo]
    step = (hi - lo) / (count - 1)
    return name, [lo + i * step for i in range(count)]


def _cmd_sweep(args) -> int:
    t0 = time.perf_counter()
    try:
        grids = [_parse_grid(g) for g in args.grid]
    except ValueError as exc:
        return _fail(str(exc))
    names = [g[0] for g in grids]
    for n in names:
        if n not in _PARAM_COLUMNS:
            return _fail(f"unknown grid parameter {n!r}")
    total = math.prod(len(g[1]) for g in grids) if grids else 1
    if total > args.cap:
        return _fail(f"sweep of {total} cases exceeds the cap of {args.cap}")
    case_dicts = []
    indices = [0] * len(grids)
    while True:
        overrides = {name: values[i] for (name, values), i in zip(grids, indices)}
        if "a" in overrides:
            overrides["a"] = int(overrides["a"])
        try:
            case = _case_from_args(args.theorem, args, overrides)
            rep = verify(case, args.tol)
        except GalstruveError as exc:
            rep = None
            case_dicts.append({
                "theorem": args.theorem,
                "params": overrides,
                "lhs": None, "rhs": None,
                "abs_residual": None, "rel_residual": None, "quad_error": None,
                "series_terms": 0, "passed": False, "notes": f"evaluation error: {exc}",
            })
        if rep is not None:
            case_dicts.append(_report_to_dict(args.theorem, rep))
        # advance the grid indices lexicographically
        pos = len(grids) - 1
        while pos >= 0:
            indices[pos] += 1
            if indices[pos] < len(grids[pos][1]):
                break
            indices[pos] = 0
            pos -= 1
        if pos < 0:
            break
    doc = _document(case_dicts, time.perf_counter() - t0)
    if args.format == "json":
        payload = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        _write_csv(buf, case_dicts)
        payload = buf.getvalue()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(payload)
        except OSError as exc:
            return _fail(f"cannot write {args.out}: {exc}")
    else:
        print(payload, end="")
    return 0


def _cmd_errata() -> int:
    for rec in ERRATA:
        print(f"[{rec['id']}] {rec['where']}")
        print(f"  printed:   {rec['printed']}")
        print(f"  corrected: {rec['corrected']}")
        print(f"  basis:     {rec['basis']}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_errata()


if __name__ == "__main__":
    sys.exit(main())
