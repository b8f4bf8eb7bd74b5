"""Command-line front end."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np

from . import catalog
from .distillation.factory import EmptyCatalogError, build_catalog
from .distillation.units import PauliErrorRates
from .estimator import (MODES, ApplicationProfile, HardwareModel, InfeasibleError,
                        overhead, search, split_budget)
from .magic_state import (DEFAULT_INJECTION_FACTOR, EmptyMsdfCatalogError,
                          catalog_to_json, msdf_catalog)
from .surface_code import DEFAULT_CYCLE_FACTOR

EXIT_OK, EXIT_CONFIG, EXIT_INFEASIBLE, EXIT_VALIDATE = 0, 1, 2, 3

CSV_COLUMNS = ("axis", "nodes", "qubits_total", "runtime_s", "distance",
               "t_gadget_s", "frac_edf", "frac_msdf", "frac_data", "volume",
               "overhead", "feasible")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- run spec

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--app", help="built-in application: " + ", ".join(catalog.application_keys()))
    p.add_argument("--preset", default=None,
                   help="hardware preset: fast|slow-optimistic|pessimistic")
    p.add_argument("--config", help="JSON run config (unknown keys rejected)")
    p.add_argument("--bell-error", type=float, help="raw Bell pair error (total)")
    p.add_argument("--eta", type=float, help="Bell pairs per second per link")
    p.add_argument("--node-size", type=int, help="physical qubits per node")
    p.add_argument("--cycle-factor", type=float,
                   help="physical op layers per syndrome round")
    p.add_argument("--injection-factor", type=float,
                   help="raw T-state error as a multiple of p")
    p.add_argument("--eps-total", type=float, help="application error budget")
    p.add_argument("--weights", type=float, nargs=3, metavar=("L", "M", "E"),
                   help="budget split weights")
    p.add_argument("--mode", choices=MODES, help="eta-term mode (default strict)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output here instead of stdout")


def _context(args) -> dict:
    """Resolve app, hardware, budget and mode from config file and flags."""
    conf = catalog.load_config(args.config) if getattr(args, "config", None) else {}
    app = conf.get("application")
    if args.app:
        try:
            app = catalog.lookup(args.app)
        except catalog.NotFoundError as exc:
            raise catalog.ConfigError(str(exc)) from exc
    if app is None:
        raise catalog.ConfigError("no application given (--app or config)")
    if args.eps_total is not None:
        app = replace(app, eps_total=args.eps_total)
    hw = conf.get("hardware")
    if hw is None or args.preset:
        try:
            pr = catalog.preset(args.preset or "fast-optimistic")
        except catalog.NotFoundError as exc:
            raise catalog.ConfigError(str(exc)) from exc
        hw = pr.hardware() if hw is None else replace(
            hw, qubit=replace(hw.qubit, t_op=pr.t_op, p=pr.p))
    over = {}
    if args.bell_error is not None:
        over["bell_error_raw"] = PauliErrorRates.depolarizing(args.bell_error)
    for flag, fld in (("eta", "eta"), ("node_size", "node_size"),
                      ("cycle_factor", "cycle_factor"),
                      ("injection_factor", "injection_factor")):
        if getattr(args, flag, None) is not None:
            over[fld] = getattr(args, flag)
    try:
        hw = replace(hw, **over)
        weights = args.weights or conf.get("budget_weights", (1.0, 1.0, 1.0))
        budget = split_budget(app.eps_total, weights)
    except ValueError as exc:
        raise catalog.ConfigError(str(exc)) from exc
    return {"app": app, "hw": hw, "budget": budget,
            "mode": args.mode or conf.get("mode", "strict")}


def hardware_doc(hw: HardwareModel) -> dict:
    return {"t_op": hw.t_op, "p": hw.p, "bell_rates": list(hw.bell_error_raw.as_tuple()),
            "eta": hw.eta, "node_size": hw.node_size, "cycle_factor": hw.cycle_factor,
            "injection_factor": hw.injection_factor,
            "msdf_units": [u.to_dict() for u in hw.msdf_units]}


def app_doc(app: ApplicationProfile) -> dict:
    return {"name": app.name, "q_d": app.q_d, "t_count": app.t_count,
            "eps_total": app.eps_total}


def result_row(axis, res, mono=None) -> dict:
    if res is None:
        return {c: None for c in CSV_COLUMNS} | {"axis": axis, "feasible": False}
    return {
        "axis": axis, "nodes": res.nodes, "qubits_total": res.total_physical_qubits,
        "runtime_s": res.runtime, "distance": res.distance,
        "t_gadget_s": res.t_gadget, "frac_edf": res.frac_edf,
        "frac_msdf": res.frac_msdf, "frac_data": res.frac_data,
        "volume": res.spacetime_volume,
        "overhead": overhead(res, mono) if mono is not None else 1.0,
        "feasible": True,
    }


# ---------------------------------------------------------------- commands

def run_estimate(args) -> tuple[dict, int]:
    ctx = _context(args)
    app, hw, budget, mode = ctx["app"], ctx["hw"], ctx["budget"], ctx["mode"]
    mono = search(app, hw, monolithic=True, budget=budget)
    res = mono if args.monolithic else search(app, hw, mode, budget=budget)
    rep_index = res.frontier.index(res.representative)
    doc = {
        "command": "estimate", "application": app_doc(app),
        "hardware": hardware_doc(hw), "monolithic": bool(args.monolithic),
        "mode": mode, "budget": [budget.eps_L, budget.eps_M, budget.eps_E],
        "representative_index": rep_index,
        "rows": [result_row(i, r, mono.representative)
                 for i, r in enumerate(res.frontier)],
        "representative": res.representative.to_dict(),
    }
    return doc, EXIT_OK


def _sweep_point(payload):
    app, hw, budget, mode = payload
    try:
        return search(app, hw, mode, budget=budget).representative
    except InfeasibleError:
        return None


def _sweep(args, axis_name: str, values, make_hw) -> tuple[dict, int]:
    ctx = _context(args)
    app, hw, budget, mode = ctx["app"], ctx["hw"], ctx["budget"], ctx["mode"]
    mono = search(app, hw, monolithic=True, budget=budget).representative
    payloads = [(app, make_hw(hw, v), budget, mode) for v in values]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_sweep_point, payloads))
    else:
        results = [_sweep_point(pl) for pl in payloads]
    rows = [result_row(v, r, mono) for v, r in zip(values, results)]
    doc = {"command": f"sweep-{axis_name}", "axis": axis_name,
           "application": app_doc(app), "hardware": hardware_doc(hw), "mode": mode,
           "monolithic_baseline": result_row("monolithic", mono, mono), "rows": rows}
    return doc, EXIT_OK


def eta_grid(lo: float, hi: float, per_decade: int = 12) -> list[float]:
    n = int(round(math.log10(hi / lo) * per_decade))
    vals = np.logspace(math.log10(lo), math.log10(hi), n + 1)
    return [float(f"{v:.6g}") for v in vals]


def run_sweep_node_size(args) -> tuple[dict, int]:
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else list(catalog.NODE_SIZES)
    return _sweep(args, "node-size", sizes, lambda hw, v: replace(hw, node_size=v))


def run_sweep_eta(args) -> tuple[dict, int]:
    if args.values:
        etas = [float(s) for s in args.values.split(",")]
    else:
        etas = eta_grid(args.eta_min, args.eta_max, args.per_decade)
    return _sweep(args, "eta", etas, lambda hw, v: replace(hw, eta=v))


def run_list_factories(args) -> tuple[dict, int]:
    pr = catalog.preset(args.preset or "fast-optimistic")
    c = args.cycle_factor or DEFAULT_CYCLE_FACTOR
    if args.kind == "msdf":
        inj = args.injection_factor or DEFAULT_INJECTION_FACTOR
        entries = msdf_catalog(pr.p, args.target, c, inj)
        doc = json.loads(catalog_to_json(entries))
        doc.update({"target": args.target, "p": pr.p, "cycle_factor": c})
    else:
        bell = args.bell_error if args.bell_error is not None else catalog.DEFAULT_BELL_ERROR
        cat = build_catalog(PauliErrorRates.depolarizing(bell), pr.p, args.target, c,
                            max_levels=args.max_levels)
        doc = cat.to_dict()
    doc["command"] = "list-factories"
    return doc, EXIT_OK


def run_validate(args) -> tuple[dict, int]:
    from .validation import run_validation
    hw_kw = {}
    if args.cycle_factor is not None:
        hw_kw["cycle_factor"] = args.cycle_factor
    if args.injection_factor is not None:
        hw_kw["injection_factor"] = args.injection_factor
    checks = run_validation(hw_kw)
    failed = [c for c in checks if c.graded and not c.ok]
    doc = {"command": "validate", "passed": not failed,
           "checks": [{"name": c.name, "value": c.value, "expected": c.expected,
                       "low": c.low, "high": c.high, "graded": c.graded,
                       "ok": c.ok} for c in checks],
           "report": [c.line() for c in checks]}
    return doc, EXIT_OK if not failed else EXIT_VALIDATE


# ---------------------------------------------------------------- output

def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r[k] is None else repr(r[k]) if isinstance(r[k], float)
                        else r[k]) for k in CSV_COLUMNS})
    return buf.getvalue()


def render(doc: dict, fmt: str) -> str:
    if fmt == "csv":
        if "rows" in doc:
            return to_csv(doc["rows"])
        if "report" in doc:
            return "\n".join(doc["report"]) + "\n"
        raise UsageError("this command has no CSV form; use --format json")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="distqre", description=(
        "Resource estimates for distributed fault-tolerant quantum computers."))
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="Pareto frontier for one application")
    _add_common(p)
    p.add_argument("--monolithic", action="store_true",
                   help="single machine, no network")
    p.set_defaults(func=run_estimate)

    p = sub.add_parser("sweep-node-size", help="representative vs node size")
    _add_common(p)
    p.add_argument("--sizes", help="comma-separated node sizes")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=run_sweep_node_size)

    p = sub.add_parser("sweep-eta", help="representative vs entanglement rate")
    _add_common(p)
    p.add_argument("--values", help="comma-separated rates (overrides the grid)")
    p.add_argument("--eta-min", type=float, default=catalog.ETA_RANGE[0])
    p.add_argument("--eta-max", type=float, default=catalog.ETA_RANGE[1])
    p.add_argument("--per-decade", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=run_sweep_eta)

    p = sub.add_parser("list-factories", help="print a factory catalog")
    p.add_argument("--kind", choices=("edf", "msdf"), default="edf")
    p.add_argument("--preset", default=None)
    p.add_argument("--target", type=float, default=1e-9)
    p.add_argument("--bell-error", type=float)
    p.add_argument("--max-levels", type=int, default=5)
    p.add_argument("--cycle-factor", type=float)
    p.add_argument("--injection-factor", type=float)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out")
    p.set_defaults(func=run_list_factories)

    p = sub.add_parser("validate", help="compare against published tables")
    p.add_argument("--cycle-factor", type=float)
    p.add_argument("--injection-factor", type=float)
    p.add_argument("--format", choices=("json", "csv"), default="csv",
                   help="csv prints one PASS/FAIL/INFO line per cell")
    p.add_argument("--out")
    p.set_defaults(func=run_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
        text = render(doc, args.format)
    except (catalog.ConfigError, catalog.NotFoundError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (InfeasibleError, EmptyCatalogError, EmptyMsdfCatalogError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
