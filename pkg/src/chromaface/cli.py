"""Command-line front end: ``chromaface <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails or cannot be
decided within budget, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import acceptance
from .checks import all_checks, bounds_table, lemma_suite
from .coloring import (
    DEFAULT_NODE_BUDGET,
    SearchInconclusive,
    chromatic_index,
    criticality_report,
    is_overfull,
    is_proper,
)
from .discharging import DischargingError, apply_delta5, apply_delta6, ledger_report
from .embedding import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    EmbeddingError,
    PlaneGraph,
    avg_face_degree,
    embedding_spread,
    enumerate_planar_embeddings,
    find_planar_rotation,
    local_min,
    max_local_face_average,
    rotation_system_count,
    size_identity_check,
)
from .families import FamilySpec, gen_odd_cycle, gen_prism_G, gen_quartic_H, gen_quintic_T
from .formats import (
    FormatError,
    load_graph,
    resolve_input,
    write_certificate,
    write_coloring,
    write_edge_list,
    write_plane_graph,
)
from .graph import Graph, GraphError, connectivity_level

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Reporter:
    """Renders one report as ``key: value`` lines or as JSON with the same keys."""

    def __init__(self, as_json: bool, approx: bool):
        self.as_json = as_json
        self.approx = approx

    def value(self, x: Any) -> Any:
        if isinstance(x, bool) or x is None:
            return x
        if isinstance(x, Fraction):
            s = str(x)
            if self.approx and x.denominator != 1:
                s += f" (~{float(x):.6f})"
            return s
        if isinstance(x, dict):
            return {str(k): self.value(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [self.value(v) for v in x]
        return x

    def text(self, x: Any) -> str:
        x = self.value(x)
        if isinstance(x, bool):
            return "true" if x else "false"
        if x is None:
            return "none"
        if isinstance(x, dict):
            return ", ".join(f"{k}={self.text(v)}" for k, v in x.items()) or "{}"
        if isinstance(x, list):
            if all(isinstance(v, list) and all(isinstance(w, int) for w in v) for v in x) and x:
                return ", ".join("(" + ", ".join(map(str, v)) + ")" for v in x)
            return ", ".join(self.text(v) for v in x) or "[]"
        return str(x)

    def emit(self, report: dict, headline: list[str] | None = None, rows: list[str] | None = None) -> None:
        if self.as_json:
            print(json.dumps(self.value(report), indent=2))
            return
        shown = set()
        if headline:
            print(", ".join(f"{k}: {self.text(report[k])}" for k in headline))
            shown.update(headline)
        for k, v in report.items():
            if k in shown or k == "log":
                continue
            print(f"{k}: {self.text(v)}")
        for row in rows or []:
            print(row)


def _budget(args: argparse.Namespace, default: int) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("CHROMAFACE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"CHROMAFACE_BUDGET must be an integer, got {env!r}") from None
    return default


def _load(path: str) -> tuple[Graph, PlaneGraph | None]:
    try:
        return load_graph(resolve_input(path))
    except FileNotFoundError as exc:
        raise InputError(str(exc)) from None


def _embedded(path: str, args: argparse.Namespace) -> PlaneGraph:
    g, pg = _load(path)
    if pg is not None:
        return pg
    rot = find_planar_rotation(g, _budget(args, DEFAULT_BUDGET))
    if rot is None:
        raise InputError(f"{path}: no plane embedding found")
    return PlaneGraph(g, rot)


# gen

_FAMILIES = {"cycle": "odd_cycle", "gn": "G", "hn": "H", "tm": "T"}


def cmd_gen(args: argparse.Namespace, out: Reporter) -> int:
    param = args.m if args.family == "tm" else args.n
    if param is None:
        raise InputError(f"--{'m' if args.family == 'tm' else 'n'} is required for family {args.family}")
    spec = FamilySpec(_FAMILIES[args.family], param)
    certs = regular_graph = None
    if args.family == "cycle":
        pg = gen_odd_cycle(param)[1]
    elif args.family == "gn":
        regular, sub = gen_prism_G(param)
        pg = regular if args.unsubdivided else sub
    elif args.family == "hn":
        regular, sub = gen_quartic_H(param)
        pg = regular if args.unsubdivided else sub
    else:
        regular, sub, certs = gen_quintic_T(param)
        regular_graph = regular.graph
        pg = regular if args.unsubdivided else sub
    prefix = Path(args.out)
    if prefix.parent and not prefix.parent.exists():
        raise InputError(f"output directory {prefix.parent} does not exist")
    files = {".el": write_edge_list(pg.graph), ".pg": write_plane_graph(pg)}
    if certs is not None:
        files[".cert"] = write_certificate(certs, regular_graph)
    written = []
    for suffix, body in files.items():
        target = prefix.with_name(prefix.name + suffix)
        target.write_text(body)
        written.append(str(target))
    out.emit({"family": args.family, "parameter": param, "vertices": pg.graph.n, "edges": pg.graph.m, "files": written})
    return EXIT_OK


# metrics

def cmd_metrics(args: argparse.Namespace, out: Reporter) -> int:
    pg = _embedded(args.input, args)
    g = pg.graph
    report: dict[str, Any] = {
        "vertices": g.n,
        "edges": g.m,
        "faces": len(pg.faces),
        "fbar": avg_face_degree(g),
        "face_average_traced": pg.face_average(),
    }
    two_connected = connectivity_level(g) >= 2
    report["local_min"] = local_min(pg) if two_connected else None
    if two_connected:
        value, status = max_local_face_average(g, _budget(args, DEFAULT_BUDGET), rotation=pg.rotation)
        report["fstar"] = value
        report["fstar_status"] = status
    else:
        report["fstar"] = report["fstar_status"] = None
    report["size_identity"] = size_identity_check(g)
    out.emit(report)
    return EXIT_OK if report["size_identity"] and report["fbar"] == report["face_average_traced"] else EXIT_FAIL


# verify

def cmd_verify(args: argparse.Namespace, out: Reporter) -> int:
    g, _ = _load(args.input)
    if g.m == 0:
        raise InputError("graph has no edges")
    budget = _budget(args, DEFAULT_NODE_BUDGET)
    if args.mode == "chromatic":
        d = chromatic_index(g, budget)
        report = {
            "max_degree": g.max_degree,
            "chromatic_index": d.chromatic_index,
            "class": d.class_label,
            "witness_proper": is_proper(g, d.witness),
        }
        if args.coloring_out:
            Path(args.coloring_out).write_text(write_coloring(d.witness))
            report["coloring_file"] = args.coloring_out
        out.emit(report)
        return EXIT_OK if report["witness_proper"] else EXIT_FAIL
    if args.mode == "critical":
        rep = criticality_report(g, budget, workers=args.workers, stop_early=not args.full)
        report = {
            "critical": rep.critical,
            "class2": rep.class2,
            "deletions_total": rep.deletions_total,
            "deletions_class1": rep.deletions_colorable,
            "failing_edge": list(rep.failing_edge) if rep.failing_edge else None,
        }
        if out.as_json:
            out.emit(report)
        elif not rep.class2:
            print("critical: false (graph is class 1)")
        elif rep.failing_edge is not None:
            print(f"critical: false (deleting {rep.failing_edge} leaves a class 2 graph)")
        else:
            print(f"critical: true ({rep.deletions_colorable}/{rep.deletions_total} deletions class 1)")
        return EXIT_OK if rep.critical else EXIT_FAIL
    if args.mode == "overfull":
        delta = g.max_degree
        cap = delta * (g.n // 2)
        report = {
            "overfull": is_overfull(g),
            "edges": g.m,
            "capacity": cap,
            "equality": g.n % 2 == 1 and g.m == cap + 1,
        }
        if out.as_json:
            out.emit(report)
        else:
            rel = ">" if g.m > cap else "<="
            print(f"overfull: {out.text(report['overfull'])} (|E| = {g.m} {rel} {delta}*floor({g.n}/2) = {cap})")
            print(f"equality: {out.text(report['equality'])}")
        return EXIT_OK if report["overfull"] else EXIT_FAIL
    reps = lemma_suite(g)
    return _emit_checks(reps, out)


def _emit_checks(reps: list, out: Reporter) -> int:
    report = {r.lemma_id: r.as_dict() for r in reps}
    if out.as_json:
        out.emit(report)
    else:
        for r in reps:
            state = "holds" if r.holds else f"FAILS ({len(r.violations)} violations)"
            print(f"{r.lemma_id}: {state}")
            for v in r.violations[:10]:
                print(f"  violation: {v}")
            for d in r.details:
                print(f"  {d}")
        hyp = reps[0].hypothesis_violations if reps else []
        if hyp:
            print("hypothesis: " + "; ".join(hyp))
    return EXIT_OK if all(r.holds for r in reps) else EXIT_FAIL


# check

def cmd_check(args: argparse.Namespace, out: Reporter) -> int:
    g, _ = _load(args.input)
    if g.m == 0:
        raise InputError("graph has no edges")
    return _emit_checks(all_checks(g, args.k), out)


# discharge

def cmd_discharge(args: argparse.Namespace, out: Reporter) -> int:
    _, pg = _load(args.input)
    if pg is None:
        raise InputError("discharge needs a plane-graph (.pg) file")
    if args.ruleset == "delta5":
        ledger = apply_delta5(pg, args.r)
        headline = ["total_initial", "total_final", "faces_final_zero"]
    else:
        if args.r is not None:
            raise InputError("--r applies to delta5 only")
        ledger = apply_delta6(pg)
        headline = ["total_initial", "total_final", "faces4plus_final_zero"]
    report = ledger_report(pg, ledger, with_log=args.log)
    rows = []
    if args.log and not out.as_json:
        rows = [f"{t['rule']}: {t['from']} -> {t['to']} {out.text(t['amount'])}" for t in report["log"]]
    out.emit(report, headline=headline, rows=rows)
    ok = report["conserved"] and report[headline[2]]
    return EXIT_OK if ok else EXIT_FAIL


# embeddings

def cmd_embeddings(args: argparse.Namespace, out: Reporter) -> int:
    g, pg = _load(args.input)
    budget = _budget(args, DEFAULT_BUDGET)
    level = connectivity_level(g)
    report: dict[str, Any] = {
        "vertices": g.n,
        "edges": g.m,
        "connectivity": level,
        "rotation_systems": rotation_system_count(g),
    }
    if rotation_system_count(g) > budget:
        report["plane_embeddings"] = None
        report["note"] = f"rotation space exceeds budget {budget}"
    else:
        report["plane_embeddings"] = sum(1 for _ in enumerate_planar_embeddings(g, budget))
        if level >= 2 and report["plane_embeddings"]:
            lo, hi = embedding_spread(g, budget)
            report["local_min_range"] = [lo, hi]
            report["embedding_dependent"] = lo < hi
    if level >= 2:
        value, status = max_local_face_average(g, budget, rotation=pg.rotation if pg else None)
        report["fstar"] = value
        report["fstar_status"] = status
    out.emit(report)
    return EXIT_OK


# table

def cmd_table(args: argparse.Namespace, out: Reporter) -> int:
    rows = bounds_table()
    if out.as_json:
        out.emit({"rows": [{"k": r.k, "average": r.cells()[0], "local": r.cells()[1]} for r in rows]})
        return EXIT_OK
    print(f"{'k':>2}  {'average face degree b_k':<40}  local face degree b*_k")
    for r in rows:
        avg, loc = r.cells()
        print(f"{r.k:>2}  {avg:<40}  {loc}")
    return EXIT_OK


# repro

def cmd_repro(args: argparse.Namespace, out: Reporter) -> int:
    numbers = args.only or [n for n, _, _ in acceptance.CRITERIA]
    results = [acceptance.run_criterion(n) for n in numbers]
    if out.as_json:
        out.emit({
            "criteria": [
                {"number": r.number, "title": r.title, "passed": r.passed, "seconds": round(r.seconds, 3),
                 "failures": r.failures, "notes": r.notes}
                for r in results
            ],
            "passed": sum(r.passed for r in results),
            "total": len(results),
        })
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromaface", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--approx", action="store_true", help="append decimal approximations")
    common.add_argument("--budget", type=int, help="enumeration/search budget (else $CHROMAFACE_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="write a family member to disk")
    s.add_argument("--family", required=True, choices=["cycle", "gn", "hn", "tm"])
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--out", required=True, help="output prefix")
    s.add_argument("--unsubdivided", action="store_true", help="write the regular graph before subdivision")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("metrics", parents=[common], help="face-degree parameters")
    s.add_argument("input")
    s.set_defaults(func=cmd_metrics)

    s = sub.add_parser("verify", parents=[common], help="colouring and structure verification")
    s.add_argument("input")
    s.add_argument("--mode", required=True, choices=["chromatic", "critical", "overfull", "lemmas"])
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--full", action="store_true", help="finish the deletion sweep after a failure")
    s.add_argument("--coloring-out", help="write the witness colouring here")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("discharge", parents=[common], help="run a discharging rule set")
    s.add_argument("input")
    s.add_argument("--ruleset", required=True, choices=["delta5", "delta6"])
    s.add_argument("--r", type=_fraction, help="threshold for delta5 (default: local minimum)")
    s.add_argument("--log", action="store_true", help="print every transfer")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("check", parents=[common], help="lemma suite plus edge and face bounds")
    s.add_argument("input")
    s.add_argument("--k", type=int, help="bound index (default: maximum degree)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("embeddings", parents=[common], help="enumerate plane embeddings")
    s.add_argument("input")
    s.set_defaults(func=cmd_embeddings)

    s = sub.add_parser("table", parents=[common], help="known bounds on face-degree suprema")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("repro", parents=[common], help="run the reproduction criteria")
    s.add_argument("--only", type=int, action="append", choices=[n for n, _, _ in acceptance.CRITERIA])
    s.set_defaults(func=cmd_repro)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Reporter(args.json, args.approx)
    handler: Callable[[argparse.Namespace, Reporter], int] = args.func
    try:
        return handler(args, out)
    except (InputError, FormatError, GraphError, EmbeddingError, DischargingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, SearchInconclusive) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
