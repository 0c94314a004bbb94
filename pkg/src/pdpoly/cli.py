"""Command-line frontend.

Every capability is reachable as a subcommand with machine-readable output:
JSON on stdout (schema-versioned, polynomial coefficients as decimal strings
indexed by power) and optional CSV for catalog audits. Exit codes: 0 success,
1 partial catalog failure, 2 usage error, 3 input error, 4 resource cap
exceeded, 5 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

from . import catalog as catalog_mod
from . import closed_forms, counting, graphs, propagation, roots, threshold
from .errors import (
    DomainError,
    FormatError,
    IngestError,
    NumericFailure,
    PdpolyError,
    TooLarge,
)
from .polynomial import IntPolynomial

SCHEMA = 1

EXIT_PARTIAL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAP = 4
EXIT_NUMERIC = 5


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _load_graph(source: str, fmt: str) -> graphs.Graph:
    text = _read_text(source)
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
        fmt = "edgelist" if re.fullmatch(r"\d+\s+\d+", first.strip()) else "graph6"
    if fmt == "edgelist":
        return graphs.parse_edge_list_text(text)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError("expected exactly one graph6 line")
    return graphs.from_graph6(lines[0])


def _emit(payload: dict):
    payload = {"schema": SCHEMA, **payload}
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _poly_json(p: IntPolynomial) -> list[str]:
    return p.coeff_strings()


def _cmd_compute(args) -> int:
    g = _load_graph(args.infile, args.format)
    out: dict = {"n": g.n}
    which = ["pd", "zf", "dom"] if args.which == "all" else [args.which]
    for w in which:
        if args.method == "formula":
            if w != "pd":
                raise DomainError("the formula method only covers the pd polynomial")
            match = closed_forms.recognize_named_family(g)
            if match is None:
                raise FormatError("input graph matches no closed-form family")
            out[w] = _poly_json(closed_forms.formula_family(match[0], *match[1]))
            out["family"] = {"name": match[0], "params": list(match[1])}
            continue
        fn = {"pd": counting.pd_polynomial,
              "zf": counting.zf_polynomial,
              "dom": counting.dom_polynomial}[w]
        out[w] = _poly_json(fn(g, method=args.method, max_n=args.max_n))
    _emit(out)
    return 0


def _cmd_tail(args) -> int:
    g = _load_graph(args.infile, args.format)
    coeffs = counting.pd_tail_coefficients(g, args.kmax)
    _emit({"n": g.n, "kmax": args.kmax,
           "coefficients": [[size, str(count)] for size, count in coeffs]})
    return 0


def _cmd_roots(args) -> int:
    g = _load_graph(args.infile, args.format)
    report = roots.analyze_graph(g, tol=args.tol)
    payload = report.to_json()
    payload["n"] = g.n
    payload["poly"] = _poly_json(counting.pd_polynomial(g))
    _emit(payload)
    return 0


def _cmd_threshold(args) -> int:
    block = threshold.normalize(args.bits)
    poly = threshold.threshold_pd_polynomial(block)
    _emit({
        "bits": block.bits,
        "blocks": [[sym, length] for sym, length in block.blocks],
        "pd": _poly_json(poly),
    })
    return 0


def _cmd_forts(args) -> int:
    g = _load_graph(args.infile, args.format)
    forts = propagation.enumerate_forts(g, minimal_only=args.minimal)
    out = {
        "n": g.n,
        "minimal": args.minimal,
        "forts": [list(graphs.vertices_of(f)) for f in forts],
        "neighborhood_family": [
            list(graphs.vertices_of(h))
            for h in sorted(propagation.fort_neighborhood_family(g))
        ],
    }
    if args.ip_bound:
        chk = propagation.check_ip_bound(g)
        out["ip_bound"] = {"lhs": chk["lhs"], "rhs": str(chk["rhs"]), "holds": chk["holds"]}
    _emit(out)
    return 0


def _parse_gadget(arg: str) -> tuple[graphs.Graph, int]:
    if "@" not in arg:
        raise FormatError(f"gadget argument {arg!r} needs FILE@VERTEX")
    fname, _, vtx = arg.rpartition("@")
    return _load_graph(fname, "auto"), int(vtx)


def _cmd_decompose(args) -> int:
    op = args.op
    composed = None
    if op == "identify":
        host = _load_graph(args.g1, args.format)
        gadgets = [_parse_gadget(s) for s in args.gadget or []]
        poly = closed_forms.identification_poly(host, gadgets)
        composed = graphs.identify(host, gadgets)
    elif op == "dominating-vertex":
        g1 = _load_graph(args.g1, args.format)
        poly = closed_forms.dominating_vertex_poly(g1)
        composed = graphs.join(g1, graphs.complete(1))
    else:
        g1 = _load_graph(args.g1, args.format)
        g2 = _load_graph(args.g2, args.format)
        if op == "union":
            poly = closed_forms.disjoint_union_poly(
                counting.pd_polynomial(g1), counting.pd_polynomial(g2)
            )
            composed = graphs.disjoint_union(g1, g2)
        elif op == "join":
            poly = closed_forms.join_poly(g1, g2)
            composed = graphs.join(g1, g2)
        elif op == "corona":
            if g2.m != g2.n * (g2.n - 1) // 2:
                raise FormatError("corona formula needs a complete second factor")
            poly = closed_forms.formula_family("corona_complete", g1, g2.n)
            composed = graphs.corona(g1, g2)
        else:
            raise FormatError(f"unknown operation {op!r}")
    verify = args.verify
    if verify is None:
        verify = composed.n <= 12
    verified = None
    if verify:
        verified = counting.pd_polynomial(composed) == poly
    _emit({
        "op": op,
        "n": composed.n,
        "poly": _poly_json(poly),
        "verified": verified,
    })
    return 0 if verified in (None, True) else EXIT_NUMERIC


def _catalog_worker(key: str) -> tuple[str, list[str] | None, str | None]:
    try:
        g = graphs.from_graph6(key)
        poly = counting.pd_polynomial(g)
        return key, poly.coeff_strings(), None
    except Exception as exc:
        return key, None, f"{type(exc).__name__}: {exc}"


def _cmd_catalog(args) -> int:
    lines = [ln.strip() for ln in _read_text(args.infile).splitlines() if ln.strip()]
    if not lines:
        raise IngestError("empty catalog file")
    entries = []
    errors = []
    if args.jobs > 1:
        import multiprocessing as mp

        cache = {}
        if args.results:
            cache = catalog_mod._load_results(Path(args.results))
        todo = [ln for ln in lines if ln not in cache]
        computed = {}
        if todo:
            with mp.Pool(args.jobs) as pool:
                results = pool.map(_catalog_worker, todo)
            # single-consumer persistence: workers compute, only this
            # process appends
            sink = open(args.results, "a") if args.results else None
            try:
                for key, coeffs, err in results:
                    computed[key] = (coeffs, err)
                    if sink is not None and err is None:
                        sink.write(json.dumps({"g6": key, "coeffs": coeffs}) + "\n")
            finally:
                if sink is not None:
                    sink.close()
        for lineno, key in enumerate(lines, start=1):
            try:
                if key in cache:
                    poly = cache[key]
                else:
                    coeffs, err = computed[key]
                    if err is not None:
                        raise FormatError(err)
                    poly = IntPolynomial.from_strings(coeffs)
                g = graphs.from_graph6(key)
                entries.append(catalog_mod._make_entry(key, g, poly))
            except Exception as exc:
                errors.append((lineno, f"{type(exc).__name__}: {exc}"))
        if not entries:
            raise IngestError(f"no usable graphs in {args.infile}")
    else:
        progress = None
        if args.progress:
            def progress(done, total):
                if done % 500 == 0 or done == total:
                    print(f"{done}/{total}", file=sys.stderr)
        result = catalog_mod.ingest(args.infile, results_path=args.results, progress=progress)
        entries, errors = result.entries, result.errors

    report: dict = {"audit": args.audit, "entries": len(entries),
                    "errors": [{"line": ln, "message": msg} for ln, msg in errors]}
    if args.audit == "unimodality":
        report.update(catalog_mod.unimodality_audit(entries))
    elif args.audit == "uniqueness":
        report.update(catalog_mod.uniqueness_report(entries, complete=args.complete))
        orders = {e.n for e in entries}
        if any(n + k in orders for n in orders for k in (1, 2, 3)):
            report["k1_k2"] = catalog_mod.k1_k2_uniqueness_check(entries)
    elif args.audit == "roots":
        items = [(e.key, graphs.from_graph6(e.key), e.poly) for e in entries]
        bad = catalog_mod.root_classification_check(items)
        rouche = catalog_mod.rouche_check(items)
        report["classification_violations"] = bad
        report["rouche"] = rouche
        report["ok"] = not bad and not rouche["violations"]
    elif args.audit == "suite":
        items = [(e.key, graphs.from_graph6(e.key), e.poly) for e in entries]
        viol: dict[str, list] = {}
        skipped = []
        for key, g, poly in items:
            if g.n > args.max_n:
                skipped.append(key)
                continue
            for name in catalog_mod._labeled_battery(g):
                viol.setdefault(name, []).append(key)
        for name, bad in (
            ("dichotomy", catalog_mod.dichotomy_check(items)),
            ("zhao", catalog_mod.zhao_check(items)),
            ("root_classification", catalog_mod.root_classification_check(items)),
        ):
            if bad:
                viol[name] = bad
        rouche = catalog_mod.rouche_check(items)
        if rouche["violations"]:
            viol["rouche"] = rouche["violations"]
        report["violations"] = viol
        report["skipped"] = skipped
        report["unimodality"] = catalog_mod.unimodality_audit(entries)
        report["ok"] = not viol

    if args.csv:
        _write_csv(args.csv, entries)
        report["csv"] = args.csv
    _emit(report)
    return EXIT_PARTIAL if errors else 0


def _write_csv(path: str, entries) -> None:
    groups = catalog_mod.group_by_polynomial(entries)
    class_ids: dict = {}
    for e in entries:
        if e.poly not in class_ids:
            class_ids[e.poly] = len(class_ids)
    max_deg = max(e.n for e in entries)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["graph6", "n", "gamma_p"]
            + [f"c{i}" for i in range(max_deg + 1)]
            + ["unimodal", "class_id"]
        )
        for e in entries:
            coeffs = [str(e.poly.coeff(i)) for i in range(max_deg + 1)]
            writer.writerow(
                [e.key, e.n, e.gamma_p] + coeffs + [int(e.unimodal), class_ids[e.poly]]
            )


def _cmd_gen(args) -> int:
    g = graphs.family(args.family, *args.params)
    print(graphs.to_graph6(g))
    return 0


def _cmd_trace(args) -> int:
    g = _load_graph(args.infile, args.format)
    vertices = [int(v) for v in args.set.split(",")] if args.set else []
    trace = propagation.power_domination_trace(g, vertices)
    payload = trace.to_json()
    payload["n"] = g.n
    payload["power_dominating"] = trace.final == g.full_mask
    _emit(payload)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdpoly",
        description="Exact power domination, zero forcing, and domination polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--in", dest="infile", required=True,
                       help="input file, or - for stdin")
        p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")

    p = sub.add_parser("compute", help="counting polynomials of one graph")
    add_input(p)
    p.add_argument("--method", choices=["auto", "lattice", "plain", "formula"], default="auto")
    p.add_argument("--which", choices=["pd", "zf", "dom", "all"], default="pd")
    p.add_argument("--max-n", type=int, default=None, help="override the counting cap")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("tail", help="top coefficients via complement sets")
    add_input(p)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(fn=_cmd_tail)

    p = sub.add_parser("roots", help="root report with classification and bounds")
    add_input(p)
    p.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("threshold", help="threshold-graph polynomial from a binary string")
    p.add_argument("--bits", required=True)
    p.set_defaults(fn=_cmd_threshold)

    p = sub.add_parser("forts", help="fort list, fort neighborhoods, bound check")
    add_input(p)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--ip-bound", action="store_true")
    p.set_defaults(fn=_cmd_forts)

    p = sub.add_parser("decompose", help="formula-based polynomial of a composition")
    p.add_argument("--op", required=True,
                   choices=["union", "join", "corona", "dominating-vertex", "identify"])
    p.add_argument("--g1", help="first factor (host for identify)")
    p.add_argument("--g2", help="second factor")
    p.add_argument("--gadget", action="append",
                   help="identify gadget as FILE@VERTEX, repeatable")
    p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=None,
                   help="cross-check against enumeration (default: on up to order 12)")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("catalog", help="batch audits over a graph6 catalog file")
    add_input(p)
    p.add_argument("--audit", required=True,
                   choices=["unimodality", "uniqueness", "roots", "suite"])
    p.add_argument("--complete", action="store_true",
                   help="assert the file is a complete non-isomorphic catalog")
    p.add_argument("--csv", help="also write per-graph rows to this CSV file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--results", help="append-only results file for resumable runs")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--max-n", type=int, default=10,
                   help="skip per-graph suite batteries above this order")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("gen", help="emit a named family member as graph6")
    p.add_argument("--family", required=True, choices=sorted(graphs._FAMILIES))
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("trace", help="domination and forcing trace for one set")
    add_input(p)
    p.add_argument("--set", default="", help="comma-separated vertices")
    p.set_defaults(fn=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TooLarge as exc:
        print(f"pdpoly: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NumericFailure as exc:
        print(f"pdpoly: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (PdpolyError, OSError, ValueError) as exc:
        print(f"pdpoly: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
