"""Batch audits over graph collections.

Covers polynomial grouping and uniqueness detection over complete
non-isomorphic catalogs, the unimodality survey, the exhaustive labeled
property suite at small orders, and resumable catalog ingestion. The package
never tests isomorphism itself: uniqueness verdicts are only meaningful when
the input file is a complete catalog of pairwise non-isomorphic graphs of
each order, which the caller asserts with the `complete` flag. Polynomial
degree pins the order, so classes can only collide within one order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .errors import IncompleteCatalog, IngestError, TooLarge
from .closed_forms import dom_equals_pd_condition, zf_equals_pd_condition
from .counting import _status_table, pd_polynomial, pd_tail_coefficients
from .graphs import (
    Graph,
    complete,
    cycle,
    from_edge_list,
    from_graph6,
    path,
    structure_report,
    to_graph6,
)
from .polynomial import IntPolynomial, binomial_minus_one
from .propagation import fort_neighborhood_family
from .roots import classify_by_distinct_roots, find_roots, is_k33, recognize_F

LABELED_CAP = 7


@dataclass(frozen=True)
class CatalogEntry:
    key: str  # graph6
    n: int
    poly: IntPolynomial
    connected: bool
    isolate_count: int
    gamma_p: int
    unimodal: bool


@dataclass(frozen=True)
class IngestResult:
    entries: list[CatalogEntry]
    errors: list[tuple[int, str]]  # (1-based line number, message)


def _make_entry(key: str, g: Graph, poly: IntPolynomial) -> CatalogEntry:
    if poly.degree != g.n:
        raise IngestError(
            f"cached polynomial degree {poly.degree} does not match order {g.n}"
        )
    report = structure_report(g)
    return CatalogEntry(
        key=key,
        n=g.n,
        poly=poly,
        connected=len(report.components) == 1,
        isolate_count=report.isolate_count,
        gamma_p=poly.low_index,
        unimodal=poly.is_unimodal()[0],
    )


def _load_results(path: Path) -> dict[str, IntPolynomial]:
    cache: dict[str, IntPolynomial] = {}
    if not path.exists():
        return cache
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            cache[rec["g6"]] = IntPolynomial.from_strings(rec["coeffs"])
    return cache


def ingest(
    path,
    results_path=None,
    progress: Callable[[int, int], None] | None = None,
    max_n: int | None = None,
) -> IngestResult:
    """Read a graph6 catalog file and compute each entry's polynomial.

    Malformed lines are collected as per-line errors and the run continues;
    a file that yields nothing raises IngestError. results_path points to an
    append-only record of computed polynomials keyed by graph6 string, so an
    interrupted sweep resumes where it stopped.
    """
    path = Path(path)
    lines = path.read_text().splitlines()
    cache: dict[str, IntPolynomial] = {}
    sink = None
    if results_path is not None:
        results_path = Path(results_path)
        cache = _load_results(results_path)
        sink = results_path.open("a")
    entries: list[CatalogEntry] = []
    errors: list[tuple[int, str]] = []
    todo = [(i, ln.strip()) for i, ln in enumerate(lines, start=1) if ln.strip()]
    try:
        for done, (lineno, key) in enumerate(todo, start=1):
            try:
                g = from_graph6(key)
                poly = cache.get(key)
                if poly is None:
                    poly = pd_polynomial(g, max_n=max_n)
                    if sink is not None:
                        sink.write(json.dumps({"g6": key, "coeffs": poly.coeff_strings()}) + "\n")
                        sink.flush()
                entries.append(_make_entry(key, g, poly))
            except Exception as exc:  # per-line error policy
                errors.append((lineno, f"{type(exc).__name__}: {exc}"))
            if progress is not None:
                progress(done, len(todo))
    finally:
        if sink is not None:
            sink.close()
    if not entries:
        raise IngestError(f"no usable graphs in {path}")
    return IngestResult(entries, errors)


def generate_all_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, driven by an edge-mask counter."""
    if n > LABELED_CAP:
        raise TooLarge(f"labeled enumeration capped at n = {LABELED_CAP}")
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for t, (i, j) in enumerate(pairs):
            if mask >> t & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, adj)


def group_by_polynomial(entries: Iterable[CatalogEntry]) -> dict[IntPolynomial, list[str]]:
    groups: dict[IntPolynomial, list[str]] = {}
    for e in entries:
        groups.setdefault(e.poly, []).append(e.key)
    return groups


def uniqueness_report(entries: Sequence[CatalogEntry], complete: bool = False) -> dict:
    """Keys whose polynomial class is a singleton within their order.

    Without the completeness assertion the verdict is only relative to the
    file and is labeled accordingly.
    """
    groups = group_by_polynomial(entries)
    unique = sorted(keys[0] for keys in groups.values() if len(keys) == 1)
    return {
        "complete": complete,
        "verdict": "unique" if complete else "unique-within-file",
        "keys": unique,
        "class_count": len(groups),
    }


def unimodality_audit(entries: Sequence[CatalogEntry]) -> dict:
    """Report-only unimodality survey; a violation is data, not an error."""
    violations = [e.key for e in entries if not e.unimodal]
    return {"checked": len(entries), "violations": violations}


def nonuniqueness_families(n: int, verify_cap: int = 12) -> list[dict]:
    """Constructions of distinct graphs sharing one polynomial at order n.

    Three families: the cycle plus each of its chord variants, two cycles
    bridged by an edge versus the bridge removed, and path/cycle/complete.
    Each family is verified against enumeration when the order allows.
    """
    if n < 4:
        raise ValueError("constructions start at order 4")
    out = []

    def emit(name: str, graphs: list[Graph], expected: IntPolynomial):
        verified = None
        if n <= verify_cap:
            verified = all(pd_polynomial(g) == expected for g in graphs)
        out.append(
            {
                "name": name,
                "keys": [to_graph6(g) for g in graphs],
                "polynomial": expected.coeff_strings(),
                "verified": verified,
            }
        )

    chord_family = [cycle(n)]
    for d in range(2, n // 2 + 1):
        edges = [(i, (i + 1) % n) for i in range(n)] + [(0, d)]
        chord_family.append(from_edge_list(n, edges))
    emit("cycle-plus-chord", chord_family, binomial_minus_one(n))

    for a in range(3, n - 2):
        b = n - a
        if b < 3 or a > b:
            continue
        edges = [(i, (i + 1) % a) for i in range(a)]
        edges += [(a + i, a + (i + 1) % b) for i in range(b)]
        bridged = from_edge_list(n, edges + [(0, a)])
        unbridged = from_edge_list(n, edges)
        emit(
            f"bridged-cycles-{a}-{b}",
            [bridged, unbridged],
            binomial_minus_one(a) * binomial_minus_one(b),
        )

    emit("path-cycle-complete", [path(n), cycle(n), complete(n)], binomial_minus_one(n))
    return out


def k1_k2_uniqueness_check(entries: Sequence[CatalogEntry]) -> dict:
    """Uniqueness must survive appending one vertex or one edge component,
    and appending a triangle must always collide with appending a path.

    Needs complete catalogs at the orders involved; extensions whose order
    is absent from the input are skipped and counted.
    """
    by_order: dict[int, dict[IntPolynomial, list[str]]] = {}
    for e in entries:
        by_order.setdefault(e.n, {}).setdefault(e.poly, []).append(e.key)
    orders = sorted(by_order)
    if not any(n + k in by_order for n in orders for k in (1, 2, 3)):
        raise IncompleteCatalog("no order with its extension order present")
    p2 = IntPolynomial((0, 2, 1))
    k3 = binomial_minus_one(3)
    checked = {"k1": 0, "k2": 0, "k3_collision": 0}
    skipped = 0
    violations: list[dict] = []

    def class_size(n: int, poly: IntPolynomial) -> int | None:
        if n not in by_order:
            return None
        return len(by_order[n].get(poly, []))

    for n in orders:
        for poly, keys in by_order[n].items():
            if len(keys) != 1:
                continue
            for label, target_poly, dn, want_singleton in (
                ("k1", poly.shift(1), 1, True),
                ("k2", poly * p2, 2, True),
                ("k3_collision", poly * k3, 3, False),
            ):
                size = class_size(n + dn, target_poly)
                if size is None:
                    skipped += 1
                    continue
                checked[label] += 1
                ok = size == 1 if want_singleton else size >= 2
                if not ok:
                    violations.append(
                        {"key": keys[0], "order": n, "check": label, "class_size": size}
                    )
    return {"checked": checked, "skipped": skipped, "violations": violations}


# exhaustive labeled property suite


def _labeled_battery(g: Graph) -> list[str]:
    """Every invariant that quantifies over all labeled graphs, one graph at
    a time. Returns the names of violated properties (normally empty)."""
    bad: list[str] = []
    n = g.n
    size = 1 << n
    full = size - 1
    pd_status, pd_counts = _status_table(g, "pd")
    zf_status, zf_counts = _status_table(g, "zf")
    _, dom_counts = _status_table(g, "dom")

    def bit(table: bytearray, s: int) -> int:
        return table[s >> 3] >> (s & 7) & 1

    # closed neighborhoods of every subset, built incrementally
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    hood = [0] * size
    for s in range(1, size):
        low = s & -s
        hood[s] = hood[s ^ low] | closed[low.bit_length() - 1]

    if any(bit(pd_status, s) and not bit(pd_status, s | 1 << v)
           for s in range(size) for v in range(n)):
        bad.append("superset_closure")
    if any(bit(pd_status, s) != bit(zf_status, hood[s]) for s in range(size)):
        bad.append("dean_equivalence")

    hoods = sorted(fort_neighborhood_family(g))
    for s in range(size):
        via_forts = all(s & h for h in hoods)
        if via_forts != bool(bit(pd_status, s)):
            bad.append("fort_cover")
            break

    tails = pd_tail_coefficients(g, n - 1)
    if any(pd_counts[sz] != cnt for sz, cnt in tails):
        bad.append("tail_vs_direct")

    if any(zf_counts[i] > pd_counts[i] or dom_counts[i] > pd_counts[i]
           for i in range(n + 1)):
        bad.append("coefficient_dominance")

    rep = structure_report(g)
    iso = rep.isolate_count
    k2 = rep.k2_component_count
    if pd_counts[n] != 1:
        bad.append("top_coefficient")
    if n >= 2 and pd_counts[n - 1] != n - iso:
        bad.append("second_coefficient")
    if n >= 3 and pd_counts[n - 2] != comb(n, 2) - iso * (n - iso) - comb(iso, 2) - k2:
        bad.append("third_coefficient")

    if zf_equals_pd_condition(g) != (zf_counts == pd_counts):
        bad.append("zf_condition")
    if dom_equals_pd_condition(g) != (dom_counts == pd_counts):
        bad.append("dom_condition")

    if len(hoods) > size - sum(pd_counts):
        bad.append("ip_bound")

    for i in range(1, n + 1):
        if pd_counts[i] == comb(n, i):
            if any(pd_counts[j] != comb(n, j) for j in range(i, n + 1)):
                bad.append("all_sets_upward")
            break
    if any(pd_counts[i] > pd_counts[i + 1] for i in range(1, (n + 1) // 2)):
        bad.append("monotone_lower_half")

    # nonnegative coefficients and a zero constant term force strict growth
    # on the positive axis, so no positive point may evaluate to zero or less
    if any(
        sum(pd_counts[i] * Fraction(t) ** i for i in range(1, n + 1)) <= 0
        for t in (Fraction(1, 4), Fraction(1, 2), 1, 2)
    ):
        bad.append("positive_axis_values")
    return bad


def labeled_property_suite(
    max_n: int = 6,
    progress: Callable[[int, int], None] | None = None,
) -> dict:
    """Run the labeled battery over every graph of every order up to max_n."""
    checked = 0
    violations: dict[str, list[str]] = {}
    total = sum(1 << (n * (n - 1) // 2) for n in range(1, max_n + 1))
    for n in range(1, max_n + 1):
        for g in generate_all_labeled(n):
            key = to_graph6(g)
            for name in _labeled_battery(g):
                violations.setdefault(name, []).append(key)
            checked += 1
            if progress is not None and checked % 2048 == 0:
                progress(checked, total)
    return {"graphs_checked": checked, "violations": violations, "ok": not violations}


# catalog-level checks, shared by the acceptance suite and the CLI audit


def dichotomy_check(items: Sequence[tuple[str, Graph, IntPolynomial]]) -> list[dict]:
    """For connected graphs, indices where the zero forcing and power
    domination counts agree must sit at 0 or the full binomial."""
    violations = []
    for key, g, poly in items:
        if len(structure_report(g).components) != 1:
            continue
        zf = _status_table(g, "zf")[1]
        for i in range(1, g.n + 1):
            p = poly.coeff(i)
            if zf[i] == p and p not in (0, comb(g.n, i)):
                violations.append({"key": key, "index": i, "value": p})
    return violations


def zhao_check(items: Sequence[tuple[str, Graph, IntPolynomial]]) -> list[dict]:
    """Connected graphs of order at least 3 keep 3*gamma_p <= n, with
    equality exactly on the gadget-core family plus K33."""
    violations = []
    for key, g, poly in items:
        if g.n < 3 or len(structure_report(g).components) != 1:
            continue
        gp = poly.low_index
        if 3 * gp > g.n:
            violations.append({"key": key, "reason": "bound", "gamma_p": gp})
            continue
        if g.n % 3 == 0:
            extremal = 3 * gp == g.n
            structural = recognize_F(g) is not None or is_k33(g)
            if extremal != structural:
                violations.append({"key": key, "reason": "equality", "gamma_p": gp})
    return violations


_CLASS_EXPECTED = {"empty_graph": 1, "p2_union": 2, "F_union": 3}


def root_classification_check(items: Sequence[tuple[str, Graph, IntPolynomial]]) -> list[dict]:
    """Structural distinct-root class must match the numeric count."""
    violations = []
    for key, g, poly in items:
        cls = classify_by_distinct_roots(g)["class"]
        numeric = find_roots(poly).distinct_count
        want = _CLASS_EXPECTED.get(cls)
        ok = numeric == want if want is not None else numeric >= 4
        if not ok:
            violations.append({"key": key, "class": cls, "distinct": numeric})
    return violations


def rouche_check(
    items: Sequence[tuple[str, Graph, IntPolynomial]],
    a_values: Sequence[float] = (0.5, 1.0, 2.0),
    slack: float = 1e-6,
) -> dict:
    """Root-region verification: the graph bound holds at every root with
    positive real part, and the universal bound never exceeds the graph
    bound on connected graphs."""
    from .roots import _f_from_poly, rouche_bound_universal

    violations = []
    positive_roots = 0
    for key, g, poly in items:
        rep = find_roots(poly)
        for root, _ in rep.roots:
            a, b = root.real, root.imag
            if a <= 0:
                continue
            positive_roots += 1
            fg = _f_from_poly(poly, a)
            if abs(b) < min(fg, fg ** (1.0 / g.n)) - slack:
                violations.append({"key": key, "root": [a, b], "reason": "theorem"})
        if g.n >= 3 and len(structure_report(g).components) == 1:
            for a in a_values:
                if rouche_bound_universal(g.n, a) > _f_from_poly(poly, a) + 1e-12:
                    violations.append({"key": key, "a": a, "reason": "universal_vs_graph"})
    return {"positive_real_part_roots": positive_roots, "violations": violations}
