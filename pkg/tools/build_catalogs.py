#!/usr/bin/env python3
"""Build non-isomorphic graph catalogs (one graph6 file per order).

The package itself never tests isomorphism; its audits consume catalog files
of pairwise non-isomorphic graphs. This offline tool regenerates those files
by extending each catalog of order n-1 with one new vertex in every possible
way and deduplicating up to isomorphism (Weisfeiler-Leman invariant buckets,
then backtracking isomorphism inside each bucket). Output is validated
against the published class counts, which pins correctness: a false merge
or a false split at any order would change the count.

Usage: python tools/build_catalogs.py [--max-n 9] [--out tests/data/catalogs]
"""

from __future__ import annotations

import argparse
import gzip
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pdpoly.graphs import Graph, to_graph6  # noqa: E402

# number of graphs on n vertices up to isomorphism, n = 1..9
EXPECTED = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]


def wl_colors(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = []
        for v in range(n):
            nb = []
            m = adj[v]
            while m:
                b = m & -m
                nb.append(colors[b.bit_length() - 1])
                m ^= b
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def invariant(n: int, adj: tuple[int, ...], colors: tuple[int, ...]):
    hist = sorted(colors)
    epairs = []
    for v in range(n):
        m = adj[v] >> (v + 1) << (v + 1)
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            epairs.append((min(colors[v], colors[u]), max(colors[v], colors[u])))
    epairs.sort()
    return (n, tuple(hist), tuple(epairs))


def isomorphic(n, adj1, col1, adj2, col2) -> bool:
    if sorted(col1) != sorted(col2):
        return False
    cands = [[w for w in range(n) if col2[w] == col1[v]] for v in range(n)]
    order = sorted(range(n), key=lambda v: (len(cands[v]), -adj1[v].bit_count()))
    mapping = [-1] * n
    used = [False] * n

    def dfs(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = adj1[v]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (av >> u & 1) != (adj2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if dfs(i + 1):
                    return True
                used[w] = False
        return False

    return dfs(0)


def extend_order(prev: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    buckets: dict = {}
    reps: list[tuple[int, ...]] = []
    rep_colors: list[tuple[int, ...]] = []
    t0 = time.time()
    total = len(prev) << (n - 1)
    done = 0
    for padj in prev:
        for mask in range(1 << (n - 1)):
            adj = tuple(
                padj[v] | ((mask >> v & 1) << (n - 1)) for v in range(n - 1)
            ) + (mask,)
            colors = wl_colors(n, adj)
            key = invariant(n, adj, colors)
            idxs = buckets.get(key)
            if idxs is None:
                buckets[key] = [len(reps)]
                reps.append(adj)
                rep_colors.append(colors)
            else:
                for idx in idxs:
                    if isomorphic(n, adj, colors, reps[idx], rep_colors[idx]):
                        break
                else:
                    idxs.append(len(reps))
                    reps.append(adj)
                    rep_colors.append(colors)
            done += 1
            if done % 200000 == 0:
                rate = done / (time.time() - t0)
                print(
                    f"  n={n}: {done}/{total} candidates, {len(reps)} classes, "
                    f"{rate:.0f}/s",
                    flush=True,
                )
    return reps


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent
                                         / "tests" / "data" / "catalogs"))
    ap.add_argument("--gzip-from", type=int, default=9,
                    help="gzip-compress files from this order up")
    args = ap.parse_args()
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    reps: list[tuple[int, ...]] = [(0,)]  # the one-vertex graph
    for n in range(1, args.max_n + 1):
        if n > 1:
            t0 = time.time()
            reps = extend_order(reps, n)
            print(f"n={n}: {len(reps)} classes in {time.time() - t0:.1f}s", flush=True)
        if n - 1 < len(EXPECTED) and len(reps) != EXPECTED[n - 1]:
            print(f"FATAL: n={n} produced {len(reps)} classes, "
                  f"expected {EXPECTED[n - 1]}", file=sys.stderr)
            return 1
        lines = sorted(to_graph6(Graph(n, adj)) for adj in reps)
        payload = ("\n".join(lines) + "\n").encode()
        if n >= args.gzip_from:
            (outdir / f"graph{n}.g6.gz").write_bytes(gzip.compress(payload))
        else:
            (outdir / f"graph{n}.g6").write_bytes(payload)
        print(f"n={n}: wrote {len(lines)} graphs", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
