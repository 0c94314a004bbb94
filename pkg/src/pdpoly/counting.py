"""Exact set counting by subset enumeration.

The lattice engine exploits the fact that the three predicates (power
dominating, zero forcing, dominating) are closed under supersets: subsets
are visited in increasing popcount order with one status bit each, so a set
whose child S minus {v} already holds is resolved by a lookup instead of a
simulation. The plain engine simulates every subset independently and exists
as the cross-check.
"""

from __future__ import annotations

from .errors import TooLarge
from .graphs import Graph, _bits
from .polynomial import IntPolynomial
from .propagation import _closure_mask, closed_neighborhood, subsets_of_size

LATTICE_CAP = 26
PLAIN_CAP = 20


def _pd_predicate(g: Graph):
    adj, n, full = g.adj, g.n, g.full_mask
    closed = tuple(adj[v] | (1 << v) for v in range(n))

    def pred(s: int) -> bool:
        hood = s
        m = s
        while m:
            b = m & -m
            hood |= closed[b.bit_length() - 1]
            m ^= b
        return _closure_mask(adj, n, full, hood) == full

    return pred


def _zf_predicate(g: Graph):
    adj, n, full = g.adj, g.n, g.full_mask

    def pred(s: int) -> bool:
        return _closure_mask(adj, n, full, s) == full

    return pred


def _dom_predicate(g: Graph):
    full = g.full_mask

    def pred(s: int) -> bool:
        return closed_neighborhood(g, s) == full

    return pred


_PREDICATES = {"pd": _pd_predicate, "zf": _zf_predicate, "dom": _dom_predicate}


def _status_table(g: Graph, which: str) -> tuple[bytearray, list[int]]:
    """One status bit per subset plus the per-size counts.

    Layer k reads only resolved layer k-1 entries, so the visit order never
    races even if layers were farmed out to workers.
    """
    n = g.n
    pred = _PREDICATES[which](g)
    status = bytearray(((1 << n) + 7) >> 3)
    counts = [0] * (n + 1)
    for k in range(1, n + 1):
        for s in subsets_of_size(n, k):
            m = s
            hit = False
            while m:
                b = m & -m
                child = s ^ b
                if status[child >> 3] >> (child & 7) & 1:
                    hit = True
                    break
                m ^= b
            if hit or pred(s):
                status[s >> 3] |= 1 << (s & 7)
                counts[k] += 1
    return status, counts


def _plain_counts(g: Graph, which: str) -> list[int]:
    n = g.n
    pred = _PREDICATES[which](g)
    counts = [0] * (n + 1)
    for s in range(1, 1 << n):
        if pred(s):
            counts[s.bit_count()] += 1
    return counts


def _enforce_cap(n: int, method: str, max_n: int | None):
    cap = max_n if max_n is not None else (PLAIN_CAP if method == "plain" else LATTICE_CAP)
    if n > cap:
        raise TooLarge(f"order {n} exceeds the {method} counting cap {cap}")


def _counting_polynomial(g: Graph, which: str, method: str, max_n: int | None) -> IntPolynomial:
    if method not in ("auto", "lattice", "plain"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "lattice"
    _enforce_cap(g.n, method, max_n)
    if method == "plain":
        counts = _plain_counts(g, which)
    else:
        counts = _status_table(g, which)[1]
    return IntPolynomial(counts)


def pd_polynomial(g: Graph, method: str = "auto", max_n: int | None = None) -> IntPolynomial:
    """Polynomial whose x^i coefficient counts the power dominating sets of size i."""
    return _counting_polynomial(g, "pd", method, max_n)


def zf_polynomial(g: Graph, method: str = "auto", max_n: int | None = None) -> IntPolynomial:
    """Counting polynomial of zero forcing sets by size."""
    return _counting_polynomial(g, "zf", method, max_n)


def dom_polynomial(g: Graph, method: str = "auto", max_n: int | None = None) -> IntPolynomial:
    """Counting polynomial of dominating sets by size."""
    return _counting_polynomial(g, "dom", method, max_n)


def pd_set_count(g: Graph, max_n: int | None = None) -> int:
    """Total number of distinct power dominating sets."""
    return pd_polynomial(g, max_n=max_n).eval_int(1)


def _excluded_set_works(g: Graph, s: int) -> bool:
    """Whether the complement of s power dominates, tested inside g[s].

    The complement colors everything outside s plus its neighbors in one
    domination step, so it power dominates exactly when the dominated part
    of s forces the rest within the induced subgraph on s.
    """
    adj = g.adj
    outside = g.full_mask & ~s
    seeds = 0
    for v in _bits(outside):
        seeds |= adj[v]
    seeds &= s
    sub_adj = tuple(adj[v] & s if s >> v & 1 else 0 for v in range(g.n))
    return _closure_mask(sub_adj, g.n, s, seeds) == s


def pd_tail_coefficients(g: Graph, kmax: int) -> list[tuple[int, int]]:
    """Top coefficients (n-k, count) for k = 0..kmax via complement sets.

    Only the k-subsets are enumerated, so small k stays cheap even when the
    full polynomial is out of reach.
    """
    n = g.n
    if not 0 <= kmax <= n - 1:
        raise ValueError("kmax must lie in [0, n-1]")
    out = []
    for k in range(kmax + 1):
        count = sum(1 for s in subsets_of_size(n, k) if _excluded_set_works(g, s))
        out.append((n - k, count))
    return out
