"""Color-change semantics: domination step, forcing closure, set predicates,
parameter search, and fort machinery.

Two rules drive everything here. The domination step colors the closed
neighborhood of the chosen set. A forcing step lets a colored vertex with
exactly one uncolored neighbor color that neighbor. A power dominating set
colors everything after one domination step and exhaustive forcing; a zero
forcing set does it by forcing alone; a dominating set by domination alone.
The forcing closure is confluent, so every force order reaches the same
fixed point and the recorded order is just one witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import TooLarge
from .graphs import Graph, _bits, as_mask, vertices_of

FORT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class PropagationTrace:
    """Record of one run: initial set, domination result, ordered forces.

    after_domination is None when the run was a pure forcing closure with no
    domination step.
    """

    initial: int
    after_domination: int | None
    forces: tuple[tuple[int, int], ...]
    final: int

    def to_json(self) -> dict:
        return {
            "initial": list(vertices_of(self.initial)),
            "after_domination": None
            if self.after_domination is None
            else list(vertices_of(self.after_domination)),
            "forces": [[u, v] for u, v in self.forces],
            "final": list(vertices_of(self.final)),
        }


def closed_neighborhood(g: Graph, s) -> int:
    """N[S] as a mask; the empty set maps to the empty set."""
    mask = as_mask(g, s)
    out = mask
    for v in _bits(mask):
        out |= g.adj[v]
    return out


def _closure_mask(adj: tuple[int, ...], n: int, full: int, colored: int) -> int:
    """Fixed point of the forcing rule, no trace. Hot path of the counters."""
    if colored == full:
        return colored
    # worklist of colored vertices that currently have one uncolored neighbor
    stack = []
    m = colored
    while m:
        b = m & -m
        v = b.bit_length() - 1
        m ^= b
        unc = adj[v] & ~colored
        if unc and not unc & (unc - 1):
            stack.append(v)
    while stack:
        v = stack.pop()
        unc = adj[v] & ~colored
        if not unc or unc & (unc - 1):
            continue  # stale entry
        colored |= unc
        if colored == full:
            return colored
        u = unc.bit_length() - 1
        unc_u = adj[u] & ~colored
        if unc_u and not unc_u & (unc_u - 1):
            stack.append(u)
        # coloring u may have dropped a colored neighbor to one uncolored
        m = adj[u] & colored
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            unc_w = adj[w] & ~colored
            if unc_w and not unc_w & (unc_w - 1):
                stack.append(w)
    return colored


def forcing_closure(g: Graph, colored, rng=None) -> tuple[int, PropagationTrace]:
    """Run the forcing rule to its fixed point and record one force order.

    rng, when given, randomizes which eligible force fires next; the final
    set does not depend on it.
    """
    start = as_mask(g, colored)
    adj, full = g.adj, g.full_mask
    cur = start
    forces: list[tuple[int, int]] = []
    while cur != full:
        eligible = []
        m = cur
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            unc = adj[v] & ~cur
            if unc and not unc & (unc - 1):
                eligible.append((v, unc.bit_length() - 1))
        if not eligible:
            break
        pick = eligible[0] if rng is None else eligible[rng.randrange(len(eligible))]
        forces.append(pick)
        cur |= 1 << pick[1]
    trace = PropagationTrace(start, None, tuple(forces), cur)
    return cur, trace


def power_domination_trace(g: Graph, s) -> PropagationTrace:
    """Full run: domination step on s, then exhaustive forcing."""
    start = as_mask(g, s)
    dominated = closed_neighborhood(g, start)
    final, ftrace = forcing_closure(g, dominated)
    return PropagationTrace(start, dominated, ftrace.forces, final)


def is_power_dominating(g: Graph, s) -> bool:
    mask = as_mask(g, s)
    if mask == 0:
        return False
    full = g.full_mask
    return _closure_mask(g.adj, g.n, full, closed_neighborhood(g, mask)) == full


def is_zero_forcing(g: Graph, s) -> bool:
    mask = as_mask(g, s)
    if mask == 0:
        return False
    full = g.full_mask
    return _closure_mask(g.adj, g.n, full, mask) == full


def is_dominating(g: Graph, s) -> bool:
    mask = as_mask(g, s)
    if mask == 0:
        return False
    return closed_neighborhood(g, mask) == g.full_mask


def _min_size(g: Graph, pred) -> int:
    # increasing-size search with early exit; the predicates are
    # superset-closed, so the first witness size is the parameter
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if pred(g, mask):
                return size
    raise AssertionError("the full vertex set always satisfies the predicate")


def gamma_p(g: Graph) -> int:
    """Minimum size of a power dominating set."""
    return _min_size(g, is_power_dominating)


def zero_forcing_number(g: Graph) -> int:
    return _min_size(g, is_zero_forcing)


def domination_number(g: Graph) -> int:
    return _min_size(g, is_dominating)


# forts: a nonempty vertex set F is a fort when no outside vertex has exactly
# one neighbor inside F; their closed neighborhoods N[F] are exactly the sets
# every power dominating set must hit


def is_fort(g: Graph, f) -> bool:
    mask = as_mask(g, f)
    if mask == 0:
        return False
    outside = g.full_mask & ~mask
    for v in _bits(outside):
        inside = g.adj[v] & mask
        if inside and not inside & (inside - 1):
            return False
    return True


def _check_cap(g: Graph, max_n: int | None):
    cap = FORT_ENUMERATION_CAP if max_n is None else max_n
    if g.n > cap:
        raise TooLarge(f"order {g.n} exceeds the fort enumeration cap {cap}")


def enumerate_forts(g: Graph, minimal_only: bool = False, max_n: int | None = None) -> list[int]:
    """All forts (or the inclusion-minimal ones) by exhaustive subset scan."""
    _check_cap(g, max_n)
    forts = [f for f in range(1, 1 << g.n) if is_fort(g, f)]
    if not minimal_only:
        return forts
    forts.sort(key=int.bit_count)
    minimal: list[int] = []
    for f in forts:
        if not any(f & m == m for m in minimal):
            minimal.append(f)
    return minimal


def fort_neighborhood_family(g: Graph, max_n: int | None = None) -> set[int]:
    """Deduplicated closed neighborhoods N[F] over all forts F.

    Built from every fort, matching the family's definition. Minimal forts
    alone would give an equivalent covering test, since a fort contained in
    another has its closed neighborhood contained too, but the full family
    is the defined object and the dedup keeps it small anyway.
    """
    _check_cap(g, max_n)
    return {closed_neighborhood(g, f) for f in enumerate_forts(g, max_n=max_n)}


def is_pds_via_forts(g: Graph, s, max_n: int | None = None) -> bool:
    """Power domination test through the fort covers: s must hit every N[F]."""
    mask = as_mask(g, s)
    family = fort_neighborhood_family(g, max_n=max_n)
    return all(mask & hood for hood in family)


def check_ip_bound(g: Graph, max_n: int | None = None) -> dict:
    """Exact both sides of |{N[F]}| <= 2^n - (number of power dominating sets)."""
    from .counting import pd_set_count

    lhs = len(fort_neighborhood_family(g, max_n=max_n))
    rhs = (1 << g.n) - pd_set_count(g)
    return {"lhs": lhs, "rhs": rhs, "holds": lhs <= rhs}


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of {0..n-1} as masks, ascending (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    top = 1 << n
    while s < top:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r
