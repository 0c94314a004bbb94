"""Formula-based polynomials: named families, decomposition rules, and the
structural conditions under which the power domination polynomial collapses
to the zero forcing or domination polynomial.

Division by x inside the join and dominating-vertex formulas is an index
shift on a polynomial with zero constant term, never rational arithmetic,
so every result stays in the integer polynomial ring.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ArityError, FamilyDomainError, HypothesisNotMet, InvalidVertex
from .graphs import (
    Graph,
    _bits,
    complete,
    connected_components,
    corona,
    structure_report,
)
from .counting import pd_polynomial
from .polynomial import IntPolynomial, binomial_minus_one
from .propagation import is_power_dominating


def _shift_down(p: IntPolynomial) -> IntPolynomial:
    if p.coeff(0) != 0:
        raise ValueError("cannot divide by x: nonzero constant term")
    return IntPolynomial(p.coeffs[1:])


def _isolate_count_for_formula(g: Graph) -> int:
    # the one-vertex graph counts as zero isolates in the join formulas
    if g.n == 1:
        return 0
    return sum(1 for v in range(g.n) if not g.adj[v])


def formula_family(name: str, *params) -> IntPolynomial:
    """Closed-form polynomial for a named family.

    complete, path, cycle, and wheel all give (x+1)^n - 1; empty gives x^n;
    star gives x(x+1)^(n-1) + x^(n-1) + (n-1)x^(n-2); corona_complete(h, k)
    gives ((x+1)^(k+1) - 1)^n(h) for k > 1 and falls back to enumeration for
    the open k = 1 case.
    """
    if name in ("complete", "path", "cycle", "wheel"):
        (n,) = params
        minimum = {"complete": 1, "path": 1, "cycle": 3, "wheel": 4}[name]
        if n < minimum:
            raise FamilyDomainError(f"{name} requires n >= {minimum}")
        return binomial_minus_one(n)
    if name == "empty":
        (n,) = params
        if n < 1:
            raise FamilyDomainError("empty requires n >= 1")
        return IntPolynomial.monomial(n)
    if name == "star":
        (n,) = params
        if n < 3:
            raise FamilyDomainError("star requires n >= 3")
        poly = binomial_minus_one(n - 1) + IntPolynomial.one()  # (x+1)^(n-1)
        poly = poly.shift(1)
        poly += IntPolynomial.monomial(n - 1)
        poly += IntPolynomial.monomial(n - 2, n - 1)
        return poly
    if name == "corona_complete":
        h, k = params
        if not isinstance(h, Graph):
            raise FamilyDomainError("corona_complete takes (Graph, k)")
        if k < 1:
            raise FamilyDomainError("corona_complete requires k >= 1")
        if k == 1:
            return pd_polynomial(corona(h, complete(1)))
        return binomial_minus_one(k + 1) ** h.n
    raise FamilyDomainError(f"no closed form for family {name!r}")


def disjoint_union_poly(p1: IntPolynomial, p2: IntPolynomial) -> IntPolynomial:
    """Product rule for disjoint unions.

    Appending k isolates is the special case of multiplying by x^k. Inputs
    must have zero constant term (every counting polynomial does).
    """
    if p1.coeff(0) or p2.coeff(0):
        raise ValueError("counting polynomials have zero constant term")
    return p1 * p2


def join_poly(g1: Graph, g2: Graph) -> IntPolynomial:
    """Polynomial of the join of g1 and g2 from the two factors.

    Any set meeting both sides power dominates the join, which contributes
    the product of (x+1)^n - 1 terms; sets inside one side contribute that
    side's polynomial, plus a shifted copy per isolate (an isolate can be
    dropped from the set and forced last from across the join).
    """
    p1 = pd_polynomial(g1)
    p2 = pd_polynomial(g2)
    i1 = _isolate_count_for_formula(g1)
    i2 = _isolate_count_for_formula(g2)
    out = p1 + _shift_down(p1).scale(i1)
    out += p2 + _shift_down(p2).scale(i2)
    out += binomial_minus_one(g1.n) * binomial_minus_one(g2.n)
    if out.coeff(0) != 0:
        raise AssertionError("join formula produced a constant term")
    return out


def dominating_vertex_poly(g: Graph) -> IntPolynomial:
    """Polynomial after adding one vertex adjacent to everything."""
    p = pd_polynomial(g)
    i = _isolate_count_for_formula(g)
    shifted = (binomial_minus_one(g.n) + IntPolynomial.one()).shift(1)  # x(x+1)^n
    out = p + _shift_down(p).scale(i) + shifted
    if out.coeff(0) != 0:
        raise AssertionError("dominating-vertex formula produced a constant term")
    return out


def _is_path_graph(g: Graph) -> bool:
    if len(connected_components(g)) != 1:
        return False
    degs = g.degrees()
    if g.n == 1:
        return True
    return max(degs) <= 2 and sum(1 for d in degs if d == 1) == 2


def _is_path_endpoint(g: Graph, v: int) -> bool:
    return g.degree(v) == (1 if g.n > 1 else 0)


def identification_poly(h: Graph, gadgets: Sequence[tuple[Graph, int]]) -> IntPolynomial:
    """Product formula for a graph built by merging one gadget vertex onto
    each vertex of a host graph.

    Every gadget must be power dominated by each of its single vertices, and
    a path gadget must not be attached at an endpoint; both hypotheses are
    checked rather than trusted, because the formula silently produces
    plausible wrong answers otherwise.
    """
    if len(gadgets) != h.n:
        raise ArityError(f"expected {h.n} gadgets, got {len(gadgets)}")
    out = IntPolynomial.one()
    for idx, (g, u) in enumerate(gadgets):
        if not 0 <= u < g.n:
            raise InvalidVertex(f"gadget {idx} has no vertex {u}")
        for v in range(g.n):
            if not is_power_dominating(g, 1 << v):
                raise HypothesisNotMet(
                    f"gadget {idx}: vertex {v} alone does not power dominate it"
                )
        if _is_path_graph(g) and _is_path_endpoint(g, u):
            raise HypothesisNotMet(
                f"gadget {idx} is a path attached at an endpoint"
            )
        out *= binomial_minus_one(g.n)
    return out


def zf_equals_pd_condition(g: Graph) -> bool:
    """Zero forcing and power domination polynomials agree exactly when every
    component has at most two vertices."""
    return all(c.bit_count() <= 2 for c in connected_components(g))


def dom_equals_pd_condition(g: Graph) -> bool:
    """Domination and power domination polynomials agree exactly when every
    non-isolate has a neighbor whose closed neighborhood it covers."""
    for u in range(g.n):
        nb = g.adj[u]
        if not nb:
            continue
        closed_u = nb | (1 << u)
        if not any((g.adj[v] | (1 << v)) & ~closed_u == 0 for v in _bits(nb)):
            return False
    return True


def recognize_named_family(g: Graph):
    """Structural match against the closed-form families; None if no match.

    Used by the command line's formula method so a raw input graph can be
    routed to a closed form when one applies.
    """
    n = g.n
    degs = sorted(g.degrees())
    m = g.m
    if m == 0:
        return ("empty", (n,))
    if m == n * (n - 1) // 2:
        return ("complete", (n,))
    report = structure_report(g)
    connected = len(report.components) == 1
    if connected and degs[-1] <= 2:
        if degs[0] == 1:
            return ("path", (n,))
        if n >= 3 and degs[0] == 2:
            return ("cycle", (n,))
    if connected and n >= 3 and degs == [1] * (n - 1) + [n - 1]:
        return ("star", (n,))
    if connected and n >= 5 and degs == [3] * (n - 1) + [n - 1]:
        hub = max(range(n), key=g.degree)
        rim = [v for v in range(n) if v != hub]
        if all(len([u for u in _bits(g.adj[v]) if u != hub]) == 2 for v in rim):
            # rim must be one cycle, not several
            seen = {rim[0]}
            cur, prev = rim[0], None
            while True:
                nxts = [u for u in _bits(g.adj[cur]) if u != hub and u != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                if cur in seen:
                    break
                seen.add(cur)
            if len(seen) == n - 1:
                return ("wheel", (n,))
    return None
