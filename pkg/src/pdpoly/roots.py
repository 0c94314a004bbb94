"""Root analysis for power domination polynomials.

The zero root is factored out exactly (its multiplicity is the power
domination number), integer roots are found by exact divisor tests, and the
rest of the polynomial is split into square-free factors with exact rational
arithmetic before any floating point touches it. Repeated roots therefore
come out at full double precision instead of the eps^(1/multiplicity) blur a
direct iteration would produce. The numeric stage is a simultaneous Aberth
iteration per square-free factor.

Structural classification (empty graph, matching-plus-isolates, gadget-core
family) is authoritative for distinct-root counts; the numerics cross-check
it. The gadget-core family consists of graphs built from a connected core by
attaching to each core vertex a private pair of vertices, optionally
adjacent to each other; recognition is an exact-cover search over candidate
pairs.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import comb, ceil
from typing import Sequence

from .errors import DomainError, NumericFailure
from .counting import pd_polynomial
from .graphs import Graph, _bits, connected_components, induced_subgraph, vertices_of
from .polynomial import IntPolynomial
from .propagation import subsets_of_size


# rational polynomial helpers (coefficient lists, low to high)


def _fr_trim(c: list[Fraction]) -> list[Fraction]:
    while c and not c[-1]:
        c.pop()
    return c


def _fr_deriv(c: Sequence[Fraction]) -> list[Fraction]:
    return _fr_trim([i * c[i] for i in range(1, len(c))])


def _fr_monic(c: Sequence[Fraction]) -> list[Fraction]:
    lead = c[-1]
    return [x / lead for x in c]


def _fr_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return quot, _fr_trim(rem)


def _fr_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _fr_trim(out)


def _fr_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    _fr_trim(a)
    _fr_trim(b)
    while b:
        _, r = _fr_divmod(a, b)
        a, b = b, r
    return _fr_monic(a) if a else a


def _squarefree_factors(q: IntPolynomial) -> list[tuple[list[Fraction], int]]:
    """Yun decomposition: pairwise-coprime square-free factors with their
    multiplicities, product over factor^multiplicity recovering q up to the
    leading coefficient."""
    f = _fr_monic([Fraction(c) for c in q.coeffs])
    df = _fr_deriv(f)
    g = _fr_gcd(f, df)
    if len(g) <= 1:
        return [(f, 1)]
    c1, _ = _fr_divmod(f, g)
    t, _ = _fr_divmod(df, g)
    d1 = _fr_sub(t, _fr_deriv(c1))
    out: list[tuple[list[Fraction], int]] = []
    i = 1
    while len(c1) > 1:
        a = _fr_gcd(c1, d1)
        c2, _ = _fr_divmod(c1, a)
        t, _ = _fr_divmod(d1, a)
        d1 = _fr_sub(t, _fr_deriv(c2))
        if len(a) > 1:
            out.append((a, i))
        c1 = c2
        i += 1
    return out


# numeric stage


def _horner(cs: Sequence[complex], z: complex) -> complex:
    acc = 0j
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _horner_with_noise(cs: Sequence[complex], z: complex) -> tuple[complex, float]:
    """Evaluation plus a running bound on its own roundoff, so a residual at
    the noise floor counts as an exact zero."""
    acc = 0j
    err = 0.0
    az = abs(z)
    for c in reversed(cs):
        acc = acc * z + c
        err = err * az + abs(acc)
    return acc, err * 1e-15


def _aberth(coeffs: Sequence[float], tol: float, max_iter: int = 1000) -> list[complex]:
    """Simultaneous root iteration on a square-free polynomial.

    Coefficients are scaled to unit max-norm first; a root is converged when
    its correction drops below tol relative to its magnitude, or when the
    residual cannot be distinguished from evaluation roundoff.
    """
    d = len(coeffs) - 1
    if d == 1:
        return [complex(-coeffs[0] / coeffs[1])]
    scale = max(abs(c) for c in coeffs)
    cs = [c / scale for c in coeffs]
    dcs = [i * cs[i] for i in range(1, d + 1)]
    lead = abs(cs[-1])
    # Fujiwara root bound; the plain Cauchy bound can be astronomically loose
    # and overflow the very first evaluations
    radius = 2.0 * max(
        (abs(cs[d - k]) / lead) ** (1.0 / k) for k in range(1, d + 1)
    )
    radius = max(radius, 1e-6)
    z = [radius * cmath.exp(2j * cmath.pi * (k + 0.354) / d) for k in range(d)]
    for _ in range(max_iter):
        done = True
        for k in range(d):
            pz, noise = _horner_with_noise(cs, z[k])
            if pz != pz or abs(pz) == float("inf"):  # NaN or overflow
                z[k] *= 0.5
                done = False
                continue
            if abs(pz) <= noise:
                continue
            dpz = _horner(dcs, z[k])
            if dpz == 0:
                z[k] *= 1.0 + 1e-3
                done = False
                continue
            w = pz / dpz
            s = sum(1.0 / (z[k] - z[j]) for j in range(d) if j != k)
            denom = 1.0 - w * s
            if denom == 0:
                z[k] *= 1.0 + 1e-3
                done = False
                continue
            delta = w / denom
            z[k] -= delta
            if abs(delta) > tol * max(1.0, abs(z[k])):
                done = False
        if done:
            return z
    raise NumericFailure("root iteration did not converge", partial=z)


DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class RootReport:
    roots: tuple[tuple[complex, int], ...]  # (root, multiplicity)
    zero_multiplicity: int
    distinct_count: int
    residuals: tuple[float, ...]  # |p(root)| aligned with roots
    classification: str | None = None
    rouche_verdicts: tuple[dict, ...] = ()

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    def to_json(self) -> dict:
        return {
            "roots": [
                {
                    "root": [r.real, r.imag],
                    "multiplicity": m,
                    "residual": res,
                }
                for (r, m), res in zip(self.roots, self.residuals)
            ],
            "zero_multiplicity": self.zero_multiplicity,
            "distinct_count": self.distinct_count,
            "classification": self.classification,
            "rouche": list(self.rouche_verdicts),
        }


def _cluster_count(roots: list[complex], threshold: float) -> int:
    """Number of clusters under transitive closeness below the threshold."""
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < threshold:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(roots))})


def find_roots(p: IntPolynomial, tol: float = DEFAULT_TOL) -> RootReport:
    """All roots with multiplicities, numerically for the non-zero part.

    The x^m factor is removed exactly, the remainder is square-free
    decomposed exactly, and each square-free factor is solved numerically.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("root finding needs a nonzero polynomial of degree >= 1")
    m = p.low_index
    q = IntPolynomial(p.coeffs[m:])
    roots: list[tuple[complex, int]] = []
    if m:
        roots.append((0j, m))
    if q.degree >= 1:
        for factor, mult in _squarefree_factors(q):
            fl = [float(c) for c in factor]
            for r in _aberth(fl, tol):
                roots.append((r, mult))
    assert sum(mt for _, mt in roots) == p.degree
    cs = [float(c) for c in p.coeffs]
    residuals = tuple(abs(_horner(cs, r)) for r, _ in roots)
    distinct = _cluster_count([r for r, _ in roots], 1e3 * tol)
    return RootReport(tuple(roots), m, distinct, residuals)


def integer_roots(p: IntPolynomial) -> list[tuple[int, int]]:
    """Exact integer roots with multiplicities.

    After the x^m factor, candidates are the negated divisors of the lowest
    nonzero coefficient, tested by exact evaluation and removed by exact
    synthetic division. For monic integer polynomials with no positive
    roots, these are all rational roots.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every root")
    out: list[tuple[int, int]] = []
    m = p.low_index
    if m:
        out.append((0, m))
    coeffs = list(p.coeffs[m:])
    if len(coeffs) == 1:
        return out
    c0 = abs(coeffs[0])
    divisors = [d for d in range(1, c0 + 1) if c0 % d == 0]
    for d in divisors:
        r = -d
        while len(coeffs) > 1:
            # synthetic division by (x - r); exact remainder test
            acc = 0
            for c in reversed(coeffs):
                acc = acc * r + c
            if acc != 0:
                break
            quot = []
            carry = 0
            for c in reversed(coeffs[1:]):
                carry = carry * r + c
                quot.append(carry)
            # remainder recheck from the division identity
            coeffs = list(reversed(quot))
            if out and out[-1][0] == r:
                out[-1] = (r, out[-1][1] + 1)
            else:
                out.append((r, 1))
    return out


# structural recognition of the gadget-core family


@dataclass(frozen=True)
class FDecomposition:
    """Witness: core vertex mask plus one (owner, x, y) triple per core vertex."""

    core: int
    pairs: tuple[tuple[int, int, int], ...]


def _candidate_triples(g: Graph) -> list[tuple[int, int, int]]:
    """(owner, x, y) pairs that could be a core vertex's private gadget."""
    triples = []
    n = g.n
    deg = g.degrees()
    for x in range(n):
        if deg[x] == 1:
            v = g.adj[x].bit_length() - 1
            for y in _bits(g.adj[v]):
                if y > x and deg[y] == 1 and g.adj[y] == (1 << v):
                    triples.append((v, x, y))
        elif deg[x] == 2:
            for y in _bits(g.adj[x]):
                if y <= x or deg[y] != 2:
                    continue
                rest_x = g.adj[x] & ~(1 << y)
                rest_y = g.adj[y] & ~(1 << x)
                if rest_x == rest_y and rest_x.bit_count() == 1:
                    triples.append((rest_x.bit_length() - 1, x, y))
    return triples


def recognize_F(g: Graph) -> FDecomposition | None:
    """Decompose g into a connected core plus a private vertex pair per core
    vertex, or return None.

    Exact-cover search: each candidate triple covers its three vertices;
    a solution covers every vertex once and leaves a connected core.
    """
    n = g.n
    if n < 3 or n % 3:
        return None
    if len(connected_components(g)) != 1:
        return None
    triples = _candidate_triples(g)
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for idx, (v, x, y) in enumerate(triples):
        by_vertex[v].append(idx)
        by_vertex[x].append(idx)
        by_vertex[y].append(idx)
    masks = [(1 << v) | (1 << x) | (1 << y) for v, x, y in triples]
    full = g.full_mask
    chosen: list[int] = []

    def dfs(covered: int) -> FDecomposition | None:
        if covered == full:
            core = 0
            for idx in chosen:
                core |= 1 << triples[idx][0]
            sub, _ = induced_subgraph(g, core)
            if len(connected_components(sub)) == 1:
                return FDecomposition(core, tuple(triples[i] for i in chosen))
            return None
        # branch on the uncovered vertex with the fewest usable triples
        best_v, best_opts = -1, None
        m = full & ~covered
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            opts = [i for i in by_vertex[v] if not masks[i] & covered]
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    return None
        for idx in best_opts:
            chosen.append(idx)
            found = dfs(covered | masks[idx])
            if found is not None:
                return found
            chosen.pop()
        return None

    return dfs(0)


def recognize_F_bruteforce(g: Graph) -> bool:
    """Independent oracle: try every possible core directly from the
    definition. Used to validate the exact-cover recognizer."""
    n = g.n
    if n < 3 or n % 3:
        return False
    if len(connected_components(g)) != 1:
        return False
    for core in subsets_of_size(n, n // 3):
        sub_ok = True
        owners: dict[int, list[int]] = {}
        for v in range(n):
            if core >> v & 1:
                continue
            own = g.adj[v] & core
            if own.bit_count() != 1:
                sub_ok = False
                break
            other = g.adj[v] & ~core & ~(1 << v)
            if other.bit_count() > 1:
                sub_ok = False
                break
            owners.setdefault(own.bit_length() - 1, []).append(v)
        if not sub_ok:
            continue
        if set(owners) != set(vertices_of(core)):
            continue
        if any(len(vs) != 2 for vs in owners.values()):
            continue
        ok = True
        for x, y in owners.values():
            ox = g.adj[x] & ~core & ~(1 << x)
            oy = g.adj[y] & ~core & ~(1 << y)
            if ox and ox != 1 << y:
                ok = False
                break
            if oy and oy != 1 << x:
                ok = False
                break
        if not ok:
            continue
        sub, _ = induced_subgraph(g, core)
        if len(connected_components(sub)) == 1:
            return True
    return False


def is_k33(g: Graph) -> bool:
    """The complete bipartite graph on 3+3 vertices, recognized structurally:
    it is the only connected triangle-free 3-regular graph on 6 vertices."""
    if g.n != 6 or any(d != 3 for d in g.degrees()):
        return False
    if len(connected_components(g)) != 1:
        return False
    return all(not g.adj[u] & g.adj[v] for u, v in g.edges())


def classify_by_distinct_roots(g: Graph) -> dict:
    """Structural class predicting the number of distinct roots.

    empty_graph (one root), p2_union (roots 0 and -2), F_union (roots 0 and
    the conjugate pair (-3 +- sqrt(3) i)/2), or other (at least four).
    """
    comps = connected_components(g)
    sizes = [c.bit_count() for c in comps]
    if g.m == 0:
        return {"class": "empty_graph", "witness": {"isolates": g.n}}
    if max(sizes) <= 2:
        k = sum(1 for s in sizes if s == 2)
        r = sum(1 for s in sizes if s == 1)
        return {"class": "p2_union", "witness": {"k2_components": k, "isolates": r}}
    decomps = []
    plausible = True
    for comp in comps:
        size = comp.bit_count()
        if size == 1:
            continue
        if size == 2 or size % 3:
            plausible = False
            break
        sub, labels = induced_subgraph(g, comp)
        found = recognize_F(sub)
        if found is None:
            plausible = False
            break
        decomps.append({
            "component": list(labels),
            "core": [labels[v] for v in vertices_of(found.core)],
        })
    if plausible and decomps:
        return {"class": "F_union", "witness": {"components": decomps}}
    return {"class": "other", "witness": None}


# Rouche-style root exclusion bounds


def _f_from_poly(p: IntPolynomial, a) -> float:
    af = Fraction(a)
    if af <= 0:
        raise DomainError("the bound needs a positive real part")
    n = p.degree
    num = sum(p.coeff(i) * af**i for i in range(1, n + 1))
    den = sum(
        p.coeff(k) * comb(k, i) * af ** (k - i)
        for i in range(1, n + 1)
        for k in range(i, n + 1)
    )
    if den == 0:
        raise DomainError("degenerate polynomial for the bound")
    return float(num / den)


def rouche_bound_graph(g: Graph, a) -> float:
    """Graph-specific radius bound evaluated with exact integer sums and one
    final float division."""
    return _f_from_poly(pd_polynomial(g), a)


def rouche_bound_universal(n: int, a) -> float:
    """Graph-independent version of the radius bound for connected graphs,
    using the worst-case coefficient profile for order n."""
    af = Fraction(a)
    if af <= 0:
        raise DomainError("the bound needs a positive real part")
    if n < 3:
        raise DomainError("the universal bound applies from order 3")
    t = ceil(n / 3)
    num = sum(comb(n - t, i - t) * af**i for i in range(t, n + 1))
    den = sum(
        comb(n, k) * comb(k, i) * af ** (k - i)
        for i in range(1, n + 1)
        for k in range(i, n + 1)
    )
    return float(num / den)


def _rouche_verdicts(g: Graph, poly: IntPolynomial, report: RootReport,
                     slack: float = 1e-6) -> tuple[dict, ...]:
    n = g.n
    connected = len(connected_components(g)) == 1
    verdicts = []
    for root, mult in report.roots:
        a, b = root.real, root.imag
        if a <= 0:
            continue
        fg = _f_from_poly(poly, Fraction(a))
        theorem_bound = min(fg, fg ** (1.0 / n))
        entry = {
            "root": [a, b],
            "multiplicity": mult,
            "f_graph": fg,
            "theorem_bound": theorem_bound,
            "theorem_holds": abs(b) >= theorem_bound - slack,
        }
        if connected and n >= 3:
            fu = rouche_bound_universal(n, Fraction(a))
            entry["f_universal"] = fu
            entry["corollary_bound"] = min(fu, fu**n)
            entry["corollary_holds"] = abs(b) > min(fu, fu**n) - slack
        verdicts.append(entry)
    return tuple(verdicts)


def analyze_graph(g: Graph, tol: float = DEFAULT_TOL) -> RootReport:
    """Full report for a graph: numeric roots, structural classification,
    and the per-root bound verdicts for roots with positive real part."""
    poly = pd_polynomial(g)
    base = find_roots(poly, tol)
    cls = classify_by_distinct_roots(g)["class"]
    verdicts = _rouche_verdicts(g, poly, base)
    return RootReport(
        base.roots,
        base.zero_multiplicity,
        base.distinct_count,
        base.residuals,
        cls,
        verdicts,
    )
