import math
import random
from fractions import Fraction

import pytest

from oracles import random_connected_graph, random_graph
from pdpoly.counting import pd_polynomial
from pdpoly.errors import DomainError
from pdpoly.graphs import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
    vertices_of,
)
from pdpoly.polynomial import IntPolynomial
from pdpoly.propagation import gamma_p
from pdpoly.roots import (
    FDecomposition,
    analyze_graph,
    classify_by_distinct_roots,
    find_roots,
    integer_roots,
    is_k33,
    recognize_F,
    recognize_F_bruteforce,
    rouche_bound_graph,
    rouche_bound_universal,
)

THREE_ROOTS = ((-3 + math.sqrt(3) * 1j) / 2, (-3 - math.sqrt(3) * 1j) / 2)


def _closest(root, targets):
    return min(abs(root - t) for t in targets)


def test_find_roots_k4():
    rep = find_roots(IntPolynomial((0, 4, 6, 4, 1)))
    assert rep.zero_multiplicity == 1
    assert rep.distinct_count == 4
    targets = [0, -2, -1 + 1j, -1 - 1j]
    for root, mult in rep.roots:
        assert mult == 1
        assert _closest(root, targets) < 1e-9
    assert max(rep.residuals) < 1e-9


def test_find_roots_triangle():
    rep = find_roots(IntPolynomial((0, 3, 3, 1)))
    assert rep.distinct_count == 3
    nonzero = [r for r, _ in rep.roots if abs(r) > 1e-12]
    for r in nonzero:
        assert _closest(r, THREE_ROOTS) < 1e-12


def test_find_roots_monomial():
    rep = find_roots(IntPolynomial.monomial(9))
    assert rep.distinct_count == 1
    assert rep.roots == ((0j, 9),)


def test_find_roots_repeated_factors_stay_sharp():
    # a k-fold complex pair must come back at full precision, not eps^(1/k)
    p = IntPolynomial((0, 3, 3, 1)) ** 6
    rep = find_roots(p)
    assert rep.distinct_count == 3
    for root, mult in rep.roots:
        if abs(root) > 1e-12:
            assert mult == 6
            assert _closest(root, THREE_ROOTS) < 1e-12


def test_find_roots_rejects_trivial():
    with pytest.raises(ValueError):
        find_roots(IntPolynomial())
    with pytest.raises(ValueError):
        find_roots(IntPolynomial((5,)))


def test_multiplicities_sum_to_degree_and_conjugate_pairs():
    rng = random.Random(314)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7))
        p = pd_polynomial(g)
        rep = find_roots(p)
        assert sum(m for _, m in rep.roots) == p.degree
        nonreal = [(r, m) for r, m in rep.roots if abs(r.imag) > 1e-8]
        for r, m in nonreal:
            partner = [s for s, sm in nonreal if abs(s - r.conjugate()) < 1e-7 and sm == m]
            assert partner, (p.coeffs, r)


def test_zero_multiplicity_is_gamma_p():
    rng = random.Random(27)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 6))
        assert find_roots(pd_polynomial(g)).zero_multiplicity == gamma_p(g)


def test_no_positive_real_values():
    rng = random.Random(363)
    points = (Fraction(1, 4), Fraction(1, 2), 1, 2)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        p = pd_polynomial(g)
        for t in points:
            assert sum(p.coeff(i) * t**i for i in range(p.degree + 1)) > 0


def test_integer_roots_examples():
    assert integer_roots(IntPolynomial((0, 2, 1))) == [(0, 1), (-2, 1)]
    assert integer_roots(IntPolynomial((0, 3, 3, 1))) == [(0, 1)]
    assert integer_roots(IntPolynomial((0, 0, 15, 20, 15, 6, 1))) == [(0, 2)]
    p = (IntPolynomial((0, 2, 1)) ** 3).shift(2)
    assert integer_roots(p) == [(0, 5), (-2, 3)]


def test_recognize_F_examples():
    w = recognize_F(path(3))
    assert isinstance(w, FDecomposition)
    assert vertices_of(w.core) == (1,)
    assert w.pairs == ((1, 0, 2),)

    w = recognize_F(complete(3))
    assert w is not None and w.core.bit_count() == 1

    assert recognize_F(complete_bipartite(3, 3)) is None
    assert recognize_F(path(4)) is None  # order not divisible by three
    assert recognize_F(disjoint_union(path(3), path(3))) is None  # disconnected


def test_recognize_F_witness_consistency():
    from pdpoly.graphs import from_edge_list

    # two core vertices, one pendant pair and one triangle pair
    g = from_edge_list(
        6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (4, 5)]
    )
    w = recognize_F(g)
    assert w is not None
    assert sorted(vertices_of(w.core)) == [0, 1]
    for owner, x, y in w.pairs:
        assert g.has_edge(owner, x) and g.has_edge(owner, y)
    assert recognize_F_bruteforce(g)


def test_recognize_F_agrees_with_bruteforce_on_random_graphs():
    rng = random.Random(818)
    for _ in range(150):
        g = random_graph(rng, rng.choice([3, 6]), p=rng.choice([0.2, 0.4, 0.6]))
        assert (recognize_F(g) is not None) == recognize_F_bruteforce(g)


def test_classify_examples():
    assert classify_by_distinct_roots(empty(4))["class"] == "empty_graph"

    g = disjoint_union(disjoint_union(path(2), path(2)), empty(1))
    got = classify_by_distinct_roots(g)
    assert got["class"] == "p2_union"
    assert got["witness"] == {"k2_components": 2, "isolates": 1}

    got = classify_by_distinct_roots(disjoint_union(path(3), complete(3)))
    assert got["class"] == "F_union"

    assert classify_by_distinct_roots(complete(4))["class"] == "other"
    assert classify_by_distinct_roots(disjoint_union(path(3), path(2)))["class"] == "other"


def test_classify_matches_numeric_roots():
    cases = {
        "empty_graph": (empty(5), 1),
        "p2_union": (disjoint_union(path(2), empty(2)), 2),
        "F_union": (disjoint_union(complete(3), empty(1)), 3),
        "other": (star(5), None),
    }
    for name, (g, want) in cases.items():
        assert classify_by_distinct_roots(g)["class"] == name
        numeric = find_roots(pd_polynomial(g)).distinct_count
        if want is None:
            assert numeric >= 4
        else:
            assert numeric == want


def test_two_root_positions():
    g = disjoint_union(disjoint_union(path(2), path(2)), path(2))
    rep = find_roots(pd_polynomial(g))
    assert rep.distinct_count == 2
    for root, _ in rep.roots:
        assert _closest(root, [0, -2]) < 1e-12


def test_is_k33():
    assert is_k33(complete_bipartite(3, 3))
    assert not is_k33(complete(6))
    assert not is_k33(cycle(6))
    assert not is_k33(complete_bipartite(2, 4))
    prism = disjoint_union(cycle(3), cycle(3))
    assert not is_k33(prism)


def test_k33_has_five_distinct_roots():
    p = pd_polynomial(complete_bipartite(3, 3))
    assert p.coeffs == (0, 0, 15, 20, 15, 6, 1)
    assert find_roots(p).distinct_count == 5


def test_rouche_single_vertex():
    for a in (0.5, 1, 2):
        assert abs(rouche_bound_graph(complete(1), a) - a) < 1e-15


def test_rouche_universal_below_graph_bound():
    rng = random.Random(55)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(3, 8))
        for a in (0.5, 1, 2):
            assert rouche_bound_universal(g.n, a) <= rouche_bound_graph(g, a) + 1e-12


def test_rouche_domain_errors():
    with pytest.raises(DomainError):
        rouche_bound_graph(path(3), 0)
    with pytest.raises(DomainError):
        rouche_bound_graph(path(3), -1)
    with pytest.raises(DomainError):
        rouche_bound_universal(2, 1.0)


def test_analyze_graph_report():
    rep = analyze_graph(complete(3))
    assert rep.classification == "F_union"
    assert rep.zero_multiplicity == 1
    data = rep.to_json()
    assert data["distinct_count"] == 3
    assert isinstance(data["rouche"], list)

    rep = analyze_graph(star(4))
    assert rep.classification == "other"
    assert rep.zero_multiplicity == 1


def test_no_real_root_has_positive_real_part():
    # real roots of graph polynomials are never positive; numeric reports
    # must respect that up to tolerance
    for n in range(1, 7):
        from conftest import catalog_graphs

        for key, g in catalog_graphs(n):
            rep = find_roots(pd_polynomial(g))
            for root, _ in rep.roots:
                if abs(root.imag) < 1e-8:
                    assert root.real <= 1e-8, (key, root)


def test_rouche_verdict_entries():
    from pdpoly.roots import RootReport, _rouche_verdicts

    g = path(3)
    poly = pd_polynomial(g)
    # fabricated report with one positive-real-part root exercises the
    # verdict fields even though small graphs never produce such roots
    fake = RootReport(
        roots=((0.5 + 2.0j, 1),),
        zero_multiplicity=0,
        distinct_count=1,
        residuals=(0.0,),
    )
    (entry,) = _rouche_verdicts(g, poly, fake)
    assert entry["root"] == [0.5, 2.0]
    assert entry["f_graph"] > 0
    assert entry["theorem_bound"] == min(
        entry["f_graph"], entry["f_graph"] ** (1.0 / 3.0)
    )
    assert "corollary_bound" in entry and "corollary_holds" in entry
    assert entry["theorem_holds"] is (2.0 >= entry["theorem_bound"] - 1e-6)


def test_find_roots_on_engineered_factorizations():
    rng = random.Random(1618)
    for _ in range(40):
        a = rng.randint(0, 4)
        b = rng.randint(0, 3)
        c = rng.randint(0, 3)
        d = rng.randint(0, 3)
        if a + b + c + d == 0:
            continue
        p = IntPolynomial.one()
        expected = {}
        if a:
            p = p * IntPolynomial.monomial(a)
            expected[0j] = a
        if b:
            p = p * (IntPolynomial((2, 1)) ** b)
            expected[complex(-2)] = b
        if c:
            p = p * (IntPolynomial((3, 3, 1)) ** c)
            expected[THREE_ROOTS[0]] = c
            expected[THREE_ROOTS[1]] = c
        if d:
            p = p * (IntPolynomial((1, 1)) ** d)
            expected[complex(-1)] = d
        rep = find_roots(p)
        assert sum(m for _, m in rep.roots) == p.degree
        assert rep.distinct_count == len(expected)
        seen = set()
        for root, mult in rep.roots:
            target = min(expected, key=lambda t: abs(root - t))
            assert abs(root - target) < 1e-9, (p.coeffs, root)
            assert mult == expected[target]
            seen.add(target)
        assert seen == set(expected)


def test_recognize_F_on_perturbed_family_members():
    # build genuine members, then nudge each by one edge; recognizer and
    # oracle must keep agreeing on both the members and the near-misses
    from pdpoly.graphs import from_edge_list, is_connected

    rng = random.Random(2718)
    from conftest import catalog_graphs

    cores = [g for n in (1, 2, 3) for _, g in catalog_graphs(n) if is_connected(g)]
    for core in cores:
        for trial in range(6):
            n = core.n
            edges = list(core.edges())
            for v in range(n):
                x, y = n + 2 * v, n + 2 * v + 1
                edges += [(v, x), (v, y)]
                if rng.random() < 0.5:
                    edges.append((x, y))
            g = from_edge_list(3 * n, edges)
            assert recognize_F(g) is not None
            assert recognize_F_bruteforce(g)
            total = 3 * n
            u, w = rng.randrange(total), rng.randrange(total)
            if u == w:
                continue
            if g.has_edge(u, w):
                mutated = [e for e in g.edges() if set(e) != {u, w}]
            else:
                mutated = list(g.edges()) + [(u, w)]
            h = from_edge_list(total, mutated)
            assert (recognize_F(h) is not None) == recognize_F_bruteforce(h), (
                core.n, sorted(h.edges()),
            )


def test_find_roots_survives_ill_conditioned_inputs():
    # huge constant terms used to blow up the initial radius; results must
    # stay finite and match distinct integer roots at coarse tolerance
    p = IntPolynomial.one()
    for r in range(1, 16):
        p = p * IntPolynomial((r, 1))
    rep = find_roots(p)
    assert rep.distinct_count == 15
    for root, mult in rep.roots:
        assert root == root and abs(root) != float("inf")
        assert mult == 1
        assert min(abs(root + r) for r in range(1, 16)) < 1e-4


def test_find_roots_many_distinct_wide_spread():
    import cmath

    from pdpoly.polynomial import binomial_minus_one

    q = binomial_minus_one(24)
    rep = find_roots(q)
    assert rep.distinct_count == 24
    targets = [cmath.exp(2j * cmath.pi * k / 24) - 1 for k in range(24)]
    for root, _ in rep.roots:
        assert min(abs(root - t) for t in targets) < 1e-5


def test_residuals_within_documented_bound():
    rng = random.Random(99)
    tol = 1e-10
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 8))
        p = pd_polynomial(g)
        rep = find_roots(p, tol)
        bound_scale = max(abs(c) for c in p.coeffs)
        for (root, _), res in zip(rep.roots, rep.residuals):
            assert res <= tol * bound_scale * max(1.0, abs(root)) ** p.degree
