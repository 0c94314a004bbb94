import random

import pytest

from oracles import (
    forts_naive,
    is_dom_naive,
    is_pds_naive,
    is_zf_naive,
    random_graph,
)
from pdpoly.errors import TooLarge
from pdpoly.graphs import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    path,
    star,
    vertices_of,
)
from pdpoly.propagation import (
    check_ip_bound,
    closed_neighborhood,
    domination_number,
    enumerate_forts,
    forcing_closure,
    fort_neighborhood_family,
    gamma_p,
    is_dominating,
    is_fort,
    is_pds_via_forts,
    is_power_dominating,
    is_zero_forcing,
    power_domination_trace,
    subsets_of_size,
    zero_forcing_number,
)


def test_closed_neighborhood():
    s4 = star(4)
    assert closed_neighborhood(s4, {3}) == 0b1111
    assert closed_neighborhood(s4, 0) == 0
    assert closed_neighborhood(path(3), {0}) == 0b011


def test_forcing_closure_examples():
    final, trace = forcing_closure(path(4), {0})
    assert final == 0b1111
    assert trace.forces == ((0, 1), (1, 2), (2, 3))

    final, _ = forcing_closure(star(4), {3})
    assert final == 0b1000  # three uncolored leaves, nothing forces

    final, _ = forcing_closure(cycle(4), {0, 1})
    assert final == 0b1111


def test_forcing_closure_confluent_under_shuffles():
    rng = random.Random(2024)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9))
        start = rng.randrange(1 << g.n)
        reference, _ = forcing_closure(g, start)
        for k in range(10):
            shuffled, trace = forcing_closure(g, start, rng=rng)
            assert shuffled == reference
            # replay: each force must have been legal at its moment
            colored = start
            for u, v in trace.forces:
                unc = g.adj[u] & ~colored
                assert unc == 1 << v
                colored |= 1 << v
            assert colored == shuffled


def test_trace_fields():
    tr = power_domination_trace(star(4), {3})
    assert tr.initial == 0b1000
    assert tr.after_domination == 0b1111
    assert tr.final == 0b1111
    data = tr.to_json()
    assert data["after_domination"] == [0, 1, 2, 3]


def test_predicates_examples():
    for n in range(1, 8):
        for v in range(n):
            assert is_power_dominating(path(n), {v})
    assert not is_power_dominating(empty(2), {0})
    assert is_power_dominating(path(3), {1})
    assert not is_zero_forcing(path(3), {1})
    assert is_dominating(path(3), {1})


def test_empty_set_fails_all():
    for g in (complete(1), path(4), empty(3)):
        assert not is_power_dominating(g, 0)
        assert not is_zero_forcing(g, 0)
        assert not is_dominating(g, 0)


def test_predicates_match_naive_oracle_exhaustively():
    rng = random.Random(5)
    graphs = [random_graph(rng, n) for n in range(1, 6) for _ in range(8)]
    for g in graphs:
        for mask in range(1 << g.n):
            s = set(vertices_of(mask))
            assert is_power_dominating(g, mask) == is_pds_naive(g, s)
            assert is_zero_forcing(g, mask) == is_zf_naive(g, s)
            assert is_dominating(g, mask) == is_dom_naive(g, s)


def test_parameters():
    assert gamma_p(star(4)) == 1
    assert gamma_p(empty(3)) == 3
    assert gamma_p(complete_bipartite(3, 3)) == 2
    assert zero_forcing_number(path(5)) == 1
    assert zero_forcing_number(complete(4)) == 3
    assert domination_number(star(6)) == 1


def test_parameter_chain():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        gp = gamma_p(g)
        assert gp <= zero_forcing_number(g)
        assert gp <= domination_number(g)


def test_is_fort_examples():
    s4 = star(4)  # leaves 0,1,2 hub 3
    assert is_fort(s4, {0, 1})
    assert not is_fort(s4, {3, 0})
    assert is_fort(s4, s4.full_mask)
    assert not is_fort(s4, 0)


def test_enumerate_forts_star():
    s4 = star(4)
    got = {frozenset(vertices_of(f)) for f in enumerate_forts(s4)}
    expect = {
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 2}),
        frozenset({0, 1, 2}),
        frozenset({0, 1, 2, 3}),
    }
    assert got == expect
    assert got == forts_naive(s4)
    minimal = {frozenset(vertices_of(f)) for f in enumerate_forts(s4, minimal_only=True)}
    assert minimal == {frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})}


def test_forts_match_naive_oracle():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7))
        got = {frozenset(vertices_of(f)) for f in enumerate_forts(g)}
        assert got == forts_naive(g)


def test_fort_neighborhood_family():
    s4 = star(4)
    fam = fort_neighborhood_family(s4)
    assert len(fam) == 4
    assert s4.full_mask in fam
    assert enumerate_forts(empty(1)) == [1]
    assert fort_neighborhood_family(empty(1)) == {1}


def test_is_pds_via_forts():
    s4 = star(4)
    assert is_pds_via_forts(s4, {3})
    assert not is_pds_via_forts(s4, {0})
    assert not is_power_dominating(s4, {0})
    assert is_pds_via_forts(complete(3), {0})


def test_fort_cover_agrees_with_simulation():
    rng = random.Random(77)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 6))
        for mask in range(1 << g.n):
            assert is_pds_via_forts(g, mask) == is_power_dominating(g, mask)


def test_check_ip_bound_examples():
    assert check_ip_bound(star(4)) == {"lhs": 4, "rhs": 4, "holds": True}
    assert check_ip_bound(empty(1)) == {"lhs": 1, "rhs": 1, "holds": True}
    # the only fort of an edge is the whole vertex set, and all three
    # nonempty subsets power dominate
    assert check_ip_bound(complete(2)) == {"lhs": 1, "rhs": 1, "holds": True}


def test_fort_cap():
    with pytest.raises(TooLarge):
        enumerate_forts(empty(3), max_n=2)
    with pytest.raises(TooLarge):
        check_ip_bound(path(4), max_n=3)


def test_subsets_of_size():
    for n in range(0, 9):
        seen = set()
        for k in range(n + 1):
            masks = list(subsets_of_size(n, k))
            assert all(m.bit_count() == k for m in masks)
            assert len(masks) == len(set(masks))
            seen.update(masks)
        assert len(seen) == 1 << n
    assert list(subsets_of_size(4, 9)) == []


def test_superset_closure_small():
    rng = random.Random(13)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 6))
        for mask in range(1 << g.n):
            if is_power_dominating(g, mask):
                for v in range(g.n):
                    assert is_power_dominating(g, mask | 1 << v)


def test_dean_equivalence_small():
    rng = random.Random(17)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 6))
        for mask in range(1 << g.n):
            lhs = is_power_dominating(g, mask)
            rhs = is_zero_forcing(g, closed_neighborhood(g, mask)) if mask else False
            assert lhs == rhs


def test_pure_forcing_trace_has_no_domination_field():
    final, trace = forcing_closure(path(4), {0})
    assert trace.after_domination is None
    data = trace.to_json()
    assert data["after_domination"] is None
    assert data["forces"] == [[0, 1], [1, 2], [2, 3]]


def _fixpoint_closure_reference(g, colored):
    # deliberately naive: rescan every colored vertex until nothing moves
    while True:
        nxt = colored
        m = colored
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            unc = g.adj[v] & ~colored
            if unc and not unc & (unc - 1):
                nxt |= unc
        if nxt == colored:
            return colored
        colored = nxt


def test_worklist_closure_matches_naive_fixpoint_at_larger_orders():
    rng = random.Random(40320)
    for _ in range(60):
        n = rng.randint(8, 16)
        g = random_graph(rng, n, p=rng.choice([0.1, 0.2, 0.4]))
        for _ in range(25):
            start = rng.randrange(1 << n)
            got, _ = forcing_closure(g, start)
            assert got == _fixpoint_closure_reference(g, start)


def test_minimal_forts_match_naive_filter():
    rng = random.Random(120)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        all_forts = forts_naive(g)
        naive_minimal = {
            f for f in all_forts if not any(other < f for other in all_forts)
        }
        got = {frozenset(vertices_of(m)) for m in enumerate_forts(g, minimal_only=True)}
        assert got == naive_minimal
