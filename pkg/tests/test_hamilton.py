import itertools
import math
import random
from fractions import Fraction

import pytest

from hamgen.constructions import (
    complete_bipartite,
    complete_graph,
    construction_a,
    cycle_graph,
    path_graph,
)
from hamgen.errors import (
    BadPartition,
    EndpointInInterior,
    KOutOfRange,
    KTooSmall,
    NotBalanced,
    NotMatching,
    NotUDP,
    SameVertex,
    SearchCapped,
    TooSmall,
)
from hamgen.gf2 import cycle_space_basis, in_span
from hamgen.graph import Graph
from hamgen.hamilton import (
    BUDGET_ENV,
    SearchBudget,
    SearchStatus,
    canonical_cycle,
    constrained_hamilton_path,
    enumerate_hamilton_cycles,
    fuji_threshold,
    hamilton_cycle_through,
    hamilton_m_cycle,
    hamilton_path_between,
    is_hamilton_connected,
    is_hamilton_cycle,
    posa_guarantees,
    sigma11,
)

import oracles


def collect(G, budget=None):
    out = []
    res = enumerate_hamilton_cycles(G, budget, lambda c: out.append(c.order))
    return res, out


def test_c5_and_k5():
    res, cyc = collect(cycle_graph(5))
    assert res.status is SearchStatus.EXHAUSTED and len(cyc) == 1
    res, cyc = collect(complete_graph(5))
    assert res.exhausted and len(cyc) == 12


def test_g1_cycles_use_a1a2_never_b1b2():
    c = construction_a(2, 1)
    res, cyc = collect(c.graph)
    assert res.exhausted and len(cyc) == 144
    a1a2 = tuple(sorted(c.a[:2]))
    b1b2 = tuple(sorted(c.b[:2]))
    for order in cyc:
        edges = {tuple(sorted(e)) for e in oracles.cycle_edges(order)}
        assert a1a2 in edges and b1b2 not in edges


def test_too_small():
    with pytest.raises(TooSmall):
        enumerate_hamilton_cycles(path_graph(2))


def test_enumeration_matches_brute_force():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(3, 8)
        G = oracles.random_graph(n, rng.choice([0.4, 0.6, 0.9]), rng)
        res, cyc = collect(G)
        assert res.exhausted
        assert sorted(cyc) == sorted(oracles.hamilton_cycles(G))


def test_enumeration_deterministic_and_canonical():
    G = construction_a(2, 3).graph
    _, first = collect(G)
    _, second = collect(G)
    assert first == second
    assert len(set(first)) == len(first)
    for order in first:
        assert canonical_cycle(order).order == order
        assert order[0] == 0 and order[1] < order[-1]


def test_cycles_lie_in_cycle_space():
    G = complete_graph(6)
    B = cycle_space_basis(G)
    res = enumerate_hamilton_cycles(G, visitor=lambda c: not in_span(B, c.vector(G)))
    assert res.exhausted


def test_budget_caps():
    res, cyc = collect(complete_graph(7), SearchBudget(max_cycles=5))
    assert res.status is SearchStatus.CAPPED and len(cyc) == 5
    res, _ = collect(complete_graph(8), SearchBudget(max_nodes=10))
    assert not res.exhausted
    res = enumerate_hamilton_cycles(complete_graph(6), visitor=lambda c: True)
    assert not res.exhausted and res.cycles == 1
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert SearchBudget.from_env().max_nodes == 123
    monkeypatch.delenv(BUDGET_ENV)
    assert SearchBudget.from_env(7).max_nodes == 7


def test_cycle_through_examples():
    K6 = complete_graph(6)
    cyc = hamilton_cycle_through(K6, [[0, 1], [2, 3]])
    assert is_hamilton_cycle(K6, cyc.order)
    assert cyc.contains_edge(0, 1) and cyc.contains_edge(2, 3)
    C5 = cycle_graph(5)
    assert hamilton_cycle_through(C5, [[3, 4]]).order == (0, 1, 2, 3, 4)
    c = construction_a(2, 1)
    assert hamilton_cycle_through(c.graph, [list(c.b[:2])]) is None
    with pytest.raises(NotUDP):
        hamilton_cycle_through(K6, [[0, 1], [1, 2]])


def test_cycle_through_cross_check():
    rng = random.Random(9)
    for _ in range(80):
        n = rng.randint(4, 8)
        G = oracles.random_graph(n, 0.6, rng)
        if not G.edges:
            continue
        u, v = rng.choice(G.edges)
        F = [[u, v]]
        nbrs = [w for w in G.neighbors(v) if w != u]
        if nbrs and rng.random() < 0.5:
            F = [[u, v, rng.choice(nbrs)]]
        want = set()
        for p in F:
            want |= {frozenset(e) for e in zip(p, p[1:])}
        brute = [c for c in oracles.hamilton_cycles(G) if want <= {frozenset(e) for e in oracles.cycle_edges(c)}]
        got = hamilton_cycle_through(G, F)
        assert (got is None) == (not brute)
        if got is not None:
            assert want <= {frozenset(e) for e in got.edges()}


def test_path_between_examples():
    path = hamilton_path_between(complete_graph(4), 0, 3)
    assert path[0] == 0 and path[-1] == 3 and sorted(path) == [0, 1, 2, 3]
    with pytest.raises(SameVertex):
        hamilton_path_between(complete_graph(4), 1, 1)


def test_path_between_against_brute_force():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(3, 7)
        G = oracles.random_graph(n, 0.55, rng)
        for u, v in itertools.combinations(range(n), 2):
            got = hamilton_path_between(G, u, v)
            brute = oracles.hamilton_paths(G, u, v)
            assert (got is None) == (not brute)
            if got is not None:
                assert tuple(got) in brute or tuple(reversed(got)) in brute


def test_hamilton_connectivity_of_constructions():
    assert is_hamilton_connected(complete_graph(5)) == (True, None)
    ok, pair = is_hamilton_connected(construction_a(2, 2).graph)
    assert not ok and pair is not None
    ok, pair = is_hamilton_connected(construction_a(2, 1).graph)
    assert not ok
    assert is_hamilton_connected(construction_a(2, 3).graph)[0]


def test_first_failing_pair_is_lexicographic():
    G = construction_a(2, 1).graph
    first = None
    for u, v in itertools.combinations(range(G.n), 2):
        if not oracles.hamilton_paths(G, u, v):
            first = (u, v)
            break
    assert is_hamilton_connected(G) == (False, first)


def test_constrained_path():
    K5 = complete_graph(5)
    p = constrained_hamilton_path(K5, 0, 4, {1, 2, 3})
    assert p[0] == 0 and p[-1] == 4 and set(p[1:-1]) == {1, 2, 3}
    P3 = path_graph(3)
    assert constrained_hamilton_path(P3, 0, 2, set()) is None
    assert constrained_hamilton_path(P3, 0, 2, {1}) == [0, 1, 2]
    with pytest.raises(EndpointInInterior):
        constrained_hamilton_path(K5, 0, 4, {0, 1})
    with pytest.raises(SameVertex):
        constrained_hamilton_path(K5, 2, 2, {1})


def test_constrained_path_capped_raises():
    G = complete_graph(12)
    with pytest.raises(SearchCapped):
        constrained_hamilton_path(Graph(12, [e for e in G.edges if e != (0, 11)]), 0, 11, set(range(1, 11)) - {5}, SearchBudget(max_nodes=1))


def test_posa():
    assert posa_guarantees(6, 2, 4)
    assert not posa_guarantees(6, 2, 3)
    assert posa_guarantees(9, 3, 6)
    with pytest.raises(KTooSmall):
        posa_guarantees(6, 1, 5)


def test_sigma11():
    K33 = complete_bipartite(3, 3)
    assert sigma11(K33, {0, 1, 2}, {3, 4, 5}) == math.inf
    C6 = cycle_graph(6)
    assert sigma11(C6, {0, 2, 4}, {1, 3, 5}) == 4
    minus = Graph(6, [e for e in K33.edges if e != (0, 3)])
    assert sigma11(minus, {0, 1, 2}, {3, 4, 5}) == 4
    with pytest.raises(BadPartition):
        sigma11(K33, {0, 1}, {3, 4, 5})


def test_fuji_threshold():
    assert fuji_threshold(10, 3) == 12
    assert fuji_threshold(9, 8) == 11
    assert fuji_threshold(12, 8) == 16
    assert fuji_threshold(15, 6) == Fraction(18)
    assert fuji_threshold(20, 7) == Fraction(47, 2)
    with pytest.raises(KOutOfRange):
        fuji_threshold(5, 0)
    with pytest.raises(KOutOfRange):
        fuji_threshold(5, 6)


def test_fuji_threshold_total():
    for n in range(1, 40):
        for k in range(1, n + 1):
            assert fuji_threshold(n, k) > 0


def test_m_cycle():
    K33 = complete_bipartite(3, 3)
    X, Y = {0, 1, 2}, {3, 4, 5}
    cyc = hamilton_m_cycle(K33, X, Y, [(0, 3), (1, 4), (2, 5)])
    assert all(cyc.contains_edge(a, b) for a, b in [(0, 3), (1, 4), (2, 5)])
    C6 = cycle_graph(6)
    Xc, Yc = {0, 2, 4}, {1, 3, 5}
    assert hamilton_m_cycle(C6, Xc, Yc, [(0, 1)]).order == (0, 1, 2, 3, 4, 5)
    assert hamilton_m_cycle(C6, Xc, Yc, [(0, 1), (3, 4)]).order == (0, 1, 2, 3, 4, 5)
    with pytest.raises(NotBalanced):
        hamilton_m_cycle(complete_bipartite(2, 3), {0, 1}, {2, 3, 4}, [])
    with pytest.raises(NotMatching):
        hamilton_m_cycle(K33, X, Y, [(0, 3), (0, 4)])
    with pytest.raises(NotMatching):
        hamilton_m_cycle(C6, Xc, Yc, [(0, 3)])
