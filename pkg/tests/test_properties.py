"""Hypothesis-driven invariants across modules."""

import random

from hypothesis import assume, given, settings, strategies as st

from hamgen.generation import GENERATED, is_hamilton_generated
from hamgen.gf2 import (
    EdgeVector,
    basis_from_vectors,
    cycle_space_basis,
    cycle_space_dim,
    intersection_parity,
    orthogonal_complement,
)
from hamgen.graph import Graph, parse_edge_list
from hamgen.hamilton import enumerate_hamilton_cycles
from hamgen.structures import bipartite_matching, max_linear_forest, validate_udp

import oracles


@st.composite
def graphs(draw, lo=1, hi=9):
    n = draw(st.integers(lo, hi))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


vectors = st.integers(0, (1 << 20) - 1).map(lambda b: EdgeVector(b, 20))


@settings(max_examples=100, deadline=None)
@given(st.lists(vectors, max_size=12), vectors)
def test_span_membership_matches_oracle(vs, w):
    B = basis_from_vectors(20, vs)
    rows = [[(v.bits >> i) & 1 for i in range(20)] for v in vs]
    r = oracles.gf2_rank(rows)
    assert B.rank == r
    assert B.contains(w) == (oracles.gf2_rank(rows + [[(w.bits >> i) & 1 for i in range(20)]]) == r)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, max_size=10))
def test_complement_dimension(vs):
    B = basis_from_vectors(20, vs)
    C = orthogonal_complement(B, 20)
    assert B.rank + C.rank == 20
    for c in C.rows():
        for v in vs:
            assert intersection_parity(c, v) == 0


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_cycle_space_dimension(G):
    assert cycle_space_dim(G) == G.m - G.n + oracles.components(G)
    assert cycle_space_basis(G).rank == cycle_space_dim(G)


@settings(max_examples=60, deadline=None)
@given(graphs(3, 8))
def test_hamilton_cycles_are_cycles(G):
    B = cycle_space_basis(G)
    seen = []

    def visit(c):
        v = c.vector(G)
        assert v.weight == G.n and B.contains(v)
        seen.append(c.order)

    res = enumerate_hamilton_cycles(G, visitor=visit)
    assert res.exhausted and res.cycles == len(seen) == len(set(seen))


@settings(max_examples=40, deadline=None)
@given(graphs(3, 7))
def test_generation_status_invariants(G):
    st_ = is_hamilton_generated(G)
    assert st_.rank <= st_.dim
    if st_.kind == GENERATED:
        assert st_.rank == st_.dim
    else:
        assert st_.witness is not None and not st_.span.contains(st_.witness)
        assert cycle_space_basis(G).contains(st_.witness)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_edge_list_round_trip(G):
    assert parse_edge_list(G.to_edge_list()) == G


@settings(max_examples=60, deadline=None)
@given(graphs(1, 10))
def test_linear_forest_identity(G):
    f, lf = max_linear_forest(G)
    again = validate_udp(G, lf.paths)
    nontrivial = again.num_paths - again.trivial
    covered = len(again.vertices) - again.trivial
    assert covered == again.num_edges + nontrivial == f + nontrivial
    assert f <= G.n - 1 or G.n == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.floats(0, 1), st.integers(0, 2**32))
def test_konig(a, b, p, seed):
    G, X, Y = oracles.random_bipartite(a, b, p, random.Random(seed))
    res = bipartite_matching(G, X, Y)
    assert res.size == len(res.cover)
    cover = set(res.cover)
    assert all(u in cover or v in cover for u, v in G.edges)
