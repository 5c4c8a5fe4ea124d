"""Deciding whether the Hamilton cycles of G span its cycle space, and the
refutation machinery: R-subgraphs, odd-R even cycles and parity-switchers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import (
    BadLength,
    BadPath,
    BadSwitcher,
    EvenOrder,
    NotHamiltonian,
    NotUDP,
    SearchCapped,
    TooLarge,
    TooSmall,
)
from .gf2 import (
    EdgeVector,
    Gf2Basis,
    SpanBuilder,
    cycle_bits,
    cycle_space_dim,
    fundamental_cycles,
    orthogonal_complement,
    vector_from_edges,
)
from .graph import Graph, edges_between, iter_bits
from .hamilton import (
    EnumerationResult,
    HamiltonCycle,
    SearchBudget,
    canonical_cycle,
    constrained_hamilton_path,
    enumerate_hamilton_cycles,
    hamilton_cycle_through,
    is_hamilton_cycle,
)
from .structures import _shortest_path, validate_udp

GENERATED = "Generated"
NOT_GENERATED = "NotGenerated"
INCONCLUSIVE = "Inconclusive"

# property (c) quantifies over 2^(n-1) partitions; refuse beyond this
MAX_R_ORDER = 24


@dataclass
class HamGenStatus:
    kind: str
    rank: int
    dim: int
    cycles: int
    search: EnumerationResult | None = None
    witness: EdgeVector | None = None
    span: Gf2Basis | None = field(default=None, repr=False)

    @property
    def generated(self) -> bool:
        return self.kind == GENERATED


def hamilton_span(G: Graph, budget: SearchBudget | None = None, stop_at: int | None = None):
    """Span of the Hamilton cycles of G.

    Returns ``(basis, enumeration result)``. With ``stop_at`` the search
    stops as soon as the rank reaches that value.
    """
    acc = SpanBuilder(G.m)
    index = G.edge_index

    def visit(cyc):
        acc.add(cycle_bits(index, cyc.order))
        return stop_at is not None and acc.rank >= stop_at

    res = enumerate_hamilton_cycles(G, budget, visit)
    return acc.freeze(), res


def is_hamilton_generated(G: Graph, budget: SearchBudget | None = None) -> HamGenStatus:
    if G.n < 3:
        raise TooSmall("needs n >= 3")
    dim = cycle_space_dim(G)
    if dim == 0:
        return HamGenStatus(GENERATED, 0, 0, 0, span=Gf2Basis(G.m))
    span, res = hamilton_span(G, budget, stop_at=dim)
    if span.rank == dim:
        return HamGenStatus(GENERATED, span.rank, dim, res.cycles, res, span=span)
    if not res.exhausted:
        return HamGenStatus(INCONCLUSIVE, span.rank, dim, res.cycles, res, span=span)
    witness = None
    for _, vec in fundamental_cycles(G):
        if not span.contains(vec):
            witness = vec
            break
    assert witness is not None, "rank deficit without an uncovered fundamental cycle"
    return HamGenStatus(NOT_GENERATED, span.rank, dim, res.cycles, res, witness, span)


# -- certificates ------------------------------------------------------------

@dataclass
class Certificate:
    """Evidence that some cycle is not a sum of Hamilton cycles.

    ``forbidden-edge``: ``edges`` is one edge lying on a cycle but on no
    Hamilton cycle. ``parity``: every Hamilton cycle meets ``edges`` evenly
    while ``witness`` (a cycle) meets it oddly. ``complete`` is False when
    the parity claim was checked against a capped enumeration only.
    """

    kind: str
    edges: list[tuple[int, int]]
    witness: list[tuple[int, int]] | None = None
    checked_cycles: int = 0
    complete: bool = True

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "edges": [list(e) for e in self.edges],
            "witness": [list(e) for e in self.witness] if self.witness is not None else None,
            "checked_cycles": self.checked_cycles,
            "complete": self.complete,
        }


def forbidden_edges(G: Graph, budget: SearchBudget | None = None) -> list[tuple[int, int]]:
    """Edges that lie on some cycle but on no Hamilton cycle."""
    on_cycle = 0
    for _, vec in fundamental_cycles(G):
        on_cycle |= vec.bits
    covered = 0
    out = []
    for idx in iter_bits(on_cycle):
        if covered >> idx & 1:
            continue
        u, v = G.edges[idx]
        try:
            cyc = hamilton_cycle_through(G, [[u, v]], budget)
        except SearchCapped:
            continue
        if cyc is None:
            out.append((u, v))
        else:
            covered |= cycle_bits(G.edge_index, cyc.order)
    return out


def _odd_fundamental(G: Graph, bits: int) -> EdgeVector | None:
    for _, vec in fundamental_cycles(G):
        if (vec.bits & bits).bit_count() & 1:
            return vec
    return None


def non_generation_certificates(
    G: Graph,
    candidates=(),
    budget: SearchBudget | None = None,
    auto_parity: bool = True,
) -> list[Certificate]:
    """Cheap sound certificates that the Hamilton span misses some cycle.

    ``candidates`` are edge sets (lists of pairs or EdgeVectors) to test as
    parity classes. With ``auto_parity`` and a complete enumeration, one
    parity class is also read off the orthogonal complement of the span.
    An empty list proves nothing.
    """
    if G.n < 3:
        raise TooSmall("needs n >= 3")
    certs = [Certificate("forbidden-edge", [e]) for e in forbidden_edges(G, budget)]

    cand_bits = []
    for S in candidates:
        bits = S.bits if isinstance(S, EdgeVector) else vector_from_edges(G, S).bits
        cand_bits.append(bits)
    alive = [True] * len(cand_bits)
    acc = SpanBuilder(G.m)
    index = G.edge_index

    def visit(cyc):
        bits = cycle_bits(index, cyc.order)
        acc.add(bits)
        for i, s in enumerate(cand_bits):
            if alive[i] and (bits & s).bit_count() & 1:
                alive[i] = False
        return False

    res = enumerate_hamilton_cycles(G, budget, visit)
    for i, s in enumerate(cand_bits):
        if not alive[i]:
            continue
        wit = _odd_fundamental(G, s)
        if wit is None:
            continue
        certs.append(Certificate(
            "parity",
            EdgeVector(s, G.m).edges(G),
            wit.edges(G),
            res.cycles,
            res.exhausted,
        ))
    if auto_parity and res.exhausted and not any(c.kind == "parity" for c in certs):
        comp = orthogonal_complement(acc.freeze(), G.m)
        for row in comp.rows():
            wit = _odd_fundamental(G, row.bits)
            if wit is not None:
                certs.append(Certificate("parity", row.edges(G), wit.edges(G), res.cycles, True))
                break
    return certs


# -- R-subgraphs ---------------------------------------------------------------

@dataclass
class RSubgraph:
    """A candidate R with the outcome of each of its three checks."""

    edges: EdgeVector
    proper: bool
    even_on_hamilton: bool
    cut_condition: bool
    partitions_checked: int = 0
    hamilton_cycles_checked: int = 0

    @property
    def valid(self) -> bool:
        return self.proper and self.even_on_hamilton and self.cut_condition

    def edge_list(self, G: Graph) -> list[tuple[int, int]]:
        return self.edges.edges(G)


@dataclass
class FindRResult:
    status: str  # "found" | "none" | "generated" | "inconclusive"
    R: RSubgraph | None
    complement_dim: int
    examined: int

    @property
    def found(self) -> bool:
        return self.R is not None


def _vertex_adj(G: Graph, bits: int) -> list[int]:
    adj = [0] * G.n
    for idx in iter_bits(bits):
        u, v = G.edges[idx]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def find_R(G: Graph, budget: SearchBudget | None = None, max_vectors: int | None = 1 << 24) -> FindRResult:
    """Search the orthogonal complement of the Hamilton span for an R that
    is a proper subgraph and carries at least half of every cut without
    being the cut.

    Every complement vector already meets each Hamilton cycle evenly; the
    complement is walked in Gray-code order over its basis and each
    candidate's cut condition is checked over all ``2^(n-1)`` partitions.
    """
    if G.n % 2 == 0:
        raise EvenOrder("needs an odd number of vertices")
    if G.n > MAX_R_ORDER:
        raise TooLarge(f"exhaustive partition check refused for n > {MAX_R_ORDER}")
    if G.n < 3:
        raise TooSmall("needs n >= 3")
    span, res = hamilton_span(G, budget)
    if res.cycles == 0 and res.exhausted:
        raise NotHamiltonian("graph has no Hamilton cycle")
    comp = orthogonal_complement(span, G.m)
    cdim = comp.rank
    if not res.exhausted:
        return FindRResult("inconclusive", None, cdim, 0)
    if span.rank == cycle_space_dim(G):
        return FindRResult("generated", None, cdim, 0)

    rows = [r.bits for r in comp.rows()]
    all_edges = (1 << G.m) - 1
    gdeg = G.degrees()
    total = 1 << cdim
    v = 0
    examined = 0
    for i in range(1, total):
        if max_vectors is not None and examined >= max_vectors:
            return FindRResult("inconclusive", None, cdim, examined)
        v ^= rows[(i & -i).bit_length() - 1]
        examined += 1
        if v == all_edges:
            continue
        radj = _vertex_adj(G, v)
        # single-vertex cuts first: d_R(x) >= d_G(x) / 2
        if any(2 * radj[x].bit_count() < gdeg[x] for x in range(G.n)):
            continue
        if kernels.cut_violation(G.n, G.adj, radj, v.bit_count()) != -1:
            continue
        R = RSubgraph(EdgeVector(v, G.m), True, True, True, 1 << (G.n - 1), res.cycles)
        return FindRResult("found", R, cdim, examined)
    return FindRResult("none", None, cdim, examined)


def check_R(G: Graph, R, budget: SearchBudget | None = None) -> RSubgraph:
    """Re-verify the three properties of R from scratch.

    Property (b) is checked against a fresh enumeration of all Hamilton
    cycles and (c) by direct evaluation of every partition, independently
    of the code paths :func:`find_R` uses.
    """
    bits = R.bits if isinstance(R, EdgeVector) else vector_from_edges(G, R).bits
    proper = bits != (1 << G.m) - 1
    even = [True]

    def visit(cyc):
        if (cycle_bits(G.edge_index, cyc.order) & bits).bit_count() & 1:
            even[0] = False
            return True
        return False

    res = enumerate_hamilton_cycles(G, budget, visit)
    even_ok = even[0] and res.exhausted
    Rg = Graph(G.n, [G.edges[i] for i in iter_bits(bits)])
    last = G.n - 1
    cut_ok = True
    checked = 0
    for A in range(1 << last):
        B = G.full_mask & ~A
        checked += 1
        eg = edges_between(G, A, B)
        er = edges_between(Rg, A, B)
        if 2 * er < eg or (er == Rg.m and er == eg):
            cut_ok = False
            break
    return RSubgraph(EdgeVector(bits, G.m), proper, even_ok, cut_ok, checked, res.cycles)


# -- odd-R cycles ------------------------------------------------------------

def _cycles_of_length(G: Graph, L: int):
    """Cycles of length L, each once: rooted at their smallest vertex, with
    the second vertex smaller than the last."""
    n = G.n
    adj = G.adj
    for r in range(n):
        above = G.full_mask & ~((1 << (r + 1)) - 1)
        path = [r]

        def walk(cur, used):
            if len(path) == L:
                if adj[cur] >> r & 1 and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in iter_bits(adj[cur] & above & ~used):
                path.append(w)
                yield from walk(w, used | (1 << w))
                path.pop()

        yield from walk(r, 1 << r)


def find_odd_R_cycle(G: Graph, R, max_len: int):
    """Shortest even cycle (length <= max_len) meeting R in an odd number
    of edges, as a vertex tuple, or None."""
    if max_len < 4 or max_len % 2:
        raise BadLength("max_len must be even and >= 4")
    bits = R.bits if isinstance(R, EdgeVector) else vector_from_edges(G, R).bits
    if not bits:
        return None
    for L in range(4, max_len + 1, 2):
        for cyc in _cycles_of_length(G, L):
            if (cycle_bits(G.edge_index, cyc) & bits).bit_count() & 1:
                return cyc
    return None


# -- parity-switchers ----------------------------------------------------------

@dataclass(frozen=True)
class ParitySwitcher:
    """Even cycle ``v_1..v_2k`` plus paths ``P_1..P_{k+1}``.

    ``paths[i-1]`` is P_i, stored starting at v_i (P_1 at v_1 ending at
    u_1, P_{k+1} at v_{k+1} ending at u_{k+1}, P_i for 2 <= i <= k at v_i
    ending at v_{2k-i+2}).
    """

    cycle: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cycle) // 2

    @property
    def touch(self) -> tuple[int, int]:
        return self.paths[0][-1], self.paths[-1][-1]

    def covered(self) -> int:
        mask = 0
        for p in self.paths:
            for v in p:
                mask |= 1 << v
        return mask


def make_switcher(G: Graph, cycle, paths, R=None) -> ParitySwitcher:
    """Validate and normalise a parity-switcher (path orientation is free
    on input)."""
    cyc = tuple(int(v) for v in cycle)
    L = len(cyc)
    if L < 4 or L % 2:
        raise BadSwitcher("the cycle must be even with length >= 4")
    if len(set(cyc)) != L or not all(G.has_edge(cyc[i], cyc[(i + 1) % L]) for i in range(L)):
        raise BadSwitcher("not a cycle of G")
    k = L // 2
    if len(paths) != k + 1:
        raise BadSwitcher(f"expected {k + 1} paths, got {len(paths)}")
    v = (None,) + cyc  # 1-based
    norm = []
    for i, raw in enumerate(paths, 1):
        p = tuple(int(x) for x in raw)
        if not p:
            raise BadSwitcher(f"P_{i} is empty")
        if i == 1 or i == k + 1:
            start = v[i]
            if p[0] != start:
                p = p[::-1]
            if p[0] != start:
                raise BadSwitcher(f"P_{i} must end at v_{i}")
        else:
            lo, hi = v[i], v[2 * k - i + 2]
            if p[0] != lo:
                p = p[::-1]
            if p[0] != lo or p[-1] != hi:
                raise BadSwitcher(f"P_{i} must join v_{i} and v_{2 * k - i + 2}")
        norm.append(p)
    try:
        validate_udp(G, norm)
    except NotUDP as exc:
        raise BadSwitcher(f"paths are not disjoint paths of G: {exc}") from None
    W = ParitySwitcher(cyc, tuple(norm))
    if R is not None:
        bits = R.bits if isinstance(R, EdgeVector) else vector_from_edges(G, R).bits
        if not (cycle_bits(G.edge_index, cyc) & bits).bit_count() & 1:
            raise BadSwitcher("cycle meets R in an even number of edges")
    return W


def find_switcher(G: Graph, R, cycle) -> ParitySwitcher | None:
    """Complete an odd-R even cycle to a switcher with trivial outer paths,
    routing each P_i by a shortest path that avoids everything used so far."""
    cyc = tuple(cycle)
    k = len(cyc) // 2
    v = (None,) + cyc
    used = 0
    for x in cyc:
        used |= 1 << x
    paths = [(v[1],)]
    for i in range(2, k + 1):
        lo, hi = v[i], v[2 * k - i + 2]
        allowed = (G.full_mask & ~used) | (1 << lo) | (1 << hi)
        p = _shortest_path(G, lo, hi, allowed)
        if p is None:
            return None
        for x in p:
            used |= 1 << x
        paths.append(tuple(p))
    paths.append((v[k + 1],))
    return make_switcher(G, cyc, paths, R)


def _check_connecting_path(G: Graph, W: ParitySwitcher, P) -> list[int]:
    u1, uk = W.touch
    P = [int(x) for x in P]
    if len(P) < 2:
        raise BadPath("connecting path needs two endpoints")
    if P[0] != u1:
        P = P[::-1]
    if P[0] != u1 or P[-1] != uk:
        raise BadPath("path must join the two touch vertices")
    if len(set(P)) != len(P):
        raise BadPath("path repeats a vertex")
    if not all(G.has_edge(a, b) for a, b in zip(P, P[1:])):
        raise BadPath("path uses a non-edge")
    inner = 0
    for x in P[1:-1]:
        inner |= 1 << x
    if inner != G.full_mask & ~W.covered():
        raise BadPath("interior must be exactly the vertices outside the switcher paths")
    return P


def assemble_switch_cycles(G: Graph, W: ParitySwitcher, P) -> tuple[HamiltonCycle, HamiltonCycle]:
    """The two Hamilton cycles built from W and a connecting path P.

    Both run v_{k+1} -> P_{k+1} -> P -> P_1 -> v_1 and then thread
    P_2..P_k, the first using the odd-indexed cycle edges and the second
    the even-indexed ones, so their symmetric difference is the cycle.
    """
    P = _check_connecting_path(G, W, P)
    k = W.k
    paths = W.paths
    head = list(paths[k])  # v_{k+1} .. u_{k+1}
    head += P[::-1][1:]  # .. u_1
    head += list(paths[0][::-1])[1:]  # .. v_1

    def thread(first_low: bool):
        seq = head[:]
        for i in range(2, k + 1):
            p = paths[i - 1]
            enter_low = (i % 2 == 0) == first_low
            seq += list(p) if enter_low else list(p[::-1])
        return seq

    out = []
    for first_low in (True, False):
        seq = thread(first_low)
        if not is_hamilton_cycle(G, seq):
            raise BadSwitcher("assembled sequence is not a Hamilton cycle")
        out.append(canonical_cycle(seq))
    C1, C2 = out
    cyc_bits = cycle_bits(G.edge_index, W.cycle)
    assert cycle_bits(G.edge_index, C1.order) ^ cycle_bits(G.edge_index, C2.order) == cyc_bits
    return C1, C2


def switcher_obstruction_holds(G: Graph, R, W: ParitySwitcher, budget: SearchBudget | None = None) -> bool:
    """True iff no u_1-u_{k+1} path has interior equal to the vertices
    outside the switcher's paths."""
    W = make_switcher(G, W.cycle, W.paths, R)
    u1, uk = W.touch
    if u1 == uk:
        raise BadSwitcher("touch vertices coincide")
    interior = G.full_mask & ~W.covered()
    return constrained_hamilton_path(G, u1, uk, interior, budget) is None
