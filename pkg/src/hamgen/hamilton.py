"""Exact Hamilton cycle and path search.

All searches run the backtracking kernel from :mod:`hamgen.kernels`
(vertex 0 is the root, lowest-index neighbour first, with degree and
connectivity pruning). A search either completes, and then its answer is
exact, or trips its budget; budget trips are never reported as "no".
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import kernels
from .errors import (
    BadPartition,
    EndpointInInterior,
    KOutOfRange,
    KTooSmall,
    NotBalanced,
    NotMatching,
    SameVertex,
    SearchCapped,
    TooSmall,
)
from .gf2 import EdgeVector, cycle_bits
from .graph import Graph, as_mask, induced, iter_bits
from .structures import LinearForest, validate_udp

BUDGET_ENV = "HAMGEN_BUDGET_NODES"


@dataclass(frozen=True)
class SearchBudget:
    max_cycles: int | None = None
    max_nodes: int | None = None

    def __post_init__(self):
        for name in ("max_cycles", "max_nodes"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, default_nodes: int | None = None) -> SearchBudget:
        raw = os.environ.get(BUDGET_ENV)
        if raw:
            return cls(max_nodes=int(raw))
        return cls(max_nodes=default_nodes)


UNLIMITED = SearchBudget()


class SearchStatus(str, Enum):
    EXHAUSTED = "exhausted"
    CAPPED = "capped"


@dataclass(frozen=True)
class EnumerationResult:
    status: SearchStatus
    cycles: int
    nodes: int

    @property
    def exhausted(self) -> bool:
        return self.status is SearchStatus.EXHAUSTED


@dataclass(frozen=True)
class HamiltonCycle:
    """A Hamilton cycle as a vertex order, canonical when built by
    :func:`canonical_cycle`."""

    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)

    def edges(self) -> list[tuple[int, int]]:
        k = len(self.order)
        out = []
        for i in range(k):
            u, v = self.order[i], self.order[(i + 1) % k]
            out.append((u, v) if u < v else (v, u))
        return out

    def vector(self, G: Graph) -> EdgeVector:
        return EdgeVector(cycle_bits(G.edge_index, self.order), G.m)

    def contains_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in set(self.edges())


def canonical_cycle(order) -> HamiltonCycle:
    """Rotate to start at the smallest vertex, second vertex the smaller
    of its two cycle neighbours."""
    order = list(order)
    i = order.index(min(order))
    order = order[i:] + order[:i]
    if len(order) > 2 and order[1] > order[-1]:
        order = [order[0]] + order[:0:-1]
    return HamiltonCycle(tuple(order))


def is_hamilton_cycle(G: Graph, order) -> bool:
    if len(order) != G.n or set(order) != set(range(G.n)):
        return False
    return all(G.has_edge(order[i], order[(i + 1) % G.n]) for i in range(G.n))


def enumerate_hamilton_cycles(G: Graph, budget: SearchBudget | None = None, visitor=None) -> EnumerationResult:
    """Feed every Hamilton cycle of G, once and in canonical form, to
    ``visitor``; a truthy return from the visitor stops the search, which
    then counts as capped."""
    if G.n < 3:
        raise TooSmall("Hamilton cycles need n >= 3")
    budget = budget or UNLIMITED
    count = 0

    def emit(order):
        nonlocal count
        count += 1
        stop = visitor(HamiltonCycle(tuple(order))) if visitor is not None else False
        if budget.max_cycles is not None and count >= budget.max_cycles:
            return True
        return stop

    status, nodes = kernels.hamilton_search(
        G.n, G.adj, [0] * G.n, budget.max_nodes or 0, True, emit
    )
    st = SearchStatus.EXHAUSTED if status == kernels.EXHAUSTED else SearchStatus.CAPPED
    return EnumerationResult(st, count, nodes)


def _forced_masks(n: int, edges) -> list[int]:
    forced = [0] * n
    for u, v in edges:
        forced[u] |= 1 << v
        forced[v] |= 1 << u
    return forced


def _search_one(G: Graph, forced_edges, budget: SearchBudget | None):
    budget = budget or UNLIMITED
    found = []

    def take(order):
        found.append(order)
        return True

    status, nodes = kernels.hamilton_search(
        G.n, G.adj, _forced_masks(G.n, forced_edges), budget.max_nodes or 0, False, take
    )
    if status == kernels.CAPPED:
        raise SearchCapped(f"search capped after {nodes} nodes", nodes)
    return canonical_cycle(found[0]) if found else None


def hamilton_cycle_through(G: Graph, F, budget: SearchBudget | None = None) -> HamiltonCycle | None:
    """A Hamilton cycle containing every edge of the linear forest F.

    ``F`` is a :class:`LinearForest` or a list of vertex sequences, which
    is validated first. Raises :class:`SearchCapped` if the budget trips.
    """
    if G.n < 3:
        raise TooSmall("Hamilton cycles need n >= 3")
    if not isinstance(F, LinearForest):
        F = validate_udp(G, F)
    return _search_one(G, F.edges, budget)


def hamilton_path_between(G: Graph, u: int, v: int, budget: SearchBudget | None = None) -> list[int] | None:
    """A Hamilton path from u to v, or None.

    Runs as a forced-edge cycle search in ``G + uv``.
    """
    if u == v:
        raise SameVertex("endpoints must differ")
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise BadPartition(f"endpoint outside 0..{G.n - 1}")
    if G.n == 2:
        return [u, v] if G.has_edge(u, v) else None
    H = G if G.has_edge(u, v) else G.with_edges([(u, v)])
    cyc = _search_one(H, [(u, v)], budget)
    if cyc is None:
        return None
    order = list(cyc.order)
    i = order.index(u)
    order = order[i:] + order[:i]
    if order[1] == v:
        order = [order[0]] + order[:0:-1]
    assert order[-1] == v
    return order


def is_hamilton_connected(G: Graph, budget: SearchBudget | None = None) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, first failing pair)``."""
    if G.n < 2:
        raise TooSmall("Hamilton-connectivity needs n >= 2")
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if hamilton_path_between(G, u, v, budget) is None:
                return False, (u, v)
    return True, None


def constrained_hamilton_path(G: Graph, u: int, v: int, interior, budget: SearchBudget | None = None) -> list[int] | None:
    """A u-v path whose interior vertex set is exactly ``interior``."""
    if u == v:
        raise SameVertex("endpoints must differ")
    imask = as_mask(G.n, interior)
    if imask >> u & 1 or imask >> v & 1:
        raise EndpointInInterior("u and v must lie outside the interior set")
    if not imask:
        return [u, v] if G.has_edge(u, v) else None
    H, labels = induced(G, imask | (1 << u) | (1 << v))
    pos = {x: i for i, x in enumerate(labels)}
    path = hamilton_path_between(H, pos[u], pos[v], budget)
    if path is None:
        return None
    return [labels[i] for i in path]


def posa_guarantees(n: int, k: int, delta: int) -> bool:
    """Whether ``delta >= (n + k) / 2``, compared exactly."""
    if k <= 1:
        raise KTooSmall("the forced-forest condition needs k > 1 edges")
    return 2 * delta >= n + k


def sigma11(G: Graph, X, Y):
    """Minimum ``d(x) + d(y)`` over non-adjacent ``x in X``, ``y in Y``;
    ``math.inf`` when every cross pair is adjacent."""
    xm, ym = as_mask(G.n, X), as_mask(G.n, Y)
    if xm & ym or (xm | ym) != G.full_mask:
        raise BadPartition("X and Y must partition V(G)")
    best = math.inf
    deg = G.degrees()
    for x in iter_bits(xm):
        miss = ym & ~G.adj[x]
        for y in iter_bits(miss):
            s = deg[x] + deg[y]
            if s < best:
                best = s
    return best


def fuji_threshold(n: int, k: int) -> Fraction:
    """Degree-sum threshold for a Hamilton cycle through a k-matching in a
    balanced bipartite graph with n vertices per side.

    The three ranges are tried in order; the first match wins.
    """
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside 1..{n}")
    if k in (n, n - 1) or 1 <= k <= 4:
        return Fraction(n + 2)
    if Fraction(2 * n, 3) <= k <= n - 2:
        return Fraction(2 * n - k)
    if 5 <= k <= Fraction(2 * n - 1, 3):
        return n + Fraction(k, 2)
    raise KOutOfRange(f"no threshold range covers k={k}, n={n}")  # pragma: no cover


def hamilton_m_cycle(G: Graph, X, Y, M, budget: SearchBudget | None = None) -> HamiltonCycle | None:
    """A Hamilton cycle of the bipartite graph G through every edge of M."""
    xm, ym = as_mask(G.n, X), as_mask(G.n, Y)
    if xm & ym or (xm | ym) != G.full_mask:
        raise BadPartition("X and Y must partition V(G)")
    if xm.bit_count() != ym.bit_count():
        raise NotBalanced(f"|X|={xm.bit_count()} != |Y|={ym.bit_count()}")
    for a, b in G.edges:
        if (xm >> a & 1) == (xm >> b & 1):
            raise BadPartition(f"edge ({a}, {b}) does not cross X-Y")
    used = 0
    pairs = []
    for a, b in M:
        if not G.has_edge(a, b):
            raise NotMatching(f"({a}, {b}) is not an edge")
        if used >> a & 1 or used >> b & 1:
            raise NotMatching(f"({a}, {b}) shares a vertex with another matching edge")
        used |= (1 << a) | (1 << b)
        pairs.append((a, b))
    return hamilton_cycle_through(G, [list(p) for p in pairs], budget)
