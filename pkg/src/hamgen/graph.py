"""Immutable simple graphs on vertices ``0..n-1`` with bitmask adjacency.

The sorted edge list fixes the coordinate system used by every GF(2)
vector in :mod:`hamgen.gf2`, so two graphs with the same edge set always
agree on coordinates.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import (
    DuplicateEdge,
    EmptySet,
    FormatError,
    LoopEdge,
    OutOfRange,
    Overlap,
    TooLarge,
)

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class VertexSet:
    """A subset of ``0..n-1`` stored as a bitmask."""

    __slots__ = ("mask", "n")

    def __init__(self, n: int, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise OutOfRange(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        self.mask = mask
        self.n = n

    @classmethod
    def from_mask(cls, n: int, mask: int) -> VertexSet:
        if mask >> n:
            raise OutOfRange(f"mask {mask:#x} has bits beyond n={n}")
        vs = cls.__new__(cls)
        vs.mask = mask
        vs.n = n
        return vs

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask and self.n == other.n
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.n, self.mask & ~other.mask)

    def complement(self) -> VertexSet:
        return VertexSet.from_mask(self.n, ((1 << self.n) - 1) & ~self.mask)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


def as_mask(n: int, X) -> int:
    """Coerce a VertexSet, an int mask or an iterable of vertices to a mask."""
    if isinstance(X, VertexSet):
        return X.mask
    if isinstance(X, int):
        if X < 0 or X >> n:
            raise OutOfRange(f"mask {X:#x} invalid for n={n}")
        return X
    return VertexSet(n, X).mask


class Graph:
    """Undirected simple graph, immutable after construction.

    Attributes
    ----------
    n : int
        Number of vertices; vertices are ``0..n-1``.
    edges : tuple of (int, int)
        Lexicographically sorted pairs ``(u, v)`` with ``u < v``.
    adj : tuple of int
        ``adj[v]`` is the neighbour bitmask of ``v``.
    edge_index : dict
        Inverse of ``edges``.
    """

    __slots__ = ("n", "edges", "adj", "edge_index", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise OutOfRange("negative vertex count")
        if n > MAX_VERTICES:
            raise TooLarge(f"n={n} exceeds the exact-pipeline bound of {MAX_VERTICES}")
        adj = [0] * n
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge {key} listed twice")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self._hash = None

    # -- basic vocabulary -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.n, self.full_mask)

    def vset(self, members: Iterable[int]) -> VertexSet:
        return VertexSet(self.n, members)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """``G + E0``: add edges not already present."""
        new = set(self.edges)
        for u, v in extra:
            new.add((u, v) if u < v else (v, u))
        return Graph(self.n, new)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return reach(self.adj, 1, self.full_mask) == self.full_mask

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        left = self.full_mask
        comps = []
        while left:
            low = left & -left
            comp = reach(self.adj, low, left)
            comps.append(comp)
            left &= ~comp
        return comps

    # -- identity / io ----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_edge_list().encode("utf-8")).hexdigest()[:16]


def reach(adj, start_mask: int, allowed: int) -> int:
    """Vertices reachable from ``start_mask`` inside ``allowed``."""
    seen = start_mask & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def degree_stats(G: Graph, X, Y) -> tuple[int, int]:
    """Return ``(min, max)`` over ``y`` in Y of ``|N(y) & X|``."""
    xm = as_mask(G.n, X)
    ym = as_mask(G.n, Y)
    if not ym:
        raise EmptySet("degree_stats needs a non-empty Y")
    vals = [(G.adj[y] & xm).bit_count() for y in iter_bits(ym)]
    return min(vals), max(vals)


def edges_inside(G: Graph, X) -> int:
    xm = as_mask(G.n, X)
    return sum((G.adj[v] & xm).bit_count() for v in iter_bits(xm)) // 2


def edges_between(G: Graph, X, Y) -> int:
    """``|{xy in E : x in X, y in Y}|``; edges inside X & Y counted once."""
    xm = as_mask(G.n, X)
    ym = as_mask(G.n, Y)
    ordered = sum((G.adj[v] & ym).bit_count() for v in iter_bits(xm))
    return ordered - edges_inside(G, xm & ym)


def edge_counts(G: Graph, X, Y) -> tuple[int, int]:
    return edges_inside(G, X), edges_between(G, X, Y)


def induced(G: Graph, X) -> tuple[Graph, list[int]]:
    """Induced subgraph on X, relabelled in increasing vertex order.

    Returns the subgraph and ``labels`` with ``labels[i]`` the original
    vertex now called ``i``.
    """
    labels = list(iter_bits(as_mask(G.n, X)))
    pos = {v: i for i, v in enumerate(labels)}
    xm = as_mask(G.n, X)
    edges = [
        (pos[u], pos[v]) for u, v in G.edges if xm >> u & 1 and xm >> v & 1
    ]
    return Graph(len(labels), edges), labels


def bipartite_between(G: Graph, X, Y) -> tuple[Graph, list[int]]:
    """``G[X, Y]`` on vertex set X | Y (relabelled), keeping only X-Y edges."""
    xm = as_mask(G.n, X)
    ym = as_mask(G.n, Y)
    if xm & ym:
        raise Overlap("bipartite_between needs disjoint X and Y")
    labels = list(iter_bits(xm | ym))
    pos = {v: i for i, v in enumerate(labels)}
    edges = [
        (pos[u], pos[v])
        for u, v in G.edges
        if (xm >> u & 1 and ym >> v & 1) or (ym >> u & 1 and xm >> v & 1)
    ]
    return Graph(len(labels), edges), labels


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise FormatError(f"line {lineno}: expected 'n <count>' header")
            n = _parse_int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        edges.append((_parse_int(parts[0], lineno), _parse_int(parts[1], lineno)))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    return Graph(n, edges)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: {tok!r} is not an integer") from None


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(G: Graph, path) -> None:
    Path(path).write_text(G.to_edge_list(), encoding="utf-8", newline="\n")
