"""GF(2) linear algebra on the edge space of a :class:`~hamgen.graph.Graph`.

Vectors are Python ints used as bitsets; bit ``i`` is edge ``G.edges[i]``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import LengthMismatch, UnknownEdge
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class EdgeVector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise LengthMismatch(f"bits exceed length {self.length}")

    def __xor__(self, other: EdgeVector) -> EdgeVector:
        _check(self, other)
        return EdgeVector(self.bits ^ other.bits, self.length)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return list(iter_bits(self.bits))

    def edges(self, G: Graph) -> list[tuple[int, int]]:
        if G.m != self.length:
            raise LengthMismatch("vector does not belong to this graph")
        return [G.edges[i] for i in iter_bits(self.bits)]


def _check(v: EdgeVector, w: EdgeVector) -> None:
    if v.length != w.length:
        raise LengthMismatch(f"lengths {v.length} and {w.length} differ")


def vector_from_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> EdgeVector:
    bits = 0
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        idx = G.edge_index.get(key)
        if idx is None:
            raise UnknownEdge(f"{key} is not an edge")
        bits ^= 1 << idx
    return EdgeVector(bits, G.m)


def vector_from_cycle(G: Graph, order) -> EdgeVector:
    """Indicator of the closed walk ``order[0] .. order[-1] order[0]``."""
    k = len(order)
    return vector_from_edges(G, ((order[i], order[(i + 1) % k]) for i in range(k)))


def cycle_bits(edge_index: dict, order) -> int:
    """Bitset of a vertex-order cycle; unchecked fast path for hot loops."""
    bits = 0
    prev = order[-1]
    for v in order:
        bits |= 1 << edge_index[(prev, v) if prev < v else (v, prev)]
        prev = v
    return bits


def intersection_parity(v: EdgeVector, w: EdgeVector) -> int:
    _check(v, w)
    return (v.bits & w.bits).bit_count() & 1


class Gf2Basis:
    """Row-echelon basis; each row is keyed by its lowest set coordinate.

    Instances are treated as values: :meth:`insert` returns a new basis
    when the span grows and ``self`` otherwise.
    """

    __slots__ = ("length", "_rows")

    def __init__(self, length: int, rows: dict[int, int] | None = None):
        self.length = length
        self._rows = dict(rows) if rows else {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> dict[int, int]:
        return dict(self._rows)

    def rows(self) -> list[EdgeVector]:
        return [EdgeVector(self._rows[p], self.length) for p in sorted(self._rows)]

    def reduce(self, bits: int) -> int:
        """Reduce ``bits`` until its lowest coordinate has no pivot row."""
        rows = self._rows
        while bits:
            low = (bits & -bits).bit_length() - 1
            row = rows.get(low)
            if row is None:
                return bits
            bits ^= row
        return 0

    def insert(self, v: EdgeVector) -> tuple[Gf2Basis, bool]:
        if v.length != self.length:
            raise LengthMismatch(f"vector length {v.length} != {self.length}")
        r = self.reduce(v.bits)
        if not r:
            return self, False
        new = Gf2Basis(self.length, self._rows)
        new._rows[(r & -r).bit_length() - 1] = r
        return new, True

    def contains(self, v: EdgeVector) -> bool:
        if v.length != self.length:
            raise LengthMismatch(f"vector length {v.length} != {self.length}")
        return self.reduce(v.bits) == 0

    def __repr__(self) -> str:
        return f"Gf2Basis(length={self.length}, rank={self.rank})"


class SpanBuilder:
    """Mutable accumulator used inside enumeration loops.

    Cheaper than re-creating a :class:`Gf2Basis` on every insertion; call
    :meth:`freeze` to obtain the value-type basis.
    """

    __slots__ = ("length", "rows")

    def __init__(self, length: int):
        self.length = length
        self.rows: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, bits: int) -> bool:
        rows = self.rows
        while bits:
            low = (bits & -bits).bit_length() - 1
            row = rows.get(low)
            if row is None:
                rows[low] = bits
                return True
            bits ^= row
        return False

    def freeze(self) -> Gf2Basis:
        return Gf2Basis(self.length, self.rows)


def insert_and_rank(B: Gf2Basis, v: EdgeVector) -> tuple[Gf2Basis, bool]:
    return B.insert(v)


def in_span(B: Gf2Basis, v: EdgeVector) -> bool:
    return B.contains(v)


def basis_from_vectors(length: int, vectors: Iterable[EdgeVector]) -> Gf2Basis:
    acc = SpanBuilder(length)
    for v in vectors:
        if v.length != length:
            raise LengthMismatch(f"vector length {v.length} != {length}")
        acc.add(v.bits)
    return acc.freeze()


def spanning_forest(G: Graph) -> tuple[list[int], list[int], set[int]]:
    """BFS forest rooted at the lowest vertex of each component.

    Returns ``(parent, depth, tree_edge_ids)``; roots have parent -1.
    """
    parent = [-1] * G.n
    depth = [0] * G.n
    seen = [False] * G.n
    tree = set()
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(G.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    tree.add(G.edge_id(u, w))
                    queue.append(w)
    return parent, depth, tree


def fundamental_cycles(G: Graph) -> list[tuple[tuple[int, int], EdgeVector]]:
    """One cycle per non-tree edge, in edge order."""
    parent, depth, tree = spanning_forest(G)
    out = []
    for idx, (u, v) in enumerate(G.edges):
        if idx in tree:
            continue
        bits = 1 << idx
        a, b = u, v
        while depth[a] > depth[b]:
            bits ^= 1 << G.edge_id(a, parent[a])
            a = parent[a]
        while depth[b] > depth[a]:
            bits ^= 1 << G.edge_id(b, parent[b])
            b = parent[b]
        while a != b:
            bits ^= 1 << G.edge_id(a, parent[a])
            bits ^= 1 << G.edge_id(b, parent[b])
            a, b = parent[a], parent[b]
        out.append(((u, v), EdgeVector(bits, G.m)))
    return out


def cycle_space_basis(G: Graph) -> Gf2Basis:
    return basis_from_vectors(G.m, (vec for _, vec in fundamental_cycles(G)))


def cycle_space_dim(G: Graph) -> int:
    return G.m - G.n + len(G.components())


def orthogonal_complement(B: Gf2Basis, m: int) -> Gf2Basis:
    """Basis of ``{w : w . v = 0 for every v in span(B)}``."""
    if B.length != m:
        raise LengthMismatch(f"basis length {B.length} != {m}")
    # fully reduced echelon form, pivot = lowest coordinate
    rows = {}
    for p in sorted(B.pivots):
        r = B.pivots[p]
        for q, s in rows.items():
            if r >> q & 1:
                r ^= s
        p = (r & -r).bit_length() - 1
        for q in list(rows):
            if rows[q] >> p & 1:
                rows[q] ^= r
        rows[p] = r
    pivot_mask = 0
    for p in rows:
        pivot_mask |= 1 << p
    acc = SpanBuilder(m)
    for f in range(m):
        if pivot_mask >> f & 1:
            continue
        w = 1 << f
        for p, r in rows.items():
            if r >> f & 1:
                w |= 1 << p
        acc.add(w)
    return acc.freeze()
