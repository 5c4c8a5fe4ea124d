"""Linear forests, bipartite matchings, (m, d)-connectivity and greedy
disjoint-path routing."""

from __future__ import annotations

import itertools
import math
import warnings
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    BudgetExceeded,
    DegreeViolation,
    NonEdge,
    NotBipartiteInput,
    NotDisjoint,
    OutOfRange,
    PairsOverlap,
)
from .graph import Graph, VertexSet, as_mask, iter_bits


@dataclass(frozen=True)
class LinearForest:
    """Vertex-disjoint paths; single-vertex paths are allowed.

    ``ends`` and ``interior`` follow the usual End/In split: the single
    vertex of a trivial path is an end. The identity
    ``|End| + |In| = |In| + 2|P| = |V| = |E| + |P|`` holds over the
    non-trivial paths; ``trivial`` counts the single-vertex ones.
    """

    paths: tuple[tuple[int, ...], ...]
    ends: frozenset[int]
    interior: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    trivial: int = 0

    @property
    def num_paths(self) -> int:
        return len(self.paths)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[int]:
        return self.ends | self.interior

    def vertex_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask


def validate_udp(G: Graph, paths, allow_trivial: bool = True) -> LinearForest:
    """Check that ``paths`` is a union of disjoint paths in G.

    With ``allow_trivial=False`` the strict reading ``1 <= max degree <= 2``
    applies: single-vertex paths and the empty forest are rejected.
    """
    owner: dict[int, int] = {}
    ends, interior, edges = set(), set(), []
    clean = []
    trivial = 0
    for idx, raw in enumerate(paths):
        p = tuple(int(v) for v in raw)
        if not p:
            raise DegreeViolation(f"path {idx} is empty")
        for v in p:
            if not 0 <= v < G.n:
                raise OutOfRange(f"vertex {v} outside graph")
            if v in owner:
                if owner[v] == idx:
                    raise DegreeViolation(f"path {idx} revisits vertex {v}")
                raise NotDisjoint(f"vertex {v} lies on paths {owner[v]} and {idx}")
            owner[v] = idx
        for a, b in zip(p, p[1:]):
            if not G.has_edge(a, b):
                raise NonEdge(f"({a}, {b}) is not an edge")
            edges.append((a, b) if a < b else (b, a))
        if len(p) == 1:
            if not allow_trivial:
                raise DegreeViolation(f"path {idx} is a single vertex")
            trivial += 1
            ends.add(p[0])
        else:
            ends.update((p[0], p[-1]))
            interior.update(p[1:-1])
        clean.append(p)
    if not allow_trivial and not edges:
        raise DegreeViolation("empty forest has maximum degree 0")
    lf = LinearForest(tuple(clean), frozenset(ends), frozenset(interior), tuple(edges), trivial)
    nontrivial = lf.num_paths - trivial
    nt_ends = len(ends) - trivial
    nt_vertices = nt_ends + len(interior)
    assert nt_ends + len(interior) == len(interior) + 2 * nontrivial == nt_vertices
    assert nt_vertices == len(edges) + nontrivial
    return lf


def forest_from_edges(G: Graph, edges) -> LinearForest:
    """Assemble a LinearForest from an edge set with max degree <= 2, acyclic."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    seen = set()
    paths = []
    for start in sorted(nbrs):
        if start in seen or len(nbrs[start]) != 1:
            continue
        path = [start]
        seen.add(start)
        prev, cur = start, nbrs[start][0]
        while True:
            path.append(cur)
            seen.add(cur)
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        paths.append(path)
    if len(seen) != len(nbrs):
        raise DegreeViolation("edge set contains a cycle")
    return validate_udp(G, paths)


# -- maximum linear forest ------------------------------------------------

def max_linear_forest(G: Graph) -> tuple[int, LinearForest]:
    """Maximum number of edges in a linear forest of G (exact)."""
    if G.m == 0:
        return 0, validate_udp(G, [])
    deg = G.degrees()
    order = sorted(range(G.m), key=lambda i: (-(deg[G.edges[i][0]] + deg[G.edges[i][1]]), i))
    edges = [G.edges[i] for i in order]
    m = len(edges)
    cap = G.n - len(G.components())

    # remaining incidences from position i onward
    rem = [[0] * G.n for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        row = rem[i + 1][:]
        u, v = edges[i]
        row[u] += 1
        row[v] += 1
        rem[i] = row

    fdeg = [0] * G.n
    end = list(range(G.n))
    chosen: list[int] = []
    best = [0, []]

    def bound(i, count):
        r = rem[i]
        slack = 0
        for v in range(G.n):
            s = 2 - fdeg[v]
            slack += s if s < r[v] else r[v]
        return count + min(m - i, slack // 2)

    def search(i, count):
        if count > best[0]:
            best[0] = count
            best[1] = chosen[:]
        if best[0] >= cap or i == m:
            return
        if bound(i, count) <= best[0]:
            return
        u, v = edges[i]
        if fdeg[u] < 2 and fdeg[v] < 2 and end[u] != v:
            a, b = end[u], end[v]
            saved = (end[a], end[b])
            end[a], end[b] = b, a
            fdeg[u] += 1
            fdeg[v] += 1
            chosen.append(i)
            search(i + 1, count + 1)
            chosen.pop()
            fdeg[u] -= 1
            fdeg[v] -= 1
            end[a], end[b] = saved
            if best[0] >= cap:
                return
        search(i + 1, count)

    search(0, 0)
    witness = forest_from_edges(G, [edges[i] for i in best[1]])
    return best[0], witness


# -- bipartite matching ---------------------------------------------------

@dataclass(frozen=True)
class MatchingResult:
    matching: tuple[tuple[int, int], ...]
    cover: VertexSet
    size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "size", len(self.matching))


def bipartite_matching(G: Graph, X, Y) -> MatchingResult:
    """Maximum matching of the X-Y edges with a König vertex cover.

    Edges with an endpoint outside ``X | Y`` are ignored; an edge inside X
    or inside Y is an error.
    """
    xm, ym = as_mask(G.n, X), as_mask(G.n, Y)
    if xm & ym:
        raise NotBipartiteInput("X and Y overlap")
    for u, v in G.edges:
        if (xm >> u & 1 and xm >> v & 1) or (ym >> u & 1 and ym >> v & 1):
            raise NotBipartiteInput(f"edge ({u}, {v}) lies inside one side")
    xs = list(iter_bits(xm))
    mate: dict[int, int] = {}

    def augment(x, seen):
        for y in iter_bits(G.adj[x] & ym):
            if y in seen:
                continue
            seen.add(y)
            if y not in mate or augment(mate[y], seen):
                mate[y] = x
                return True
        return False

    for x in xs:
        augment(x, set())
    match_x = {x: y for y, x in mate.items()}
    # König: alternate from unmatched X vertices
    reach_x = {x for x in xs if x not in match_x}
    reach_y: set[int] = set()
    queue = deque(reach_x)
    while queue:
        x = queue.popleft()
        for y in iter_bits(G.adj[x] & ym):
            if y in reach_y:
                continue
            reach_y.add(y)
            x2 = mate.get(y)
            if x2 is not None and x2 not in reach_x:
                reach_x.add(x2)
                queue.append(x2)
    cover = [x for x in xs if x not in reach_x] + sorted(reach_y)
    matching = tuple(sorted((x, y) for x, y in match_x.items()))
    res = MatchingResult(matching, VertexSet(G.n, cover))
    assert res.size == len(res.cover)
    return res


# -- (m, d)-connectivity ---------------------------------------------------

@dataclass(frozen=True)
class MDResult:
    ok: bool
    removed: tuple[int, ...] | None = None
    pair: tuple[int, int] | None = None
    distance: float | None = None

    def __bool__(self) -> bool:
        return self.ok


def _bfs_layers(G: Graph, src: int, allowed: int) -> dict[int, int]:
    dist = {src: 0}
    frontier = 1 << src
    seen = frontier
    k = 0
    while frontier:
        k += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        nxt &= allowed & ~seen
        for v in iter_bits(nxt):
            dist[v] = k
        seen |= nxt
        frontier = nxt
    return dist


def is_md_connected(G: Graph, m: int, d: int, limit: int = 1_000_000) -> MDResult:
    """Exhaustively test that deleting any <= m vertices leaves a connected
    graph of diameter <= d."""
    if m < 0 or d < 0:
        raise OutOfRange("m and d must be non-negative")
    if m >= G.n:
        raise OutOfRange(f"m={m} must be smaller than n={G.n}")
    cost = sum(math.comb(G.n, i) for i in range(m + 1))
    if cost > limit:
        raise BudgetExceeded(f"{cost} deletion sets exceed limit {limit}", bound=cost)
    for size in range(m + 1):
        for U in itertools.combinations(range(G.n), size):
            umask = 0
            for u in U:
                umask |= 1 << u
            allowed = G.full_mask & ~umask
            for s in iter_bits(allowed):
                dist = _bfs_layers(G, s, allowed)
                for t in iter_bits(allowed):
                    if t not in dist:
                        return MDResult(False, U, (s, t), math.inf)
                    if dist[t] > d:
                        return MDResult(False, U, (s, t), dist[t])
    return MDResult(True)


def _shortest_path(G: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    parent = {s: -1}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            path = [t]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in iter_bits(G.adj[u] & allowed):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def disjoint_paths(G: Graph, pairs, m: int, d: int) -> list[list[int]] | None:
    """Route the pairs greedily, in order, by paths of length <= d.

    Pair ``j`` is routed by BFS in G minus the vertices of earlier paths
    and the endpoints of later pairs. Returns None when some pair cannot
    be routed within length d.
    """
    pairs = [(int(a), int(b)) for a, b in pairs]
    seen: set[int] = set()
    for a, b in pairs:
        for v in (a, b):
            if not 0 <= v < G.n:
                raise OutOfRange(f"vertex {v} outside graph")
        if a == b or a in seen or b in seen:
            raise PairsOverlap(f"pair ({a}, {b}) shares a vertex")
        seen.update((a, b))
    limit = math.ceil(m / (d + 1)) if d + 1 > 0 else 0
    if len(pairs) > limit:
        warnings.warn(
            f"{len(pairs)} pairs exceeds ceil(m/(d+1)) = {limit}; success not guaranteed",
            stacklevel=2,
        )
    used = 0
    out = []
    for j, (a, b) in enumerate(pairs):
        later = 0
        for c, e in pairs[j + 1:]:
            later |= (1 << c) | (1 << e)
        allowed = G.full_mask & ~(used | later)
        path = _shortest_path(G, a, b, allowed)
        if path is None or len(path) - 1 > d:
            return None
        for v in path:
            used |= 1 << v
        out.append(path)
    return out
