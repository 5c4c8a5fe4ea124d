"""Brute-force reference implementations used only by the tests.

None of these share code with the package beyond the Graph container.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from hamgen.graph import Graph


def edge_set(G: Graph) -> set[frozenset]:
    return {frozenset(e) for e in G.edges}


def hamilton_cycles(G: Graph) -> list[tuple[int, ...]]:
    """All Hamilton cycles, rooted at 0 with order[1] < order[-1]."""
    E = edge_set(G)
    out = []
    for perm in itertools.permutations(range(1, G.n)):
        if perm[0] > perm[-1]:
            continue
        order = (0,) + perm
        if all(frozenset((order[i], order[(i + 1) % G.n])) in E for i in range(G.n)):
            out.append(order)
    return out


def hamilton_paths(G: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    E = edge_set(G)
    rest = [x for x in range(G.n) if x not in (u, v)]
    out = []
    for perm in itertools.permutations(rest):
        order = (u,) + perm + (v,)
        if all(frozenset((a, b)) in E for a, b in zip(order, order[1:])):
            out.append(order)
    return out


def gf2_rank(rows: list[list[int]]) -> int:
    """Gaussian elimination on explicit 0/1 lists."""
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def indicator(G: Graph, edges) -> list[int]:
    want = {frozenset(e) for e in edges}
    return [1 if frozenset(e) in want else 0 for e in G.edges]


def cycle_edges(order) -> list[tuple[int, int]]:
    return [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))]


def components(G: Graph) -> int:
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(G.n)})


def max_linear_forest(G: Graph) -> int:
    """n minus the minimum number of vertex-disjoint paths covering V,
    by subset DP (paths may be single vertices)."""
    n = G.n
    if n == 0:
        return 0
    adj = [[False] * n for _ in range(n)]
    for u, v in G.edges:
        adj[u][v] = adj[v][u] = True
    full = 1 << n
    # ends[S] = bitmask of vertices v such that some path covers S and ends at v
    ends = [0] * full
    for v in range(n):
        ends[1 << v] = 1 << v
    for S in range(1, full):
        e = ends[S]
        if not e:
            continue
        for v in range(n):
            if not e >> v & 1:
                continue
            for w in range(n):
                if not S >> w & 1 and adj[v][w]:
                    ends[S | 1 << w] |= 1 << w
    cover = [0] + [n + 1] * (full - 1)
    for S in range(1, full):
        low = S & -S
        sub = S
        best = n + 1
        while sub:
            if sub & low and ends[sub]:
                best = min(best, 1 + cover[S ^ sub])
            sub = (sub - 1) & S
        cover[S] = best
    return n - cover[full - 1]


def max_linear_forest_subsets(G: Graph) -> int:
    """Exhaustive over edge subsets; only for small m."""
    best = 0
    edges = list(G.edges)
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for sub in itertools.combinations(edges, r):
            deg = [0] * G.n
            parent = list(range(G.n))
            ok = True

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for u, v in sub:
                deg[u] += 1
                deg[v] += 1
                a, b = find(u), find(v)
                if deg[u] > 2 or deg[v] > 2 or a == b:
                    ok = False
                    break
                parent[a] = b
            if ok:
                return r
    return best


def max_matching(G: Graph, X: list[int], Y: list[int]) -> int:
    """DP over (index into X, mask of used Y)."""
    E = edge_set(G)
    ypos = {y: i for i, y in enumerate(Y)}

    @lru_cache(maxsize=None)
    def go(i: int, used: int) -> int:
        if i == len(X):
            return 0
        best = go(i + 1, used)
        for y in Y:
            b = 1 << ypos[y]
            if not used & b and frozenset((X[i], y)) in E:
                best = max(best, 1 + go(i + 1, used | b))
        return best

    return go(0, 0)


def bfs_dist(G: Graph, s: int, alive: set[int]) -> dict[int, int]:
    nbrs = {v: [] for v in alive}
    for u, v in G.edges:
        if u in alive and v in alive:
            nbrs[u].append(v)
            nbrs[v].append(u)
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_bipartite(a: int, b: int, p: float, rng: random.Random) -> tuple[Graph, list[int], list[int]]:
    X = list(range(a))
    Y = list(range(a, a + b))
    return Graph(a + b, [(x, y) for x in X for y in Y if rng.random() < p]), X, Y


def all_cycles(G: Graph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Every cycle once (rooted at its minimum, order[1] < order[-1])."""
    E = edge_set(G)
    out = []
    top = max_len or G.n
    for L in range(3, top + 1):
        for combo in itertools.combinations(range(G.n), L):
            r = combo[0]
            for perm in itertools.permutations(combo[1:]):
                if perm[0] > perm[-1]:
                    continue
                order = (r,) + perm
                if all(frozenset((order[i], order[(i + 1) % L])) in E for i in range(L)):
                    out.append(order)
    return out


def random_switcher_instance(rng: random.Random, k: int, extra: int):
    """A graph built around a parity-switcher with a known connecting path.

    Returns ``(G, cycle, paths, P)`` or None when the vertex budget leaves
    no room for both touch vertices.
    """
    n = 2 * k + 2 + extra
    verts = list(range(n))
    rng.shuffle(verts)
    cyc = verts[:2 * k]
    pool = verts[2 * k:]
    v = [None] + cyc
    edges = {tuple(sorted((cyc[i], cyc[(i + 1) % (2 * k)]))) for i in range(2 * k)}

    def chain(seq):
        for a, b in zip(seq, seq[1:]):
            edges.add(tuple(sorted((a, b))))
        return list(seq)

    u1 = pool.pop()
    uk = pool.pop()
    paths = [chain([v[1], u1])]
    for i in range(2, k + 1):
        mid = [pool.pop()] if len(pool) > 0 and rng.random() < 0.5 else []
        paths.append(chain([v[i]] + mid + [v[2 * k - i + 2]]))
    paths.append(chain([v[k + 1], uk]))
    P = chain([u1] + pool + [uk])
    for _ in range(n):
        a, b = rng.sample(range(n), 2)
        edges.add(tuple(sorted((a, b))))
    return Graph(n, edges), cyc, paths, P
