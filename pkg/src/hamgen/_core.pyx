# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors ``_pycore`` exactly."""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64

EXHAUSTED = 0
STOPPED = 1
CAPPED = 2


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef struct Search:
    int n
    uint64_t full
    uint64_t adj[MAXN]
    uint64_t forced[MAXN]
    int path[MAXN]
    int64_t nodes
    int64_t max_nodes
    int canonical
    int status


cdef bint feasible(Search* s, int cur, uint64_t visited) nogil:
    cdef uint64_t rest = s.full & ~visited
    cdef uint64_t avail, m, low, allowed, seen, frontier, nxt, f
    if rest == 0:
        return True
    if (s.adj[cur] & rest) == 0 or (s.adj[0] & rest) == 0:
        return False
    avail = rest | bit(cur) | 1
    m = rest
    while m:
        if popc(s.adj[ctz(m)] & avail) < 2:
            return False
        m &= m - 1
    allowed = rest | bit(cur)
    seen = bit(cur)
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= s.adj[ctz(f)]
            f &= f - 1
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return (seen & rest) == rest


cdef bint extend(Search* s, int cur, int pred, int depth, uint64_t visited, object visitor) except -1:
    cdef uint64_t rest, need, cand, back, nv
    cdef int u, i
    if depth == s.n:
        if (s.adj[cur] & 1) == 0:
            return False
        if s.forced[cur] & ~(bit(pred) | 1):
            return False
        if s.forced[0] & ~(bit(s.path[1]) | bit(cur)):
            return False
        if s.canonical and s.path[1] > cur:
            return False
        order = [s.path[i] for i in range(s.n)]
        if visitor(order):
            s.status = STOPPED
            return True
        return False
    rest = s.full & ~visited
    if pred >= 0:
        need = s.forced[cur] & ~bit(pred)
    else:
        need = 0
    if need:
        if (need & (need - 1)) or (need & visited):
            return False
        cand = need & s.adj[cur]
    else:
        cand = s.adj[cur] & rest
    while cand:
        u = ctz(cand)
        cand &= cand - 1
        s.nodes += 1
        if s.max_nodes and s.nodes > s.max_nodes:
            s.status = CAPPED
            return True
        back = s.forced[u] & visited & ~bit(cur)
        if back and (back != 1 or depth + 1 != s.n):
            continue
        nv = visited | bit(u)
        s.path[depth] = u
        if not feasible(s, u, nv):
            continue
        if extend(s, u, cur, depth + 1, nv, visitor):
            return True
    return False


def hamilton_search(int n, adj, forced, max_nodes, canonical, visitor):
    cdef Search s
    cdef int i
    if n > MAXN:
        raise ValueError("n exceeds 64")
    s.n = n
    s.full = (bit(n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for i in range(n):
        s.adj[i] = adj[i]
        s.forced[i] = forced[i]
        s.path[i] = 0
    s.nodes = 0
    s.max_nodes = max_nodes or 0
    s.canonical = 1 if canonical else 0
    s.status = EXHAUSTED
    if n >= 1:
        extend(&s, 0, -1, 1, 1, visitor)
    return s.status, s.nodes


def cut_violation(int n, gadj, radj, int r_size):
    cdef uint64_t g[MAXN]
    cdef uint64_t r[MAXN]
    cdef int gdeg[MAXN]
    cdef int rdeg[MAXN]
    cdef uint64_t A = 0, b, rest
    cdef int64_t cut_g = 0, cut_r = 0
    cdef uint64_t i, total
    cdef int v, ag, ar
    if r_size == 0:
        return 0
    for v in range(n):
        g[v] = gadj[v]
        r[v] = radj[v]
        gdeg[v] = popc(g[v])
        rdeg[v] = popc(r[v])
    total = bit(n - 1)
    with nogil:
        i = 1
        while i < total:
            v = ctz(i)
            b = bit(v)
            rest = A & ~b
            ag = popc(g[v] & rest)
            ar = popc(r[v] & rest)
            if A & b:
                cut_g += 2 * ag - gdeg[v]
                cut_r += 2 * ar - rdeg[v]
                A = rest
            else:
                cut_g += gdeg[v] - 2 * ag
                cut_r += rdeg[v] - 2 * ar
                A = A | b
            if 2 * cut_r < cut_g or (cut_r == r_size and cut_g == cut_r):
                break
            i += 1
        if i >= total:
            A = <uint64_t>0xFFFFFFFFFFFFFFFF
    if A == <uint64_t>0xFFFFFFFFFFFFFFFF:
        return -1
    return A
