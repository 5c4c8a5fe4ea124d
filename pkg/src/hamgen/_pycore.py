"""Pure-Python hot kernels.

Reference implementation of the routines in ``_core.pyx``; both must
produce identical results (same emission order, same node counts).
"""

EXHAUSTED = 0
STOPPED = 1
CAPPED = 2


def hamilton_search(n, adj, forced, max_nodes, canonical, visitor):
    """Depth-first Hamilton cycle search rooted at vertex 0.

    ``adj`` and ``forced`` are per-vertex neighbour bitmasks; every cycle
    passed to ``visitor`` contains all forced edges. With ``canonical`` set,
    only the orientation whose second vertex is smaller than its last is
    emitted. ``visitor(order)`` returning a truthy value stops the search.

    Returns ``(status, nodes)``.
    """
    full = (1 << n) - 1
    path = [0] * n
    nodes = 0
    status = EXHAUSTED

    def feasible(cur, visited):
        rest = full & ~visited
        if not rest:
            return True
        if not adj[cur] & rest or not adj[0] & rest:
            return False
        avail = rest | (1 << cur) | 1
        m = rest
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if (adj[w] & avail).bit_count() < 2:
                return False
            m ^= low
        allowed = rest | (1 << cur)
        seen = 1 << cur
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen & rest == rest

    def extend(cur, pred, depth, visited):
        nonlocal nodes, status
        if depth == n:
            if not adj[cur] & 1:
                return False
            if forced[cur] & ~((1 << pred) | 1):
                return False
            if forced[0] & ~((1 << path[1]) | (1 << cur)):
                return False
            if canonical and path[1] > cur:
                return False
            if visitor(path[:]):
                status = STOPPED
                return True
            return False
        rest = full & ~visited
        if pred >= 0:
            need = forced[cur] & ~(1 << pred)
        else:
            need = 0
        if need:
            if need & (need - 1) or need & visited:
                return False
            cand = need & adj[cur]
        else:
            cand = adj[cur] & rest
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            nodes += 1
            if max_nodes and nodes > max_nodes:
                status = CAPPED
                return True
            back = forced[u] & visited & ~(1 << cur)
            if back and (back != 1 or depth + 1 != n):
                continue
            nv = visited | low
            path[depth] = u
            if not feasible(u, nv):
                continue
            if extend(u, cur, depth + 1, nv):
                return True
        return False

    if n >= 1:
        extend(0, -1, 1, 1)
    return status, nodes


def cut_violation(n, gadj, radj, r_size):
    """Scan every partition ``A | B`` with vertex ``n-1`` in B.

    A partition violates the condition when ``2 e_R(A,B) < e_G(A,B)`` or
    when R equals the bipartite graph ``G[A,B]``. Partitions are visited in
    reflected Gray-code order; the first violating A (as a mask) is
    returned, or -1 if none exists.
    """
    if r_size == 0:
        return 0
    gdeg = [a.bit_count() for a in gadj]
    rdeg = [a.bit_count() for a in radj]
    A = 0
    cut_g = 0
    cut_r = 0
    total = 1 << (n - 1)
    for i in range(1, total):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        rest = A & ~bit
        ag = (gadj[v] & rest).bit_count()
        ar = (radj[v] & rest).bit_count()
        if A & bit:
            cut_g += 2 * ag - gdeg[v]
            cut_r += 2 * ar - rdeg[v]
            A = rest
        else:
            cut_g += gdeg[v] - 2 * ag
            cut_r += rdeg[v] - 2 * ar
            A |= bit
        if 2 * cut_r < cut_g or (cut_r == r_size and cut_g == cut_r):
            return A
    return -1
