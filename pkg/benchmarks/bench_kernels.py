"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends are imported directly, so the HAMGEN_PURE_PYTHON switch
does not matter here. Each row reports the best of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import time

from hamgen import _pycore
from hamgen.constructions import complete_graph, construction_a
from hamgen.generation import find_R

try:
    from hamgen import _core
except ImportError:  # extension not built
    _core = None


def _count(backend, G):
    hits = [0]

    def emit(order):
        hits[0] += 1
        return False

    status, nodes = backend.hamilton_search(G.n, G.adj, [0] * G.n, 0, True, emit)
    return hits[0], nodes


def _forced(backend, G, u, v):
    forced = [0] * G.n
    forced[u] |= 1 << v
    forced[v] |= 1 << u
    return backend.hamilton_search(G.n, G.adj, forced, 0, False, lambda order: True)


def _cut(backend, G, radj, rsize):
    return backend.cut_violation(G.n, G.adj, radj, rsize)


def _r_adj(G, bits):
    adj = [0] * G.n
    for i, (u, v) in enumerate(G.edges):
        if bits >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def cases():
    k8 = complete_graph(8)
    g1 = construction_a(3, 1).graph
    g3 = construction_a(3, 3).graph
    b1, b2 = 7, 8
    yield "enumerate K8 (2520 cycles)", lambda be: _count(be, k8)
    yield "enumerate G3 k=3 (8640 cycles)", lambda be: _count(be, g3)
    yield "enumerate G1 k=3 (86400 cycles)", lambda be: _count(be, g1)
    yield "no cycle through b1b2, G1 k=3", lambda be: _forced(be, g1, b1, b2)
    for k, label in ((2, "n=9"), (3, "n=13")):
        G = construction_a(k, 3).graph
        R = find_R(G).R
        radj = _r_adj(G, R.edges.bits)
        rsize = R.edges.weight
        yield f"cut scan G3 {label} (2^{G.n - 1} partitions)", (lambda G, radj, rsize: lambda be: _cut(be, G, radj, rsize))(G, radj, rsize)


def best_of(fn, backend, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _core is None:
        print("compiled extension missing; only the Python kernel is available")
    print(f"{'case':44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases():
        tp, rp = best_of(fn, _pycore, args.repeat)
        if _core is not None:
            tc, rc = best_of(fn, _core, args.repeat)
            assert rp == rc, f"backends disagree on {name}: {rp} vs {rc}"
            print(f"{name:44} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")
        else:
            print(f"{name:44} {tp:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
