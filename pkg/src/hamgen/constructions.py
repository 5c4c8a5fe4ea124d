"""Graph generators: the tight examples G1, G2, G3 and test families."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import EvenN, KTooSmall, OutOfRange
from .graph import Graph, VertexSet
from .hamilton import is_hamilton_connected

RNG_ALGORITHM = "python-random-MT19937"


@dataclass(frozen=True)
class LabeledConstruction:
    graph: Graph
    X: VertexSet
    Y: VertexSet
    a: tuple[int, int, int]
    b: tuple[int, int, int]
    k: int
    variant: int

    @property
    def n(self) -> int:
        return self.graph.n


def construction_a(k: int, variant: int) -> LabeledConstruction:
    """G1, G2 or G3 on ``n = 4k + 1`` vertices.

    X = {0..2k}, Y = {2k+1..4k}, a_i = i - 1 and b_i = 2k + i.
    """
    if k < 2:
        raise KTooSmall("construction needs k >= 2")
    if variant not in (1, 2, 3):
        raise OutOfRange("variant must be 1, 2 or 3")
    n = 4 * k + 1
    X = list(range(2 * k + 1))
    Y = list(range(2 * k + 1, n))
    a = (0, 1, 2)
    b = (2 * k + 1, 2 * k + 2, 2 * k + 3)
    if variant == 1:
        edges = {(x, y) for x in X for y in Y}
        edges |= {(a[0], a[1]), (b[0], b[1])}
    elif variant == 2:
        left = X + [b[0]]
        right = Y + [a[0]]
        edges = {tuple(sorted(p)) for p in itertools.combinations(left, 2)}
        edges |= {tuple(sorted(p)) for p in itertools.combinations(right, 2)}
        edges.discard((a[0], b[0]))
    else:
        edges = set(itertools.combinations(X, 2)) | set(itertools.combinations(Y, 2))
        edges |= {(a[i], b[i]) for i in range(3)}
    return LabeledConstruction(Graph(n, edges), VertexSet(n, X), VertexSet(n, Y), a, b, k, variant)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OutOfRange("a cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(x, p + y) for x in range(p) for y in range(q)])


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Each pair, in lexicographic order, is an edge with probability p."""
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def sample_dirac_hc(n: int, rng: random.Random, p: float = 0.55, attempts: int = 10_000):
    """Rejection sampler behind :func:`random_dirac_hc_graph`.

    Returns ``(graph or None, attempts used)``.
    """
    if n % 2 == 0:
        raise EvenN("the sampler targets odd n")
    if n < 5:
        raise OutOfRange("n must be at least 5")
    need = (n - 1) // 2
    for attempt in range(1, attempts + 1):
        G = gnp(n, p, rng)
        if G.min_degree() < need:
            continue
        if is_hamilton_connected(G)[0]:
            return G, attempt
    return None, attempts


def random_dirac_hc_graph(n: int, seed: int, attempts: int = 10_000, p: float = 0.55) -> Graph | None:
    """A seeded random graph with min degree >= (n-1)/2 that is
    Hamilton-connected, or None after ``attempts`` rejections."""
    return sample_dirac_hc(n, random.Random(seed), p, attempts)[0]
