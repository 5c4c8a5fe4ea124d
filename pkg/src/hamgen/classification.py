"""Dense/two-clique/bipartite trichotomy, the partition refinements that
feed the three sufficient conditions, and exact hypothesis ledgers.

Every inequality is evaluated over :class:`fractions.Fraction` and stored
with both sides so a ledger can be re-derived from ``(G, sets, params)``.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadSizes, OutOfRange, SearchCapped, ShapeMismatch
from .graph import Graph, VertexSet, as_mask, degree_stats, edges_between, edges_inside, induced, iter_bits
from .hamilton import SearchBudget, is_hamilton_connected
from .structures import bipartite_matching, max_linear_forest

SHAPES = ("biclique", "bipartite", "dense")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class ThresholdParams:
    alpha: Fraction = Fraction(1, 10)
    beta: Fraction = Fraction(1, 50)
    eta: Fraction = Fraction(1, 4)
    sigma: Fraction = Fraction(1, 40)
    gamma: Fraction = Fraction(1, 20)

    def __post_init__(self):
        for f in dataclasses.fields(self):
            val = _frac(getattr(self, f.name))
            if not 0 < val < 1:
                raise OutOfRange(f"{f.name}={val} must lie in (0, 1)")
            object.__setattr__(self, f.name, val)

    def with_alpha(self, alpha) -> ThresholdParams:
        return dataclasses.replace(self, alpha=_frac(alpha))

    def hierarchy(self) -> dict[str, bool]:
        """The intended orderings; reported, never enforced."""
        return {
            "beta<alpha": self.beta < self.alpha,
            "alpha<eta": self.alpha < self.eta,
            "eta<sigma": self.eta < self.sigma,
            "gamma<alpha": self.gamma < self.alpha,
        }

    def as_dict(self) -> dict[str, str]:
        return {f.name: str(getattr(self, f.name)) for f in dataclasses.fields(self)}


# -- ledger ------------------------------------------------------------------

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class LedgerEntry:
    """``lhs relation rhs``; ``lhs`` is None for a min/max over an empty
    set, which passes vacuously. ``ok`` is None when undecided."""

    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    relation: str
    ok: bool | None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "relation": self.relation,
            "pass": self.ok,
        }


def entry(name: str, lhs, relation: str, rhs) -> LedgerEntry:
    if lhs is None:
        return LedgerEntry(name, None, Fraction(rhs), relation, True)
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return LedgerEntry(name, lhs, rhs, relation, _RELATIONS[relation](lhs, rhs))


def ledger_ok(ledger) -> bool | None:
    """False if any entry fails, None if any is undecided, else True."""
    vals = [e.ok for e in ledger]
    if False in vals:
        return False
    if None in vals:
        return None
    return True


def failed(ledger) -> list[LedgerEntry]:
    return [e for e in ledger if e.ok is False]


# degree helpers that tolerate empty sides
def _min_into(G: Graph, target: int, sources: int):
    return degree_stats(G, target, sources)[0] if sources else None


def _max_into(G: Graph, target: int, sources: int):
    return degree_stats(G, target, sources)[1] if sources else None


# -- witnesses -----------------------------------------------------------------

@dataclass
class PartitionWitness:
    """``case`` is Case1, Case2, Case3, Unrefinable or Labelled.

    Case2/Case3 carry the trichotomy set ``A``; witnesses built for the
    sufficient conditions carry ``X, Y, Z`` (a partition of V) and, for the
    bipartite shape, the provenance sets ``Z1, Z2, Z3``.
    """

    case: str
    n: int
    A: VertexSet | None = None
    X: VertexSet | None = None
    Y: VertexSet | None = None
    Z: VertexSet | None = None
    Z1: VertexSet | None = None
    Z2: VertexSet | None = None
    Z3: VertexSet | None = None
    ledger: list[LedgerEntry] = field(default_factory=list)
    note: str = ""

    def __post_init__(self):
        if self.X is not None:
            xm, ym, zm = self.X.mask, self.Y.mask, self.Z.mask
            if xm & ym or xm & zm or ym & zm or (xm | ym | zm) != (1 << self.n) - 1:
                raise BadSizes("X, Y, Z must partition the vertex set")

    @property
    def has_xyz(self) -> bool:
        return self.X is not None

    @property
    def t(self) -> int:
        return len(self.X) - len(self.Y) - len(self.Z)

    def as_dict(self) -> dict:
        out = {"case": self.case, "note": self.note}
        for name in ("A", "X", "Y", "Z", "Z1", "Z2", "Z3"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val.sorted()
        out["ledger"] = [e.as_dict() for e in self.ledger]
        return out


def labelled_witness(G: Graph, X, Y, Z=()) -> PartitionWitness:
    vs = lambda S: VertexSet.from_mask(G.n, as_mask(G.n, S))  # noqa: E731
    return PartitionWitness("Labelled", G.n, X=vs(X), Y=vs(Y), Z=vs(Z))


# -- case 1 --------------------------------------------------------------------

@dataclass
class Case1Result:
    holds: bool | None  # None = inconclusive
    violator: tuple[VertexSet, VertexSet] | None
    checked: int
    exhaustive: bool
    size: int
    threshold: Fraction
    minimum: int | None = None  # smallest e(A, B) seen

    @property
    def inconclusive(self) -> bool:
        return self.holds is None


def _random_set(rng: random.Random, n: int, size: int) -> int:
    mask = 0
    for v in rng.sample(range(n), size):
        mask |= 1 << v
    return mask


def _descend(G: Graph, A: int, B: int) -> tuple[int, int, int]:
    """Best-improvement swaps (one vertex in, one out, on either side or
    on both at once) until e(A, B) stops decreasing."""
    full = G.full_mask
    cur = edges_between(G, A, B)
    while True:
        best = (cur, A, B)
        for side in (0, 1):
            S = A if side == 0 else B
            for out in iter_bits(S):
                for inn in iter_bits(full & ~S):
                    T = (S & ~(1 << out)) | (1 << inn)
                    val = edges_between(G, T, B) if side == 0 else edges_between(G, A, T)
                    if val < best[0]:
                        best = (val, T, B) if side == 0 else (val, A, T)
        # joint move for a vertex shared by A and B
        for out in iter_bits(A & B):
            for inn in iter_bits(full & ~(A | B)):
                swap = (1 << out) | (1 << inn)
                val = edges_between(G, A ^ swap, B ^ swap)
                if val < best[0]:
                    best = (val, A ^ swap, B ^ swap)
        if best[0] >= cur:
            return cur, A, B
        cur, A, B = best


def _min_pair(G: Graph, size: int, budget: int, rng: random.Random, restarts: int):
    """Smallest e(A, B) over |A| = |B| = size.

    Returns ``(value, A, B, exhaustive, checked)``; exhaustive when
    ``C(n, size)^2 <= budget``, otherwise the best of ``restarts`` local
    descents from random starts.
    """
    n = G.n
    if math.comb(n, size) ** 2 <= budget:
        subsets = []
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            subsets.append(mask)
        best = None
        checked = 0
        for A in subsets:
            for B in subsets:
                checked += 1
                val = edges_between(G, A, B)
                if best is None or val < best[0]:
                    best = (val, A, B)
        return best[0], best[1], best[2], True, checked
    best = None
    for _ in range(restarts):
        val, A, B = _descend(G, _random_set(rng, n, size), _random_set(rng, n, size))
        if best is None or val < best[0]:
            best = (val, A, B)
    return best[0], best[1], best[2], False, restarts


def case1_size(n: int, alpha: Fraction) -> int:
    return math.ceil((1 - alpha) * n / 2)


def verify_case1(G: Graph, p: ThresholdParams, budget: int = 1_000_000, seed: int = 0, restarts: int = 20) -> Case1Result:
    """Does ``e(A, B) >= alpha/2 n^2`` hold for all A, B of size at least
    ``(1 - alpha) n / 2``?

    e(A, B) only grows with A and B, so sets of the minimal size suffice.
    Exhaustive within ``budget`` pairs, otherwise a randomized search for a
    violator that reports inconclusive when none turns up.
    """
    n = G.n
    size = case1_size(n, p.alpha)
    thr = p.alpha / 2 * n * n
    if size == 0:
        return Case1Result(0 >= thr, None, 0, True, 0, thr, 0)
    val, A, B, exhaustive, checked = _min_pair(G, size, budget, random.Random(seed), restarts)
    if val < thr:
        pair = (VertexSet.from_mask(n, A), VertexSet.from_mask(n, B))
        return Case1Result(False, pair, checked, exhaustive, size, thr, val)
    return Case1Result(True if exhaustive else None, None, checked, exhaustive, size, thr, val)


def find_sparse_pair(G: Graph, p: ThresholdParams, budget: int = 1_000_000, seed: int = 0, restarts: int = 20):
    """``(A0, B0)`` with ``|A0| = |B0| = ceil(n/2)`` and
    ``e(A0, B0) < alpha n^2``, or None if the search finds none."""
    n = G.n
    h = math.ceil(Fraction(n, 2))
    val, A, B, _, _ = _min_pair(G, h, budget, random.Random(seed), restarts)
    if val < p.alpha * n * n:
        return VertexSet.from_mask(n, A), VertexSet.from_mask(n, B)
    return None


def pad_pair(G: Graph, A, B, size: int) -> tuple[VertexSet, VertexSet]:
    """Grow or shrink A and B to ``size`` vertices, greedily keeping
    e(A, B) small (lowest index breaks ties)."""
    masks = [as_mask(G.n, A), as_mask(G.n, B)]
    for side in (0, 1):
        while masks[side].bit_count() != size:
            grow = masks[side].bit_count() < size
            pool = G.full_mask & ~masks[side] if grow else masks[side]
            best = None
            for v in iter_bits(pool):
                trial = masks[:]
                trial[side] ^= 1 << v
                val = edges_between(G, trial[0], trial[1])
                if best is None or val < best[0]:
                    best = (val, v)
            masks[side] ^= 1 << best[1]
    return VertexSet.from_mask(G.n, masks[0]), VertexSet.from_mask(G.n, masks[1])


# -- cases 2 and 3 -------------------------------------------------------------

def verify_case2(G: Graph, A, p: ThresholdParams) -> list[LedgerEntry]:
    n, a = G.n, p.alpha
    am = as_mask(G.n, A)
    bm = G.full_mask & ~am
    return [
        entry("|A| >= (1/2-21a)n", am.bit_count(), ">=", (Fraction(1, 2) - 21 * a) * n),
        entry("|A| <= (1/2+21a)n", am.bit_count(), "<=", (Fraction(1, 2) + 21 * a) * n),
        entry("e(A,~A) <= 4a n^2", edges_between(G, am, bm), "<=", 4 * a * n * n),
        entry("delta(G[A]) >= n/5", _min_into(G, am, am), ">=", Fraction(n, 5)),
        entry("delta(G[~A]) >= n/5", _min_into(G, bm, bm), ">=", Fraction(n, 5)),
    ]


def verify_case3(G: Graph, A, p: ThresholdParams) -> list[LedgerEntry]:
    n, a = G.n, p.alpha
    am = as_mask(G.n, A)
    bm = G.full_mask & ~am
    cross = [d for d in (_min_into(G, bm, am), _min_into(G, am, bm)) if d is not None]
    return [
        entry("|A| >= (1/2-25a)n", am.bit_count(), ">=", (Fraction(1, 2) - 25 * a) * n),
        entry("|A| <= (1/2+25a)n", am.bit_count(), "<=", (Fraction(1, 2) + 25 * a) * n),
        entry("e(A,~A) >= (1/4-5a)n^2", edges_between(G, am, bm), ">=", (Fraction(1, 4) - 5 * a) * n * n),
        entry("e(A) <= 6a n^2", edges_inside(G, am), "<=", 6 * a * n * n),
        entry("delta(G[A,~A]) >= n/5", min(cross) if cross else None, ">=", Fraction(n, 5)),
    ]


def refine_partition(G: Graph, A0, B0, p: ThresholdParams) -> PartitionWitness:
    """Turn a sparse pair into a Case 2 or Case 3 set.

    Small overlap: X' = A0 - B0 and the vertices with few neighbours on
    their own side switch sides. Large overlap: X' = A0 & B0 and the
    vertices with few neighbours across switch. Anything in between is
    returned as Unrefinable.
    """
    n, a = G.n, p.alpha
    h = math.ceil(Fraction(n, 2))
    am, bm = as_mask(n, A0), as_mask(n, B0)
    if am.bit_count() != h or bm.bit_count() != h:
        raise BadSizes(f"A0 and B0 must both have ceil(n/2) = {h} vertices")
    full = G.full_mask
    inter = (am & bm).bit_count()
    lo = entry("|A0&B0| <= 5an", inter, "<=", 5 * a * n)
    hi = entry("|A0&B0| >= (1/2-5a)n", inter, ">=", (Fraction(1, 2) - 5 * a) * n)
    cut = Fraction(6 * n, 25)
    small = lo.ok
    if lo.ok and hi.ok:
        # both regimes apply when alpha is large for n; take the nearer one
        small = 2 * inter <= h
    if small:
        Xp = am & ~bm
        Yp = full & ~Xp
        W = sum(1 << x for x in iter_bits(Xp) if (G.adj[x] & Xp).bit_count() <= cut)
        Zm = sum(1 << y for y in iter_bits(Yp) if (G.adj[y] & Yp).bit_count() <= cut)
        case, ledger_fn = "Case2", verify_case2
    elif hi.ok:
        Xp = am & bm
        Yp = full & ~Xp
        W = sum(1 << x for x in iter_bits(Xp) if (G.adj[x] & Yp).bit_count() <= cut)
        Zm = sum(1 << y for y in iter_bits(Yp) if (G.adj[y] & Xp).bit_count() <= cut)
        case, ledger_fn = "Case3", verify_case3
    else:
        return PartitionWitness(
            "Unrefinable", n, ledger=[lo, hi],
            note="overlap lies strictly between the two regimes",
        )
    X = (Xp & ~W) | Zm
    Y = full & ~X
    A = VertexSet.from_mask(n, X)
    bound = 16 if case == "Case2" else 20
    ledger = [
        lo if case == "Case2" else hi,
        entry(f"|W| <= {bound}a n", W.bit_count(), "<=", bound * a * n),
        entry(f"|Z| <= {bound}a n", Zm.bit_count(), "<=", bound * a * n),
    ]
    ledger += ledger_fn(G, X, p)
    return PartitionWitness(case, n, A=A, ledger=ledger, note=f"~A = {VertexSet.from_mask(n, Y).sorted()}")


# -- sufficient-condition shapes -------------------------------------------------

def _shape_ledger(G: Graph, X: int, Y: int, Z: int, p: ThresholdParams, bipartite: bool) -> list[LedgerEntry]:
    n, a, eta = G.n, p.alpha, p.eta
    half = Fraction(1, 2)
    low = (half - a) * n
    high = (half + a) * n
    out = []
    if bipartite:
        out.append(entry("|Y| >= (1/2-a)n", Y.bit_count(), ">=", low))
        out.append(entry("|Y| <= |X|", Y.bit_count(), "<=", X.bit_count()))
        out.append(entry("|X| <= (1/2+a)n", X.bit_count(), "<=", high))
    else:
        for name, S in (("X", X), ("Y", Y)):
            out.append(entry(f"|{name}| >= (1/2-a)n", S.bit_count(), ">=", low))
            out.append(entry(f"|{name}| <= (1/2+a)n", S.bit_count(), "<=", high))
    out.append(entry("|Z| <= a n", Z.bit_count(), "<=", a * n))
    if bipartite:
        out.append(entry("Delta(G[X]) <= eta n", _max_into(G, X, X), "<=", eta * n))
        out.append(entry("delta_X(Y) >= (1/2-2eta)n", _min_into(G, X, Y), ">=", (half - 2 * eta) * n))
        out.append(entry("delta_Y(X) >= (1/2-2eta)n", _min_into(G, Y, X), ">=", (half - 2 * eta) * n))
    else:
        out.append(entry("e(X,Y) <= a n^2", edges_between(G, X, Y), "<=", a * n * n))
        out.append(entry("Delta_X(Y) <= eta n", _max_into(G, X, Y), "<=", eta * n))
        out.append(entry("Delta_Y(X) <= eta n", _max_into(G, Y, X), "<=", eta * n))
        out.append(entry("delta(X) >= (1/2-2eta)n", _min_into(G, X, X), ">=", (half - 2 * eta) * n))
        out.append(entry("delta(Y) >= (1/2-2eta)n", _min_into(G, Y, Y), ">=", (half - 2 * eta) * n))
    out.append(entry("delta_X(Z) >= 3/4 eta n", _min_into(G, X, Z), ">=", Fraction(3, 4) * eta * n))
    out.append(entry("delta_Y(Z) >= 3/4 eta n", _min_into(G, Y, Z), ">=", Fraction(3, 4) * eta * n))
    return out


def build_case2_partition(G: Graph, A, eta, alpha=Fraction(1, 10)) -> PartitionWitness:
    """Z = vertices with at least eta n neighbours across the A / ~A cut."""
    p = ThresholdParams(alpha=_frac(alpha), eta=_frac(eta))
    n = G.n
    am = as_mask(n, A)
    bm = G.full_mask & ~am
    thr = p.eta * n
    Z = 0
    for v in iter_bits(G.full_mask):
        other = bm if am >> v & 1 else am
        if (G.adj[v] & other).bit_count() >= thr:
            Z |= 1 << v
    X, Y = am & ~Z, bm & ~Z
    ledger = [entry("|Z| <= a n/2", Z.bit_count(), "<=", p.alpha * n / 2)]
    ledger += _shape_ledger(G, X, Y, Z, p, bipartite=False)
    vs = lambda m: VertexSet.from_mask(n, m)  # noqa: E731
    return PartitionWitness("Case2", n, A=vs(am), X=vs(X), Y=vs(Y), Z=vs(Z), ledger=ledger)


def build_case3_partition(G: Graph, A, eta, alpha=Fraction(1, 10)) -> PartitionWitness:
    """Z1: dense inside A; Z2: dense inside ~A; Z3: sparse from ~A into A.

    Z = Z1 | Z2 when |Z2| <= 2/3 alpha n; otherwise Z1 | Z2' | Z3 with Z2'
    the lowest-indexed floor(2/3 alpha n) - |Z3| vertices of Z2 - Z3.
    """
    p = ThresholdParams(alpha=_frac(alpha), eta=_frac(eta))
    n = G.n
    a, e = p.alpha, p.eta
    am = as_mask(n, A)
    bm = G.full_mask & ~am
    Z1 = sum(1 << v for v in iter_bits(am) if (G.adj[v] & am).bit_count() >= e * n)
    Z2 = sum(1 << v for v in iter_bits(bm) if (G.adj[v] & bm).bit_count() >= e * n)
    Z3 = sum(1 << v for v in iter_bits(bm) if (G.adj[v] & am).bit_count() < (Fraction(1, 2) - e) * n)
    cap = Fraction(2, 3) * a * n
    note = ""
    if Z2.bit_count() <= cap:
        Z = Z1 | Z2
        X, Y = am & ~Z, bm & ~Z
        if X.bit_count() < Y.bit_count():
            X, Y = Y, X
            note = "X and Y swapped so that |X| >= |Y|"
    else:
        want = max(0, math.floor(cap) - Z3.bit_count())
        pool = list(iter_bits(Z2 & ~Z3))[:want]
        Z2p = sum(1 << v for v in pool)
        Z = Z1 | Z2p | Z3
        X, Y = am & ~Z, bm & ~Z
        note = f"|Z2| > 2/3 a n; kept {len(pool)} vertices of Z2 - Z3"
    ledger = [
        entry("|Z1| <= a n/3", Z1.bit_count(), "<=", a * n / 3),
        entry("|Z3| <= a n/3", Z3.bit_count(), "<=", a * n / 3),
        entry("Z3 - Z2 empty", (Z3 & ~Z2).bit_count(), "==", 0),
    ]
    ledger += _shape_ledger(G, X, Y, Z, p, bipartite=True)
    if X:
        f, _ = max_linear_forest(induce_mask(G, X))
        dX = _min_into(G, X, X)
        ledger.append(entry("f(X) >= 2 delta(X)", f, ">=", 2 * dX))
    vs = lambda m: VertexSet.from_mask(n, m)  # noqa: E731
    return PartitionWitness(
        "Case3", n, A=vs(am), X=vs(X), Y=vs(Y), Z=vs(Z), Z1=vs(Z1), Z2=vs(Z2), Z3=vs(Z3),
        ledger=ledger, note=note,
    )


def induce_mask(G: Graph, mask: int) -> Graph:
    return induced(G, mask)[0]


# -- hypothesis reports ---------------------------------------------------------

@dataclass
class HypothesisReport:
    shape: str
    ledger: list[LedgerEntry]
    key_value: Fraction | None
    hypotheses: bool | None
    generation: str | None = None  # Generated / NotGenerated / Inconclusive
    generation_exhausted: bool = False

    @property
    def inconsistent(self) -> bool:
        """All hypotheses hold yet the graph is provably not generated."""
        return self.hypotheses is True and self.generation == "NotGenerated" and self.generation_exhausted

    def as_dict(self) -> dict:
        return {
            "shape": self.shape,
            "key_value": None if self.key_value is None else str(self.key_value),
            "hypotheses": self.hypotheses,
            "generation": self.generation,
            "inconsistent": self.inconsistent,
            "ledger": [e.as_dict() for e in self.ledger],
        }


def biclique_value(G: Graph, w: PartitionWitness) -> Fraction:
    """(4/3)|Z| + m(X, Y)."""
    m = bipartite_matching(_cross_only(G, w.X.mask, w.Y.mask), w.X, w.Y).size
    return Fraction(4, 3) * len(w.Z) + m


def _cross_only(G: Graph, X: int, Y: int) -> Graph:
    return Graph(G.n, [(u, v) for u, v in G.edges if (X >> u & 1 and Y >> v & 1) or (Y >> u & 1 and X >> v & 1)])


def lemma_hypothesis_report(
    G: Graph,
    w: PartitionWitness | None,
    p: ThresholdParams,
    shape: str,
    budget: SearchBudget | None = None,
    decide: bool = True,
    case1_budget: int = 1_000_000,
) -> HypothesisReport:
    """Evaluate every hypothesis of the chosen sufficient condition.

    With ``decide`` the graph's generation status is also computed, so a
    report whose hypotheses all hold on a non-generated graph is flagged.
    """
    if shape not in SHAPES:
        raise ShapeMismatch(f"unknown shape {shape!r}")
    n = G.n
    if shape in ("biclique", "bipartite"):
        if w is None or not w.has_xyz:
            raise ShapeMismatch(f"shape {shape} needs an X, Y, Z partition")
        X, Y, Z = w.X.mask, w.Y.mask, w.Z.mask
    ledger = [entry("n odd", n % 2, "==", 1)]
    key = None
    if shape == "biclique":
        ledger += _shape_ledger(G, X, Y, Z, p, bipartite=False)
        key = biclique_value(G, w)
        ledger.append(entry("4/3|Z| + m(X,Y) >= 10/3", key, ">=", Fraction(10, 3)))
    elif shape == "bipartite":
        ledger += _shape_ledger(G, X, Y, Z, p, bipartite=True)
        f = max_linear_forest(induce_mask(G, X))[0] if X else 0
        key = Fraction(w.t)
        ledger.append(entry("|X|-|Y|-|Z| <= f(X)-1", w.t, "<=", f - 1))
    else:
        ledger.append(entry("delta(G) >= (n-1)/2", G.min_degree(), ">=", Fraction(n - 1, 2)))
        try:
            hc = is_hamilton_connected(G, budget)[0]
            ledger.append(entry("Hamilton-connected", int(hc), "==", 1))
        except SearchCapped:
            ledger.append(LedgerEntry("Hamilton-connected", None, Fraction(1), "==", None))
        c1 = verify_case1(G, p.with_alpha(p.gamma), case1_budget)
        # lhs is the smallest e(A, B) found; only exhaustive runs decide
        ledger.append(LedgerEntry(
            "e(A,B) >= gamma/2 n^2 for |A|,|B| >= (1-gamma)n/2",
            None if c1.minimum is None else Fraction(c1.minimum), c1.threshold, ">=", c1.holds,
        ))
    rep = HypothesisReport(shape, ledger, key, ledger_ok(ledger))
    if decide and n >= 3:
        from .generation import is_hamilton_generated

        st = is_hamilton_generated(G, budget)
        rep.generation = st.kind
        rep.generation_exhausted = st.search is not None and st.search.exhausted
    return rep


# -- pipeline -------------------------------------------------------------------

@dataclass
class ClassifyResult:
    case: str  # Case1 / Case2 / Case3 / Unrefinable / Inconclusive / Labelled
    trichotomy: PartitionWitness | None
    witness: PartitionWitness | None
    report: HypothesisReport | None

    def exit_code(self) -> int:
        if self.case in ("Unrefinable", "Inconclusive") or self.report is None:
            return 2
        ok = ledger_ok(self.report.ledger)
        if ok is None:
            return 2
        return 0 if ok else 1


def classify(
    G: Graph,
    p: ThresholdParams | None = None,
    budget: SearchBudget | None = None,
    seed: int = 0,
    case1_budget: int = 1_000_000,
    decide: bool = True,
) -> ClassifyResult:
    """Run the trichotomy with gamma, then build the matching partition
    with eta and alpha and report on the corresponding sufficient
    condition (case 1 -> dense, case 2 -> biclique, case 3 -> bipartite)."""
    p = p or ThresholdParams()
    p24 = p.with_alpha(p.gamma)
    c1 = verify_case1(G, p24, case1_budget, seed)
    if c1.holds:
        w = PartitionWitness("Case1", G.n, note=f"checked {c1.checked} pairs of size {c1.size}")
        return ClassifyResult("Case1", w, w, lemma_hypothesis_report(G, w, p, "dense", budget, decide, case1_budget))
    h = math.ceil(Fraction(G.n, 2))
    if c1.violator is not None:
        pair = pad_pair(G, c1.violator[0], c1.violator[1], h)
    else:
        pair = find_sparse_pair(G, p24, case1_budget, seed)
    if pair is None or edges_between(G, pair[0], pair[1]) >= p24.alpha * G.n * G.n:
        return ClassifyResult("Inconclusive", None, None, None)
    tri = refine_partition(G, pair[0], pair[1], p24)
    if tri.case == "Unrefinable":
        return ClassifyResult("Unrefinable", tri, None, None)
    if tri.case == "Case2":
        w = build_case2_partition(G, tri.A, p.eta, p.alpha)
        shape = "biclique"
    else:
        w = build_case3_partition(G, tri.A, p.eta, p.alpha)
        shape = "bipartite"
    return ClassifyResult(tri.case, tri, w, lemma_hypothesis_report(G, w, p, shape, budget, decide, case1_budget))


def classify_construction(c, shape: str, p: ThresholdParams | None = None, budget: SearchBudget | None = None, decide: bool = True) -> ClassifyResult:
    """Report on a labelled construction using its own X / Y split.

    ``biclique`` runs the two-clique Z rule on A = X, ``bipartite`` the
    bipartite one, ``labelled-biclique`` / ``labelled-bipartite`` keep Z
    empty.
    """
    p = p or ThresholdParams()
    G = c.graph
    if shape == "biclique":
        w = build_case2_partition(G, c.X, p.eta, p.alpha)
    elif shape == "bipartite":
        w = build_case3_partition(G, c.X, p.eta, p.alpha)
    elif shape in ("labelled-biclique", "labelled-bipartite"):
        w = labelled_witness(G, c.X, c.Y)
        shape = shape.split("-")[1]
    elif shape == "dense":
        w = None
    else:
        raise ShapeMismatch(f"unknown shape {shape!r}")
    return ClassifyResult("Labelled", None, w, lemma_hypothesis_report(G, w, p, shape, budget, decide))
