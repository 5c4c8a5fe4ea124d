"""Command-line front end.

Exit codes: ``check`` returns 0 (generated), 1 (not generated) or 2
(inconclusive); ``classify`` 0 / 1 / 2 for a clean ledger, a failed
hypothesis, or no verdict; ``survey`` 3 on a consistency violation.
Usage errors exit 64, bad input data 65, I/O failures 74.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .classification import ThresholdParams, classify, classify_construction
from .constructions import (
    RNG_ALGORITHM,
    complete_graph,
    construction_a,
    cycle_graph,
    random_dirac_hc_graph,
)
from .errors import HamgenError
from .generation import check_R, find_R, is_hamilton_generated, non_generation_certificates
from .graph import Graph, as_mask, read_edge_list
from .hamilton import SearchBudget
from .report import (
    build_report,
    certificate_records,
    dumps,
    find_r_record,
    sorted_edges,
    status_record,
    write_report,
)
from .structures import bipartite_matching, disjoint_paths, is_md_connected, max_linear_forest

EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74

SURVEY_COLUMNS = [
    "n", "seed", "trial", "m", "delta", "ham_connected", "status",
    "rank", "dim", "r_found", "r_dim_complement", "runtime_ms",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- graph sources -----------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph source (exactly one)")
    g.add_argument("--file", help="edge-list file")
    g.add_argument("--construction", choices=["a1", "a2", "a3"], help="tight example G1, G2 or G3")
    g.add_argument("--k", type=int, default=2, help="construction parameter, n = 4k+1")
    g.add_argument("--complete", type=int, metavar="N")
    g.add_argument("--cycle", type=int, metavar="N")
    g.add_argument("--random", type=int, metavar="N", help="seeded Dirac, Hamilton-connected sample")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p", type=float, default=0.55, help="edge probability for --random")
    g.add_argument("--attempts", type=int, default=10_000)


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, help="search-node cap (env HAMGEN_BUDGET_NODES)")
    p.add_argument("--max-cycles", type=int, help="Hamilton-cycle cap")


def _budget(args) -> SearchBudget:
    base = SearchBudget.from_env()
    nodes = args.budget_nodes if args.budget_nodes is not None else base.max_nodes
    try:
        return SearchBudget(max_cycles=args.max_cycles, max_nodes=nodes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(args):
    """Returns ``(graph, construction or None, source description)``."""
    given = [
        name for name in ("file", "construction", "complete", "cycle", "random")
        if getattr(args, name) is not None
    ]
    if len(given) != 1:
        raise UsageError("give exactly one graph source")
    src = given[0]
    if src == "file":
        return read_edge_list(args.file), None, {"file": args.file}
    if src == "construction":
        c = construction_a(args.k, int(args.construction[1]))
        return c.graph, c, {"construction": args.construction, "k": args.k}
    if src == "complete":
        return complete_graph(args.complete), None, {"complete": args.complete}
    if src == "cycle":
        return cycle_graph(args.cycle), None, {"cycle": args.cycle}
    G = random_dirac_hc_graph(args.random, args.seed, args.attempts, args.p)
    if G is None:
        raise HamgenError(f"no sample accepted in {args.attempts} attempts")
    return G, None, {"random": args.random, "seed": args.seed, "p": args.p, "attempts": args.attempts}


def _read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, val = line.split("=", 1)
            out[key.strip().replace("-", "_")] = val.strip()
    return out


def _params(args) -> ThresholdParams:
    try:
        return ThresholdParams(
            alpha=args.alpha, beta=args.beta, eta=args.eta, sigma=args.sigma, gamma=args.gamma
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad threshold parameter: {exc}") from None


# -- commands ------------------------------------------------------------------------

def cmd_check(args) -> int:
    G, c, source = _load(args)
    budget = _budget(args)
    t0 = time.perf_counter()
    st = is_hamilton_generated(G, budget)
    rec = status_record(G, st)
    certs = []
    if args.certificates and not st.generated:
        candidates = []
        if c is not None:
            candidates = [_inside(G, c.X.mask), _inside(G, c.Y.mask)]
        certs = non_generation_certificates(G, [s for s in candidates if s], budget)
    rec["certificates"] = certificate_records(certs)
    rec["r_subgraph"] = None
    if args.find_r and st.kind == "NotGenerated":
        if G.n % 2:
            rec["r_subgraph"] = find_r_record(G, find_R(G, budget, args.max_vectors))
        else:
            _err("find-R skipped: needs an odd number of vertices")
    rec["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)

    print(f"status={st.kind} rank={st.rank} dim={st.dim} cycles={st.cycles} "
          f"search={rec['search']} digest={rec['digest']}")
    if rec["witness"] is not None:
        _err(f"witness cycle outside the Hamilton span: {rec['witness']}")
    for cert in rec["certificates"]:
        detail = f" witness={cert['witness']}" if cert["witness"] else ""
        _err(f"certificate {cert['kind']}: {cert['edges']}{detail}")
    if rec["r_subgraph"] is not None:
        _err(f"find-R: {rec['r_subgraph']['status']} (complement dim {rec['r_subgraph']['complement_dim']})")
    if args.out:
        config = {"source": source, "budget_nodes": budget.max_nodes, "max_cycles": budget.max_cycles}
        write_report(build_report("check", config, [rec]), args.out)
    return {"Generated": 0, "NotGenerated": 1}.get(st.kind, 2)


def _inside(G: Graph, mask: int) -> list[tuple[int, int]]:
    return [(u, v) for u, v in G.edges if mask >> u & 1 and mask >> v & 1]


def cmd_classify(args) -> int:
    G, c, source = _load(args)
    p = _params(args)
    budget = _budget(args)
    shape = args.shape
    if shape == "auto" and c is not None:
        shape = "bipartite" if c.variant == 1 else "biclique"
    if shape != "auto":
        if c is None and shape != "dense":
            raise UsageError(f"--shape {shape} needs a labelled construction")
        if c is None:
            res = classify_construction(_Unlabelled(G), shape, p, budget, not args.no_decide)
        else:
            res = classify_construction(c, shape, p, budget, not args.no_decide)
    else:
        res = classify(G, p, budget, args.seed, args.case1_budget, not args.no_decide)
    code = res.exit_code()
    rep = res.report
    line = f"case={res.case}"
    if rep is not None:
        line += f" shape={rep.shape} hypotheses={_tri(rep.hypotheses)} generation={rep.generation}"
        if rep.key_value is not None:
            line += f" value={rep.key_value}"
    print(line)
    shown = {e.name for e in rep.ledger} if rep is not None else set()
    for w in (res.trichotomy, res.witness):
        if w is None:
            continue
        for e in w.ledger:
            if e.name not in shown:
                _err(_fmt_entry(e))
    if rep is not None:
        for e in rep.ledger:
            _err(_fmt_entry(e))
        if rep.inconsistent:
            _err("INCONSISTENT: all hypotheses hold but the graph is not Hamilton-generated")
    if args.out:
        rec = {
            "digest": G.digest(),
            "case": res.case,
            "trichotomy": res.trichotomy.as_dict() if res.trichotomy else None,
            "witness": res.witness.as_dict() if res.witness else None,
            "report": rep.as_dict() if rep else None,
        }
        config = {"source": source, "params": p.as_dict(), "shape": args.shape}
        write_report(build_report("classify", config, [rec]), args.out)
    return code


class _Unlabelled:
    def __init__(self, G):
        self.graph = G


def _tri(v) -> str:
    return {True: "pass", False: "fail", None: "undecided"}[v]


def _fmt_entry(e) -> str:
    return f"  [{_tri(e.ok)}] {e.name}: {e.lhs} {e.relation} {e.rhs}"


def survey_row(n: int, seed: int, trial: int, p: float, attempts: int, budget: SearchBudget) -> dict:
    t0 = time.perf_counter()
    tseed = seed + trial
    row = dict.fromkeys(SURVEY_COLUMNS, "")
    row.update(n=n, seed=tseed, trial=trial)
    G = random_dirac_hc_graph(n, tseed, attempts, p)
    if G is None:
        row.update(status="NoSample", r_found="n/a")
    else:
        st = is_hamilton_generated(G, budget)
        row.update(m=G.m, delta=G.min_degree(), ham_connected="true", status=st.kind,
                   rank=st.rank, dim=st.dim, r_found="n/a")
        if st.kind == "NotGenerated":
            res = find_R(G, budget)
            row["r_dim_complement"] = res.complement_dim
            if res.R is not None and check_R(G, res.R.edges, budget).valid:
                row["r_found"] = "true"
            elif res.status == "inconclusive":
                row["r_found"] = "inconclusive"
            else:
                row["r_found"] = "violation"
            row["digest"] = G.digest()
    row["runtime_ms"] = f"{(time.perf_counter() - t0) * 1000:.1f}"
    return row


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def cmd_survey(args) -> int:
    if not args.n:
        raise UsageError("--n is required")
    ns = _parse_int_list(args.n)
    if args.trials < 0:
        raise UsageError("--trials must be >= 0")
    for n in ns:
        if n % 2 == 0 or n < 5:
            raise UsageError(f"survey sizes must be odd and >= 5, got {n}")
    budget = _budget(args)
    jobs = [(n, args.seed, t, args.p, args.attempts, budget) for n in ns for t in range(args.trials)]
    if args.jobs > 1 and jobs:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_survey_star, jobs))
    else:
        rows = [survey_row(*j) for j in jobs]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, SURVEY_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    counts: dict[str, int] = {}
    for r in rows:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    violations = [r for r in rows if r["r_found"] == "violation"]
    summary = {"rows": len(rows), "status_counts": counts, "violations": len(violations)}
    if args.out:
        config = {"n": ns, "trials": args.trials, "seed": args.seed, "p": args.p,
                  "attempts": args.attempts, "budget_nodes": budget.max_nodes, "rng": RNG_ALGORITHM}
        records = [{k: v for k, v in r.items() if k != "runtime_ms"} for r in rows]
        write_report(build_report("survey", config, records, summary), args.out)
    _err(f"survey: {json.dumps(summary, sort_keys=True)}")
    for r in violations:
        _err(f"CONSISTENCY VIOLATION: n={r['n']} seed={r['seed']} trial={r['trial']} digest={r.get('digest')}")
    return 3 if violations else 0


def _survey_star(job):
    return survey_row(*job)


def cmd_construct(args) -> int:
    G, _, _ = _load(args)
    text = G.to_edge_list()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            a, b = tok.split("-")
            out.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"bad pair {tok!r}; use a-b") from None
    return out


def cmd_paths(args) -> int:
    if not args.pairs:
        raise UsageError("--pairs is required")
    G, _, _ = _load(args)
    if args.check_md:
        res = is_md_connected(G, args.m, args.d)
        _err(f"(m,d)-connected: {res.ok}" + ("" if res.ok else f" removed={list(res.removed)} pair={list(res.pair)}"))
    paths = disjoint_paths(G, _parse_pairs(args.pairs), args.m, args.d)
    print(json.dumps({"paths": paths}))
    return 0 if paths is not None else 1


def cmd_matching(args) -> int:
    G, c, _ = _load(args)
    if args.X is None and c is not None:
        X, Y = c.X.mask, c.Y.mask
    elif args.X is not None and args.Y is not None:
        X, Y = as_mask(G.n, _parse_int_list(args.X)), as_mask(G.n, _parse_int_list(args.Y))
    else:
        raise UsageError("give --X and --Y")
    cross = Graph(G.n, [(u, v) for u, v in G.edges if (X >> u & 1) != (X >> v & 1) and (X | Y) >> u & 1 and (X | Y) >> v & 1])
    res = bipartite_matching(cross, X, Y)
    print(json.dumps({"size": res.size, "matching": sorted_edges(res.matching), "cover": res.cover.sorted()}))
    return 0


def cmd_forest(args) -> int:
    G, _, _ = _load(args)
    f, lf = max_linear_forest(G)
    print(json.dumps({"f": f, "paths": [list(p) for p in lf.paths]}))
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = _Parser(prog="hamgen", description="Hamilton-generated graph toolkit")
    parser.add_argument("--version", action="version", version=f"hamgen {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    subs = {}

    p = sub.add_parser("check", help="decide whether Hamilton cycles span the cycle space")
    _add_source(p)
    _add_budget(p)
    p.add_argument("--find-r", action="store_true", help="search for an R-subgraph when not generated")
    p.add_argument("--max-vectors", type=int, default=1 << 24)
    p.add_argument("--no-certificates", dest="certificates", action="store_false")
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_check)
    subs["check"] = p

    p = sub.add_parser("classify", help="trichotomy and hypothesis ledger")
    _add_source(p)
    _add_budget(p)
    p.add_argument("--shape", default="auto",
                   choices=["auto", "biclique", "bipartite", "dense", "labelled-biclique", "labelled-bipartite"])
    for name, default in (("alpha", "1/10"), ("beta", "1/50"), ("eta", "1/4"), ("sigma", "1/40"), ("gamma", "1/20")):
        p.add_argument(f"--{name}", default=default)
    p.add_argument("--case1-budget", type=int, default=1_000_000)
    p.add_argument("--no-decide", action="store_true", help="skip the generation decision")
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)
    subs["classify"] = p

    p = sub.add_parser("survey", help="random Dirac, Hamilton-connected sweep")
    _add_budget(p)
    p.add_argument("--n", help="comma-separated odd sizes")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.55)
    p.add_argument("--attempts", type=int, default=10_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="CSV output path (default stdout)")
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_survey)
    subs["survey"] = p

    p = sub.add_parser("construct", help="write a graph as an edge list")
    _add_source(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)
    subs["construct"] = p

    p = sub.add_parser("paths", help="greedy disjoint short paths")
    _add_source(p)
    p.add_argument("--pairs", help="a-b,c-d,...")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--check-md", action="store_true")
    p.set_defaults(func=cmd_paths)
    subs["paths"] = p

    p = sub.add_parser("matching", help="maximum X-Y matching and Konig cover")
    _add_source(p)
    p.add_argument("--X")
    p.add_argument("--Y")
    p.set_defaults(func=cmd_matching)
    subs["matching"] = p

    p = sub.add_parser("forest", help="maximum linear forest")
    _add_source(p)
    p.set_defaults(func=cmd_forest)
    subs["forest"] = p

    for p in subs.values():
        p.add_argument("--config", help="key=value file with the same keys as the flags")
    return parser, subs


def main(argv=None) -> int:
    parser, subs = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EX_USAGE
    try:
        if args.config:
            try:
                cfg = _read_config(args.config)
            except OSError as exc:
                _err(f"hamgen: cannot read config: {exc}")
                return EX_IOERR
            sp = subs[args.command]
            known = {a.dest: a for a in sp._actions}
            # keys may also name the flag itself, e.g. no-certificates
            for a in sp._actions:
                for opt in a.option_strings:
                    known.setdefault(opt.lstrip("-").replace("-", "_"), a)
            unknown = sorted(set(cfg) - set(known))
            if unknown:
                raise UsageError(f"unknown config keys: {', '.join(unknown)}")
            # flags given on the command line win over the file
            defaults = {}
            for key, val in cfg.items():
                act = known[key]
                if act.type is not None:
                    try:
                        val = act.type(val)
                    except ValueError:
                        raise UsageError(f"config key {key}: bad value {val!r}") from None
                elif isinstance(act.const, bool):
                    # switches: a true value means the flag was given
                    val = act.const if val.lower() in ("1", "true", "yes") else act.default
                defaults[act.dest] = val
            sp.set_defaults(**defaults)
            try:
                args = parser.parse_args(argv)
            except SystemExit as exc:
                return exc.code
        return args.func(args)
    except UsageError as exc:
        _err(f"hamgen: {exc}")
        return EX_USAGE
    except OSError as exc:
        _err(f"hamgen: {exc}")
        return EX_IOERR
    except HamgenError as exc:
        _err(f"hamgen: {type(exc).__name__}: {exc}")
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
