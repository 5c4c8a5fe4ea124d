"""JSON report assembly. Records are plain dicts so the CLI, the survey
and the tests all share one serialisation."""

from __future__ import annotations

import json

from . import __version__
from .constructions import RNG_ALGORITHM
from .generation import FindRResult, HamGenStatus
from .graph import Graph

SCHEMA_VERSION = "1"


def sorted_edges(edges) -> list[list[int]]:
    return sorted([min(u, v), max(u, v)] for u, v in edges)


def status_record(G: Graph, st: HamGenStatus) -> dict:
    rec = {
        "digest": G.digest(),
        "n": G.n,
        "m": G.m,
        "status": st.kind,
        "rank": st.rank,
        "dim": st.dim,
        "hamilton_cycles": st.cycles,
        "search": "exhausted" if st.search is None or st.search.exhausted else "capped",
        "nodes": st.search.nodes if st.search is not None else 0,
        "witness": sorted_edges(st.witness.edges(G)) if st.witness is not None else None,
    }
    return rec


def certificate_records(certs) -> list[dict]:
    out = []
    for c in certs:
        d = c.as_dict()
        d["edges"] = sorted_edges(c.edges)
        if c.witness is not None:
            d["witness"] = sorted_edges(c.witness)
        out.append(d)
    return out


def find_r_record(G: Graph, res: FindRResult) -> dict:
    rec = {
        "status": res.status,
        "complement_dim": res.complement_dim,
        "examined": res.examined,
        "edges": None,
    }
    if res.R is not None:
        rec["edges"] = sorted_edges(res.R.edge_list(G))
        rec["checks"] = {
            "proper": res.R.proper,
            "even_on_hamilton": res.R.even_on_hamilton,
            "cut_condition": res.R.cut_condition,
            "partitions_checked": res.R.partitions_checked,
        }
    return rec


def build_report(command: str, config: dict, records: list[dict], summary: dict | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "hamgen",
        "version": __version__,
        "rng": RNG_ALGORITHM,
        "command": command,
        "config": config,
        "records": records,
        "summary": summary or {},
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(report))
