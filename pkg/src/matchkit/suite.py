"""Suite runner: graph sources, fixture discovery, parallel checking, summaries."""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .constructions import build, standard_suite
from .decomposition import observation_knn_removal_check
from .enumeration import connected_graphs_upto
from .graph import Graph, complete_bipartite, emit_graph6, parse_graph6, read_graph6_file
from .harness import ORDER, STATUSES, check_all

# statements whose smallest instances lie beyond exhaustive enumeration
FIXTURE_TARGETS = (
    "thm_kcut_structure",
    "lemma_matching_of_S",
    "lemma_unmatched_triple",
    "thm_alpha_iff_efc",
    "thm_both_complete",
)


@dataclass
class LabeledGraph:
    label: str
    graph: Graph


@dataclass
class SuiteResult:
    records: list[dict] = field(default_factory=list)
    fixture_report: dict | None = None

    @property
    def counts(self) -> dict:
        c = Counter((r["statement_id"], r["status"]) for r in self.records)
        return {sid: {st: c[(sid, st)] for st in STATUSES} for sid in self.statement_ids()}

    def statement_ids(self) -> list[str]:
        present = {r["statement_id"] for r in self.records}
        extra = sorted(present - set(ORDER))
        return [s for s in ORDER if s in present] + extra

    @property
    def fails(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "fails"]

    def summary(self) -> dict:
        return {
            "graphs": len({r["graph"] for r in self.records}),
            "verdicts": len(self.records),
            "fails": len(self.fails),
            "bounded": sum(1 for r in self.records if r["bounded"]),
            "counts": self.counts,
            "non_vacuous": {sid: v["holds"] for sid, v in self.counts.items()},
            "fixture_search": self.fixture_report,
        }


# ---------------------------------------------------------------------------
# fixture discovery

def join_graph(c: int, d: int, s_edges: Iterable[tuple[int, int]], k: int,
               drop: Iterable[tuple[int, int]] = ()) -> Graph:
    """K_c and K_d both joined to a k-set S (vertices 0..k-1) carrying ``s_edges``,
    minus the S-to-component pairs in ``drop``."""
    S = range(k)
    C = range(k, k + c)
    D = range(k + c, k + c + d)
    gone = {tuple(sorted(e)) for e in drop}
    edges = list(s_edges) + list(combinations(C, 2)) + list(combinations(D, 2))
    edges += [(s, x) for s in S for x in list(C) + list(D) if (s, x) not in gone]
    return Graph(k + c + d, edges)


def _fixture_candidates(seed: int) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    # k = 4 joins: S patterns range over all graphs on 4 labeled vertices
    pairs4 = list(combinations(range(4), 2))
    for c, d in ((3, 4), (5, 4), (3, 6)):
        for bitsel in range(1 << len(pairs4)):
            s_edges = [e for i, e in enumerate(pairs4) if bitsel >> i & 1]
            yield f"join4(c={c},d={d},S={bitsel})", join_graph(c, d, s_edges, 4)
    # k = 4 joins with S-to-component edges removed at random
    for trial in range(120):
        c, d = rng.choice(((3, 4), (4, 5), (3, 6)))
        s_edges = [e for e in pairs4 if rng.random() < 0.5]
        cross = [(s, x) for s in range(4) for x in range(4, 4 + c + d)]
        drop = rng.sample(cross, rng.randint(1, 4))
        g = join_graph(c, d, s_edges, 4, drop)
        yield f"join4drop(seed={seed},trial={trial})", g
    # k = 3 with a 2-vertex component and an edge inside S (Case A shape)
    pairs3 = list(combinations(range(3), 2))
    for c in (4, 6):
        for bitsel in range(1, 1 << 3):
            s_edges = [e for i, e in enumerate(pairs3) if bitsel >> i & 1]
            yield f"caseA(c={c},S={bitsel})", join_graph(c, 2, s_edges, 3)
    # k = 3 joins with an edge in S and two complete components
    for c, d in ((3, 3), (3, 5)):
        for bitsel in range(1, 1 << 3):
            s_edges = [e for i, e in enumerate(pairs3) if bitsel >> i & 1]
            yield f"join3(c={c},d={d},S={bitsel})", join_graph(c, d, s_edges, 3)


def fixture_search(seed: int = 20141, statements=FIXTURE_TARGETS) -> tuple[list[LabeledGraph], dict]:
    """Search join-style graphs for instances meeting the hypotheses of the
    statements whose smallest instances exceed enumeration range.

    Returns the qualifying graphs (deduplicated) and a per-statement report of
    how many candidates were tried and how many met the hypotheses.
    """
    found: list[LabeledGraph] = []
    seen: set = set()
    tried = 0
    report = {sid: {"qualifying": 0, "holds": 0, "fails": 0, "examples": []} for sid in statements}
    for label, g in _fixture_candidates(seed):
        tried += 1
        if g in seen:
            continue
        seen.add(g)
        useful = False
        for v in check_all(g, statements):
            if v.status == "not_applicable":
                continue
            useful = True
            r = report[v.statement_id]
            r["qualifying"] += 1
            r[v.status] += 1
            if len(r["examples"]) < 3:
                r["examples"].append(label)
        if useful:
            found.append(LabeledGraph(f"fixture:{label}", g))
    for r in report.values():
        r["found"] = r["qualifying"] > 0
    return found, {"candidates_tried": tried, "seed": seed, "statements": report}


# ---------------------------------------------------------------------------
# sources

def construction_graphs() -> list[LabeledGraph]:
    return [LabeledGraph(f"construct:{s.label}", build(s).graph) for s in standard_suite()]


def enumeration_graphs(n_max: int, n_min: int = 1) -> Iterator[LabeledGraph]:
    for g in connected_graphs_upto(n_max, n_min):
        yield LabeledGraph(f"enum:{emit_graph6(g).decode()}", g)


def corpus_graphs(path) -> Iterator[LabeledGraph]:
    for lineno, g in read_graph6_file(path):
        yield LabeledGraph(f"corpus:{path}:{lineno}", g)


def _check_one(args) -> list[dict]:
    label, g6, statements, budget_ms = args
    g = parse_graph6(g6)
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000
    out = []
    for v in check_all(g, statements, deadline):
        d = v.to_dict()
        d["graph"] = label
        d["graph6"] = g6.decode()
        out.append(d)
    return out


def check_graphs(graphs: Iterable[LabeledGraph], statements=None, jobs: int = 1,
                 budget_ms: int | None = None) -> Iterator[dict]:
    """Verdict records for every graph, in input order regardless of ``jobs``."""
    tasks = ((lg.label, emit_graph6(lg.graph), statements, budget_ms) for lg in graphs)
    if jobs <= 1:
        for t in tasks:
            yield from _check_one(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for recs in pool.map(_check_one, tasks, chunksize=8):
            yield from recs


def observation_records(n_values=(1, 2, 3, 4)) -> list[dict]:
    out = []
    for n in n_values:
        d = observation_knn_removal_check(n).to_dict()
        d["graph"] = f"construct:K_{{{n},{n}}}"
        d["graph6"] = emit_graph6(complete_bipartite(n, n)).decode()
        out.append(d)
    return out


def run_suite(constructions: bool = False, enumerate_n: int | None = None, corpora=(),
              statements=None, jobs: int = 1, budget_ms: int | None = None,
              fixtures: bool | None = None, on_record=None) -> SuiteResult:
    """Run every applicable checker over the selected sources.

    Records come out in a fixed order (sources, then graphs, then statements),
    so repeated runs produce identical reports.
    """
    result = SuiteResult()
    graphs: list = []
    if constructions:
        graphs.append(construction_graphs())
        if fixtures is None or fixtures:
            found, report = fixture_search()
            result.fixture_report = report
            graphs.append(found)
    if enumerate_n:
        graphs.append(enumeration_graphs(enumerate_n))
    for path in corpora:
        graphs.append(corpus_graphs(path))

    def emit(rec):
        result.records.append(rec)
        if on_record:
            on_record(rec)

    if constructions and (statements is None or "observation_knn_removal" in statements):
        for rec in observation_records():
            emit(rec)
    for source in graphs:
        for rec in check_graphs(source, statements, jobs, budget_ms):
            emit(rec)
    return result
