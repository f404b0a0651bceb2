import gzip
import json

import pytest

from matchkit.graph import GraphError, complete_graph, cycle_graph, emit_graph6
from matchkit.suite import check_graphs, enumeration_graphs, run_suite, LabeledGraph


def test_enumeration_source_counts():
    assert sum(1 for _ in enumeration_graphs(4)) == 1 + 1 + 2 + 6


def test_run_suite_enumeration_zero_fails():
    res = run_suite(enumerate_n=5)
    assert not res.fails
    counts = res.counts
    assert counts["thm_plus_e"]["holds"] > 0
    assert sum(counts["thm_isolating"].values()) == 31


def test_corpus_source_and_bad_line(tmp_path):
    p = tmp_path / "c.g6.gz"
    with gzip.open(p, "wb") as fh:
        fh.write(emit_graph6(cycle_graph(5)) + b"\n" + emit_graph6(complete_graph(5)) + b"\n")
    res = run_suite(corpora=[p])
    assert res.summary()["graphs"] == 2 and not res.fails
    bad = tmp_path / "bad.g6"
    bad.write_bytes(b"D~{\nD?{\nDx\n")
    with pytest.raises(GraphError, match=r"bad\.g6:3"):
        run_suite(corpora=[bad])


def test_parallel_matches_serial():
    graphs = [LabeledGraph(f"g{i}", g) for i, g in enumerate(
        [cycle_graph(5), cycle_graph(7), complete_graph(5), cycle_graph(9)])]
    serial = list(check_graphs(graphs, jobs=1))
    parallel = list(check_graphs(graphs, jobs=2))
    assert serial == parallel


def test_statement_filter_and_summary_serializes():
    res = run_suite(enumerate_n=4, statements=["thm_plus_e"])
    assert {r["statement_id"] for r in res.records} == {"thm_plus_e"}
    json.dumps(res.summary())
