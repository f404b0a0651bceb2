import copy
import json

import pytest

from matchkit.constructions import favaron_cutvertex, g_mn, gk_tight, small_component_m1, small_component_m2
from matchkit.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
)
from matchkit.harness import CHECKERS, ORDER, PREDICATES, Verdict, check_all, revalidate
from matchkit.suite import fixture_search, join_graph


def status(sid, g, **opts):
    return CHECKERS[sid](g, **opts).status


BOWTIE = favaron_cutvertex(1, 1).graph  # two triangles sharing vertex 0
K4_MINUS_E = complete_graph(4).remove_edges([(0, 1)])
# K_2 and K_3 joined through vertex 2, which sees everything
ODD_ALPHA2_STRUCT = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.mark.parametrize("sid, graph, want", [
    ("thm_isolating", cycle_graph(7), "holds"),
    ("thm_isolating", complete_graph(4), "not_applicable"),
    ("thm_isolating", g_mn(3, 3).graph, "holds"),
    ("lemma_matching_cut", cycle_graph(7), "holds"),
    ("lemma_matching_cut", path_graph(4), "not_applicable"),
    ("lemma_independent_edges", petersen_graph(), "holds"),
    ("lemma_independent_edges", complete_graph(5), "not_applicable"),
    ("lemma_independent_edges", gk_tight(4).graph, "holds"),
    ("thm_k_and_one", small_component_m1(4, 3).graph, "holds"),
    ("thm_k_and_one", complete_bipartite(3, 4), "not_applicable"),
    ("lemma_two_components", g_mn(3, 5).graph, "holds"),
    ("lemma_two_components", gk_tight(3).graph, "not_applicable"),
    ("lemma_two_components", cycle_graph(9), "not_applicable"),
    ("lemma_k_and_two", small_component_m2(4, 3).graph, "holds"),
    ("lemma_k_and_two", g_mn(3, 3).graph, "not_applicable"),
    ("thm_kcut_structure", small_component_m2(4, 3).graph, "holds"),
    ("thm_kcut_structure", g_mn(3, 3).graph, "not_applicable"),
    ("thm_both_complete", g_mn(3, 5).graph, "holds"),
    ("thm_both_complete", g_mn(5, 5).graph, "holds"),
    ("prop_component_bound", gk_tight(3).graph, "holds"),
    ("prop_component_bound", gk_tight(5).graph, "holds"),
    ("prop_component_bound", g_mn(3, 3).graph, "holds"),
    ("favaron_cutvertex", BOWTIE, "holds"),
    ("favaron_cutvertex", path_graph(5), "holds"),
    ("favaron_cutvertex", cycle_graph(6), "not_applicable"),
    ("favaron_2cut", cycle_graph(5), "holds"),
    ("favaron_2cut", cycle_graph(7), "holds"),
    ("favaron_2cut", g_mn(3, 3).graph, "not_applicable"),
    ("prop_alpha2_matchings", cycle_graph(5), "holds"),
    ("prop_alpha2_matchings", K4_MINUS_E, "holds"),
    ("prop_alpha2_matchings", path_graph(4), "holds"),
    ("prop_odd_alpha2_structure", cycle_graph(5), "holds"),
    ("prop_odd_alpha2_structure", ODD_ALPHA2_STRUCT, "holds"),
    ("prop_odd_alpha2_structure", cycle_graph(7), "not_applicable"),
    ("lemma_matching_of_S", g_mn(3, 3).graph, "holds"),
    ("lemma_matching_of_S", complete_graph(5), "not_applicable"),
    ("lemma_unmatched_triple", g_mn(5, 5).graph, "not_applicable"),
    ("thm_alpha_iff_efc", g_mn(3, 3).graph, "not_applicable"),
    ("thm_alpha_iff_efc", cycle_graph(9), "not_applicable"),
    ("thm_plus_e", cycle_graph(5), "holds"),
    ("thm_plus_e", cycle_graph(7), "holds"),
    ("thm_plus_e", complete_graph(5), "holds"),
    ("thm_plus_e", cycle_graph(9), "holds"),
])
def test_checker_examples(sid, graph, want):
    assert status(sid, graph) == want


def test_c5_thm_k_and_one_applicability_is_mechanical():
    # C_5: cuts leave parts of sizes 2 and 1 with k = 2, so the theorem applies
    assert status("thm_k_and_one", cycle_graph(5)) == "holds"


def test_matching_cut_with_size_cap():
    v = CHECKERS["lemma_matching_cut"](g_mn(3, 3).graph, size_cap=4)
    assert v.status == "holds" and v.certificate["size_cap"] == 4


def test_kcut_structure_case_b_report():
    v = CHECKERS["thm_kcut_structure"](small_component_m2(4, 3).graph)
    rep = v.certificate["reports"][0]
    assert rep["case"] == "B" and rep["completion"] == []
    assert set(rep["U"]) | set(rep["W"]) == set(rep["Cprime"])
    assert set(rep["X"]) <= set(rep["C"]) and len(rep["X"]) == len(rep["S"])


def test_kcut_structure_case_a_fixture():
    # S = {0,1,2} with edge 01, C = K_4, D = K_2, all joined
    g = join_graph(4, 2, [(0, 1)], 3)
    v = CHECKERS["thm_kcut_structure"](g)
    assert v.status == "holds"
    assert {r["case"] for r in v.certificate["reports"]} == {"A"}


def test_plus_e_c7_exhibits_witness_edge():
    v = CHECKERS["thm_plus_e"](cycle_graph(7))
    assert v.status == "holds"
    assert json.dumps(v.certificate)


def test_not_applicable_names_hypothesis():
    v = CHECKERS["thm_isolating"](complete_graph(4))
    assert v.certificate["hypothesis_failed"]


def test_alpha2_disconnected_counterexample_revalidates():
    # K_3 + K_1: alpha 2, even, equimatchable, no perfect matching
    g = disjoint_union(complete_graph(3), complete_graph(1))
    v = CHECKERS["prop_alpha2_matchings"](g)
    assert v.status == "fails"
    assert revalidate(g, v)
    assert revalidate(g, json.loads(json.dumps(v.to_dict())))


def test_revalidate_rejects_corrupted_certificates():
    g = disjoint_union(complete_graph(3), complete_graph(1))
    good = CHECKERS["prop_alpha2_matchings"](g).to_dict()
    # a fabricated violation on a graph where the predicate actually holds
    h = cycle_graph(7)
    forged = {"statement_id": "thm_isolating", "status": "fails", "bounded": False,
              "certificate": {"violation": {"predicate": "connected_randomly_matchable",
                                            "args": {"vertices": [0, 1]}}}}
    assert not revalidate(h, forged)
    # right predicate, wrong graph
    assert not revalidate(cycle_graph(5), good)
    # unknown predicate / missing args / holds status
    bad = copy.deepcopy(good)
    bad["certificate"]["violation"]["predicate"] = "made_up"
    assert not revalidate(g, bad)
    bad = copy.deepcopy(good)
    bad["certificate"]["violation"]["args"] = {"nonsense": 1}
    assert not revalidate(g, bad)
    assert not revalidate(g, {**good, "status": "holds"})


def test_every_fail_payload_names_a_known_predicate():
    assert set(PREDICATES) >= {"connected_randomly_matchable", "complete", "alpha2_matchings"}


def test_check_all_order_and_determinism():
    g = g_mn(3, 3).graph
    a = [v.to_dict() for v in check_all(g)]
    b = [v.to_dict() for v in check_all(g)]
    assert a == b
    assert [d["statement_id"] for d in a] == list(ORDER)
    assert "elapsed" not in a[0]
    assert "elapsed" in check_all(g)[0].to_dict(timings=True)


def test_bounded_marking_on_deadline():
    g = small_component_m2(6, 4).graph
    vs = check_all(g, ["lemma_matching_cut"], deadline=0.0)
    assert vs[0].status == "holds" and vs[0].bounded


def test_verdict_rejects_bad_status():
    with pytest.raises(ValueError):
        Verdict("x", "maybe")


def test_fixture_search_reports_every_target():
    found, report = fixture_search()
    assert found and report["candidates_tried"] > 0
    for sid in ("lemma_unmatched_triple", "thm_alpha_iff_efc", "thm_kcut_structure", "lemma_matching_of_S"):
        r = report["statements"][sid]
        assert r["found"] and r["holds"] == r["qualifying"] and r["fails"] == 0
    assert all(lg.label.startswith("fixture:") for lg in found)
