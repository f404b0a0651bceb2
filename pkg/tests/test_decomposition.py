import random

from matchkit.constructions import g_mn
from matchkit.decomposition import (
    gallai_edmonds,
    is_bipartite,
    is_efc,
    is_equimatchable,
    is_factor_critical,
    is_randomly_matchable,
    observation_knn_removal_check,
    property_report,
    removing_adjacent_pair_stays_rm,
    structural_randomly_matchable,
)
from matchkit.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    path_graph,
)
from matchkit.matching import is_maximal, matching_number

from oracles import brute_equimatchable, brute_factor_critical, brute_nu, random_edges

STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_gallai_edmonds_examples():
    ge = gallai_edmonds(cycle_graph(5))
    assert (ge.D, ge.A, ge.C) == ((0, 1, 2, 3, 4), (), ())
    ge = gallai_edmonds(complete_graph(4))
    assert (ge.D, ge.A, ge.C) == ((), (), (0, 1, 2, 3))
    ge = gallai_edmonds(STAR)
    assert (ge.D, ge.A, ge.C) == ((1, 2, 3), (0,), ())
    assert ge.nu == 1 and ge.deficiency == 2


def test_gallai_edmonds_against_brute_force():
    rng = random.Random(21)
    for _ in range(150):
        n = rng.randint(1, 8)
        edges = random_edges(rng, n)
        g = Graph(n, edges)
        ge = gallai_edmonds(g)
        nu = brute_nu(n, edges)
        for v in range(n):
            sub = [e for e in edges if v not in e]
            assert (v in ge.D) == (brute_nu(n, sub) == nu)
        assert sorted(ge.D + ge.A + ge.C) == list(range(n))
        assert all(any(g.has_edge(a, d) for d in ge.D) for a in ge.A)


def test_factor_critical_examples_and_oracle():
    assert is_factor_critical(cycle_graph(5))
    assert not is_factor_critical(complete_graph(4))
    assert is_factor_critical(g_mn(3, 3).graph)
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = random_edges(rng, n)
        assert is_factor_critical(Graph(n, edges)) == brute_factor_critical(n, edges)


def test_randomly_matchable_examples():
    assert is_randomly_matchable(complete_graph(6))
    assert is_randomly_matchable(complete_bipartite(3, 3))
    assert not is_randomly_matchable(path_graph(4))
    # empty graph: vacuously equimatchable with a perfect matching
    assert is_randomly_matchable(Graph(0))


def test_equimatchable_examples():
    assert is_equimatchable(complete_bipartite(3, 3))
    assert is_equimatchable(complete_graph(6))
    assert is_equimatchable(cycle_graph(7))
    res = is_equimatchable(cycle_graph(9))
    assert not res
    w = res.witness
    # the first independent triple in lexicographic order that works
    assert w.independent_set == (0, 3, 6)
    assert len(w.maximal) == 3 < matching_number(cycle_graph(9)) == 4
    assert is_maximal(cycle_graph(9), w.maximal)
    exposed = set(range(9)) - {x for e in w.maximal for x in e}
    assert set(w.independent_set) <= exposed


def test_equimatchable_matches_enumeration_oracle():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(1, 9)
        edges = random_edges(rng, n)
        assert bool(is_equimatchable(Graph(n, edges))) == brute_equimatchable(n, edges)


def test_structural_rm_matches_definition_on_connected_graphs():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.choice((2, 4, 6))
        g = Graph(n, random_edges(rng, n, rng.choice((0.5, 0.8, 0.95, 1.0))))
        if not is_connected(g):
            continue
        direct = bool(is_equimatchable(g)) and 2 * matching_number(g) == n
        assert structural_randomly_matchable(g) == direct


def test_property_report_invariants():
    rep = property_report(cycle_graph(5))
    assert rep.flags()["factor_critical"] and rep.flags()["equimatchable"]
    assert rep.nu == 2 and rep.deficiency == 1 and rep.alpha is None
    rep = property_report(complete_bipartite(2, 2))
    assert rep.randomly_matchable and rep.bipartite and rep.deficiency == 0


def test_efc_and_bipartite():
    assert is_efc(cycle_graph(7))
    assert not is_efc(cycle_graph(9))
    assert is_bipartite(cycle_graph(6)) and not is_bipartite(cycle_graph(5))
    assert not is_efc(disjoint_union(complete_graph(3), complete_graph(1)))


def test_observation_knn_removal():
    for n in (1, 2, 3, 4):
        assert observation_knn_removal_check(n).status == "holds"


def test_removing_adjacent_pair_keeps_rm():
    assert removing_adjacent_pair_stays_rm(complete_graph(6))
    assert removing_adjacent_pair_stays_rm(complete_bipartite(3, 3))
