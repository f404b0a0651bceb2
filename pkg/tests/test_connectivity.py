import random
from itertools import combinations

import pytest

from matchkit.connectivity import (
    cut_decomposition,
    independence_number,
    independent_edges_between,
    minimum_vertex_cuts,
    vertex_connectivity,
)
from matchkit.constructions import g_mn, gk_tight
from matchkit.graph import (
    Graph,
    GraphError,
    complete_graph,
    components,
    cycle_graph,
    induced_subgraph,
    is_independent,
    petersen_graph,
    to_mask,
)

from oracles import brute_alpha, brute_kappa, random_edges


def test_kappa_examples():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(petersen_graph()) == 3
    assert vertex_connectivity(g_mn(3, 5).graph) == 3
    assert vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0


def test_kappa_brute_force():
    rng = random.Random(13)
    for _ in range(250):
        n = rng.randint(1, 8)
        edges = random_edges(rng, n, rng.choice((0.3, 0.6, 0.85)))
        assert vertex_connectivity(Graph(n, edges)) == brute_kappa(n, edges)


def test_minimum_cuts_examples():
    cuts = list(minimum_vertex_cuts(cycle_graph(5)))
    assert [c.S for c in cuts] == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    c = gk_tight(3)
    assert tuple(c.roles["S"]) in {cut.S for cut in minimum_vertex_cuts(c.graph)}
    with pytest.raises(GraphError, match="no vertex cut"):
        list(minimum_vertex_cuts(complete_graph(4)))


def test_minimum_cuts_are_all_cuts_and_valid():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randint(3, 8)
        edges = random_edges(rng, n, 0.6)
        g = Graph(n, edges)
        if g.edge_count == n * (n - 1) // 2:
            continue
        k = brute_kappa(n, edges)
        want = set()
        for S in combinations(range(n), k):
            rest = [v for v in range(n) if v not in S]
            if len(components(induced_subgraph(g, rest)[0])) > 1:
                want.add(S)
        got = list(minimum_vertex_cuts(g))
        assert {c.S for c in got} == want
        for cut in got:
            parts = cut.parts
            assert sorted(v for p in parts for v in p) == sorted(set(range(n)) - set(cut.S))
            sizes = [len(p) for p in parts]
            assert sizes == sorted(sizes, reverse=True)
            for a, b in combinations(parts, 2):
                assert not any(g.has_edge(u, v) for u in a for v in b)


def test_cut_decomposition_summary():
    c = gk_tight(3)
    cut = cut_decomposition(c.graph, c.roles["S"])
    assert cut.k == 3
    assert cut.summary() == {"S": [0, 1, 2], "component_sizes": [2, 1, 1]}


def test_alpha_examples_and_oracle():
    assert independence_number(complete_graph(6)).alpha == 1
    assert independence_number(cycle_graph(5)).alpha == 2
    cert = independence_number(g_mn(3, 3).graph)
    assert cert.alpha == 3 and cert.witness == (0, 1, 2)
    rng = random.Random(19)
    for _ in range(200):
        n = rng.randint(0, 9)
        edges = random_edges(rng, n)
        g = Graph(n, edges)
        cert = independence_number(g)
        assert cert.alpha == brute_alpha(n, edges)
        assert is_independent(g, to_mask(cert.witness))


def test_independent_edges_between():
    c = gk_tight(3)
    m = independent_edges_between(c.graph, c.roles["C"], c.roles["S"])
    assert len(m) == 2
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert len(independent_edges_between(star, [0], [1, 2, 3])) == 1
    with pytest.raises(GraphError):
        independent_edges_between(star, [0, 1], [1, 2])
