import pytest

from matchkit.connectivity import cut_decomposition, independence_number, vertex_connectivity
from matchkit.constructions import (
    ConstructionError,
    FamilySpec,
    build,
    favaron_cutvertex,
    g_mn,
    gk_tight,
    kcut_caseb_shape,
    small_component_m1,
    small_component_m2,
    standard_suite,
)
from matchkit.decomposition import is_efc
from matchkit.graph import complete_bipartite, is_clique, is_independent, to_mask


def test_gk_tight_k3_by_hand():
    c = gk_tight(3)
    g = c.graph
    assert g.n == 7
    S, C, D = c.roles["S"], c.roles["C"], c.roles["D"]
    assert is_independent(g, to_mask(S)) and is_independent(g, to_mask(C))
    want = {(s, x) for s in S for x in C + D} | {tuple(D)}
    assert set(g.edges) == want


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_gk_tight_properties(k):
    c = gk_tight(k)
    assert c.graph.n == 2 * k + 1
    assert vertex_connectivity(c.graph) == k
    assert is_efc(c.graph)
    assert len(cut_decomposition(c.graph, c.roles["S"]).parts) == k


def test_g_mn_by_hand():
    c = g_mn(3, 3)
    g = c.graph
    assert g.n == 9
    assert is_clique(g, to_mask(c.roles["C"])) and is_clique(g, to_mask(c.roles["D"]))
    assert is_independent(g, to_mask(c.roles["S"]))
    assert all(g.has_edge(s, x) for s in c.roles["S"] for x in c.roles["C"] + c.roles["D"])
    assert not any(g.has_edge(x, y) for x in c.roles["C"] for y in c.roles["D"])


@pytest.mark.parametrize("m,n", [(3, 3), (3, 5), (5, 5)])
def test_g_mn_properties(m, n):
    c = g_mn(m, n)
    assert vertex_connectivity(c.graph) == 3
    assert is_efc(c.graph)
    assert independence_number(c.graph).alpha == 3
    sizes = sorted(len(p) for p in cut_decomposition(c.graph, c.roles["S"]).parts)
    assert sizes == sorted((m, n))


@pytest.mark.parametrize("k", [3, 4])
@pytest.mark.parametrize("n", [4, 6])
@pytest.mark.parametrize("builder,small", [(small_component_m1, 1), (small_component_m2, 2)])
def test_small_component_families(builder, small, n, k):
    c = builder(n, k)
    g = c.graph
    assert vertex_connectivity(g) == k
    assert is_efc(g)
    assert independence_number(g).alpha >= n
    parts = cut_decomposition(g, c.roles["S"]).parts
    assert len(c.roles["S"]) == k and min(len(p) for p in parts) == small


def test_small_component_m1_meets_both_sides():
    c = small_component_m1(4, 3)
    side0, side1 = set(c.roles["side0"]), set(c.roles["side1"])
    S = set(c.roles["S"])
    assert S & side0 and S & side1
    assert len(S & side0) == 2


def test_caseb_shape():
    base = kcut_caseb_shape(3, 3)
    one = kcut_caseb_shape(3, 3, [(0, 0)])
    assert base.graph.edge_count - one.graph.edge_count == 1
    with pytest.raises(ConstructionError):
        kcut_caseb_shape(3, 3, [(0, 0), (0, 1)])
    with pytest.raises(ConstructionError):
        kcut_caseb_shape(3, 3, [(0, 1), (1, 1)])


def test_favaron_cutvertex_shape():
    c = favaron_cutvertex(1, 1)
    assert c.graph.n == 5 and vertex_connectivity(c.graph) == 1


def test_build_validation():
    assert build(FamilySpec("complete_bipartite", (3, 4))).graph == complete_bipartite(3, 4)
    for bad in [FamilySpec("G_mn", (2, 3)), FamilySpec("Gk_tight", (2,)), FamilySpec("odd_cycle", (4,)),
                FamilySpec("nope", ()), FamilySpec("complete", (1, 2))]:
        with pytest.raises(ConstructionError):
            build(bad)


def test_g_mn_1_3_is_allowed():
    c = g_mn(1, 3)
    assert c.graph.n == 7


def test_standard_suite_builds_and_is_stable():
    specs = standard_suite()
    assert specs == standard_suite()
    labels = [s.label for s in specs]
    assert len(labels) == len(set(labels))
    for s in specs:
        build(s)
