"""Property tests over random small graphs."""

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from matchkit.connectivity import independence_number, minimum_vertex_cuts, vertex_connectivity
from matchkit.decomposition import gallai_edmonds, is_equimatchable, is_factor_critical
from matchkit.graph import Graph, components, emit_graph6, is_independent, parse_graph6, to_mask
from matchkit.harness import check_all, revalidate
from matchkit.matching import (
    enumerate_maximal_matchings,
    extend_to_maximal,
    is_matching,
    is_maximal,
    matching_number,
    maximum_matching,
    minimal_isolating_matchings,
    saturating_matching,
)

from oracles import brute_alpha, brute_kappa, brute_nu


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@given(graphs(max_n=30))
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs())
def test_components_partition(g):
    parts = components(g)
    assert sorted(v for p in parts for v in p) == list(range(g.n))
    where = {v: i for i, p in enumerate(parts) for v in p}
    assert all(where[u] == where[v] for u, v in g.edges)


@given(graphs())
def test_maximum_matching_size_and_deficiency_parity(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_nu(g.n, g.edges)
    assert (g.n - 2 * len(m)) % 2 == g.n % 2


@given(graphs(max_n=8), st.data())
def test_extend_to_maximal_contains_input(g, data):
    edges = list(g.edges)
    pick = data.draw(st.lists(st.sampled_from(edges), unique=True) if edges else st.just([]))
    m, used = [], set()
    for u, v in pick:
        if u not in used and v not in used:
            m.append((u, v))
            used |= {u, v}
    ext = extend_to_maximal(g, m)
    assert set(m) <= ext and is_maximal(g, ext)


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_equimatchable_agrees_with_maximal_enumeration(g):
    nu = matching_number(g)
    oracle = all(len(m) == nu for m in enumerate_maximal_matchings(g))
    res = is_equimatchable(g)
    assert bool(res) == oracle
    if not res:
        assert len(res.witness.maximal) < nu and is_maximal(g, res.witness.maximal)


@given(graphs(max_n=8))
def test_gallai_edmonds_partition(g):
    ge = gallai_edmonds(g)
    assert sorted(ge.D + ge.A + ge.C) == list(range(g.n))
    D = set(ge.D)
    assert set(ge.A) == {v for v in range(g.n) if v not in D and any(w in D for w in g.adj[v])}
    assert is_factor_critical(g) == (g.n % 2 == 1 and len(components(g)) == 1 and len(D) == g.n)


@given(graphs(max_n=8))
def test_connectivity_and_alpha_against_brute_force(g):
    assert vertex_connectivity(g) == brute_kappa(g.n, g.edges)
    cert = independence_number(g)
    assert cert.alpha == brute_alpha(g.n, g.edges)
    assert is_independent(g, to_mask(cert.witness))


@given(graphs(max_n=8))
def test_minimum_cuts_separate(g):
    if g.n < 2 or g.edge_count == g.n * (g.n - 1) // 2:
        return
    k = vertex_connectivity(g)
    for cut in minimum_vertex_cuts(g):
        assert cut.k == k and len(cut.parts) >= 2


@given(graphs(max_n=8), st.data())
def test_saturating_matching_covers_required(g, data):
    req = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    m = saturating_matching(g, req)
    if m is not None:
        assert is_matching(g, m) and req <= {x for e in m for x in e}


@given(graphs(max_n=7), st.data())
def test_minimal_isolating_matchings_are_minimal(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    for m in minimal_isolating_matchings(g, v):
        cov = {x for e in m for x in e}
        assert v not in cov and set(g.adj[v]) <= cov
        for e in m:
            assert not set(g.adj[v]) <= cov - set(e)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_checkers_never_fail_on_connected_graphs(g):
    if g.n == 0 or len(components(g)) > 1:
        return
    for v in check_all(g):
        assert v.status != "fails", v.to_dict()


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_every_fail_revalidates(g):
    for v in check_all(g):
        if v.status == "fails":
            assert revalidate(g, v)
