"""Statement checkers.

Each checker tests the hypotheses of one statement on a graph and then
verifies its conclusion, returning a :class:`Verdict`. Hypothesis failures
yield ``not_applicable``; a ``fails`` verdict always carries a
``violation`` entry that :func:`revalidate` can re-check from scratch.

Where a statement speaks of "a k-cut S", k is the connectivity of the graph
and the checker ranges over every minimum vertex cut.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, islice

from .connectivity import (
    CutDecomposition,
    independence_number,
    minimum_vertex_cuts,
    vertex_connectivity,
)
from .decomposition import (
    is_equimatchable,
    is_factor_critical,
    is_randomly_matchable,
    structural_randomly_matchable,
)
from .graph import (
    Graph,
    bipartition,
    bits,
    complement_edges,
    component_masks,
    induced_subgraph,
    is_clique,
    is_connected,
    to_mask,
)
from .matching import (
    bipartite_max_matching,
    covered,
    enumerate_maximal_matchings,
    enumerate_saturating_between,
    format_matching,
    matched_vertex_sets,
    minimal_isolating_covers,
    has_perfect_matching,
    matching_number,
    maximum_matching,
)

STATUSES = ("holds", "fails", "not_applicable")

# enumeration-based loops are exhaustive up to this many vertices
EXHAUSTIVE_N = 13
# item cap for enumerations on larger graphs
BOUNDED_ITEMS = 2000


@dataclass
class Verdict:
    statement_id: str
    status: str
    certificate: dict = field(default_factory=dict)
    bounded: bool = False
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "statement_id": self.statement_id,
            "status": self.status,
            "bounded": self.bounded,
            "certificate": self.certificate,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


class _Fail(Exception):
    def __init__(self, violation: dict, **extra):
        super().__init__(violation["predicate"])
        self.payload = {"violation": violation, **extra}


def _violation(predicate: str, **args) -> dict:
    return {"predicate": predicate, "args": {k: _jsonable(v) for k, v in args.items()}}


def _jsonable(v):
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in v]
        return sorted(items) if isinstance(v, (set, frozenset)) else items
    return v


def _vs(mask: int) -> list[int]:
    return list(bits(mask))


class Facts:
    """Lazily computed, shared properties of one graph."""

    def __init__(self, g: Graph, deadline: float | None = None):
        self.g = g
        self.n = g.n
        self.full = g.vertex_mask
        self.deadline = deadline

    def out_of_time(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline

    @cached_property
    def complete(self) -> bool:
        return self.g.edge_count == self.n * (self.n - 1) // 2

    @cached_property
    def connected(self) -> bool:
        return self.n > 0 and is_connected(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    @cached_property
    def equimatchable(self) -> bool:
        return bool(is_equimatchable(self.g))

    @cached_property
    def factor_critical(self) -> bool:
        return is_factor_critical(self.g)

    @cached_property
    def efc(self) -> bool:
        return self.factor_critical and self.equimatchable

    @cached_property
    def alpha(self):
        return independence_number(self.g)

    @cached_property
    def cuts(self) -> list[CutDecomposition]:
        if self.complete or self.n < 2:
            return []
        return list(minimum_vertex_cuts(self.g))

    def limit(self) -> int | None:
        return None if self.n <= EXHAUSTIVE_N else BOUNDED_ITEMS


class _Budget:
    """Caps an enumeration and records whether it was truncated."""

    def __init__(self, facts: Facts, limit: int | None = None):
        self.facts = facts
        self.limit = facts.limit() if limit is None else limit
        self.truncated = False

    def take(self, it):
        count = 0
        for item in it:
            if (self.limit is not None and count >= self.limit) or self.facts.out_of_time():
                self.truncated = True
                return
            count += 1
            yield item


CHECKERS: dict = {}
HYPOTHESES: dict = {}


def checker(statement_id: str, hypothesis):
    """Register a checker; ``hypothesis(facts)`` returns None or the failed hypothesis."""

    def wrap(body):
        def run(g: Graph, facts: Facts | None = None, **opts) -> Verdict:
            f = facts if facts is not None and facts.g is g else Facts(g)
            t0 = time.perf_counter()
            reason = hypothesis(f, **opts)
            if reason is not None:
                v = Verdict(statement_id, "not_applicable", {"hypothesis_failed": reason})
            else:
                budget = _Budget(f)
                try:
                    cert = body(f, budget, **opts)
                    v = Verdict(statement_id, "holds", cert, budget.truncated)
                except _Fail as fail:
                    v = Verdict(statement_id, "fails", fail.payload, budget.truncated)
            v.elapsed = time.perf_counter() - t0
            return v

        run.__name__ = body.__name__
        run.__doc__ = body.__doc__
        run.statement_id = statement_id
        CHECKERS[statement_id] = run
        HYPOTHESES[statement_id] = hypothesis
        return run

    return wrap


# ---------------------------------------------------------------------------
# predicates: True when the stated conclusion holds on the given objects

def _p_connected_rm(g, vertices):
    return structural_randomly_matchable(g, to_mask(vertices))


def _p_component_count_eq(g, cut, count):
    return len(component_masks(g, g.vertex_mask & ~to_mask(cut))) == count


def _p_component_count_le(g, cut, bound):
    return len(component_masks(g, g.vertex_mask & ~to_mask(cut))) <= bound


def _p_complete(g, vertices):
    return is_clique(g, to_mask(vertices))


def _p_independent_edges(g, H, X):
    m = bipartite_max_matching(g, H, X).matching
    return len(m) >= min(len(H), len(X))


def _p_has_saturating(g, side, other):
    return len(bipartite_max_matching(g, side, other).matching) == len(side)


def _p_caseb_completion(g, S, C):
    return caseb_completion(g, to_mask(S), to_mask(C)) is not None


def _p_favaron_2cut(g, cut):
    return _favaron_2cut_problem(g, cut) is None


def _p_matching_in_S(g, S, s):
    k = len(S)
    target = (k - 2) // 2 if k % 2 == 0 else (k - 3) // 2
    return matching_number(g, to_mask(S) & ~(1 << s)) >= target


def _p_triple_has_edge(g, s, c, d):
    return g.has_edge(s, c) or g.has_edge(s, d) or g.has_edge(c, d)


def _p_knn_pair(g, n, u, v):
    from .graph import complete_bipartite, remove_vertices

    h = complete_bipartite(n, n)
    rest, _ = remove_vertices(h, (u, v))
    return h.has_edge(u, v) or not is_randomly_matchable(rest)


def _p_favaron_cutvertex_iff(g):
    f = Facts(g)
    return f.efc == all(_favaron_cutvertex_conditions(f).values())


def _p_alpha2_matchings(g):
    return _alpha2_problem(Facts(g)) is None


def _p_odd_alpha2(g):
    f = Facts(g)
    return f.factor_critical or _odd_alpha2_structure(g) is not None


def _p_alpha_iff_efc(g):
    f = Facts(g)
    return (f.alpha.alpha <= 2) == f.efc


def _p_plus_e_iff(g):
    f = Facts(g)
    return (f.alpha.alpha <= 2) == _plus_e_rhs(f)[0]


def _p_not_equimatchable_after_edge(g, edge):
    # holds when g + edge is equimatchable
    return bool(is_equimatchable(g.add_edge(*edge)))


PREDICATES = {
    "connected_randomly_matchable": _p_connected_rm,
    "component_count_eq": _p_component_count_eq,
    "component_count_le": _p_component_count_le,
    "complete": _p_complete,
    "independent_edges_at_least_min": _p_independent_edges,
    "has_saturating_matching": _p_has_saturating,
    "complete_bipartite_completion": _p_caseb_completion,
    "favaron_2cut_structure": _p_favaron_2cut,
    "matching_in_S_minus_s": _p_matching_in_S,
    "triple_has_edge": _p_triple_has_edge,
    "knn_pair_adjacent_or_not_rm": _p_knn_pair,
    "favaron_cutvertex_iff": _p_favaron_cutvertex_iff,
    "alpha2_matchings": _p_alpha2_matchings,
    "odd_alpha2_structure": _p_odd_alpha2,
    "alpha_iff_efc": _p_alpha_iff_efc,
    "plus_e_iff": _p_plus_e_iff,
}


def revalidate(g: Graph, verdict: Verdict | dict) -> bool:
    """True iff a ``fails`` verdict's certificate reproduces the violation.

    The statement's hypotheses are re-checked on ``g`` and the violated
    predicate is recomputed from the certificate's objects alone.
    """
    d = verdict.to_dict() if isinstance(verdict, Verdict) else verdict
    if d["status"] != "fails":
        return False
    viol = d["certificate"].get("violation")
    if not viol or viol.get("predicate") not in PREDICATES:
        return False
    sid = d["statement_id"]
    if sid in HYPOTHESES and HYPOTHESES[sid](Facts(g)) is not None:
        return False
    try:
        return PREDICATES[viol["predicate"]](g, **viol["args"]) is False
    except (TypeError, ValueError, KeyError, IndexError):
        return False


# ---------------------------------------------------------------------------
# shared hypothesis helpers

def _two_connected_efc(f: Facts, **_):
    if f.n < 3 or f.kappa < 2:
        return "graph is not 2-connected"
    if not f.factor_critical:
        return "graph is not factor-critical"
    if not f.equimatchable:
        return "graph is not equimatchable"
    return None


def _kconn_efc(min_k: int, min_order: bool = False):
    def hyp(f: Facts, **_):
        if f.complete or f.n < 2:
            return "complete graph has no vertex cut"
        if f.kappa < min_k:
            return f"connectivity {f.kappa} < {min_k}"
        if min_order and f.n < 2 * f.kappa + 3:
            return f"n = {f.n} < 2k+3 = {2 * f.kappa + 3}"
        if not f.factor_critical:
            return "graph is not factor-critical"
        if not f.equimatchable:
            return "graph is not equimatchable"
        return None

    return hyp


def _cut_cert(cut: CutDecomposition) -> dict:
    return {"S": list(cut.S), "components": [list(p) for p in cut.parts]}


# ---------------------------------------------------------------------------
# section 2

@checker("thm_isolating", _two_connected_efc)
def check_thm_isolating(f: Facts, budget: _Budget) -> dict:
    """Minimal isolating matchings leave a connected randomly matchable rest.

    The conclusion depends on M only through V(M), so each distinct V(M) is
    checked once.
    """
    g = f.g
    count = 0
    for v in range(f.n):
        for cov, M in budget.take(minimal_isolating_covers(g, v)):
            count += 1
            rest = f.full & ~cov & ~(1 << v)
            if not structural_randomly_matchable(g, rest):
                raise _Fail(_violation("connected_randomly_matchable", vertices=_vs(rest)),
                            vertex=v, matching=format_matching(M))
    return {"isolating_covers_checked": count}


@checker("lemma_matching_cut", _two_connected_efc)
def check_lemma_matching_cut(f: Facts, budget: _Budget, size_cap: int | None = None) -> dict:
    """For every matching M and odd component H of G - V(M), G - (H u V(M)) is connected RM.

    Matchings with the same V(M) give the same remainders, so one matching
    per covered set is enough.
    """
    g = f.g
    seen: dict[int, bool] = {}
    count = 0
    for cov, M in budget.take(matched_vertex_sets(g, size_cap)):
        count += 1
        rest = f.full & ~cov
        for H in component_masks(g, rest):
            if H.bit_count() % 2 == 0:
                continue
            R = rest & ~H
            ok = seen.get(R)
            if ok is None:
                ok = seen[R] = structural_randomly_matchable(g, R)
            if not ok:
                raise _Fail(_violation("connected_randomly_matchable", vertices=_vs(R)),
                            matching=format_matching(M), odd_component=_vs(H))
    return {"covered_sets_checked": count, "size_cap": size_cap, "distinct_remainders": len(seen)}


# ---------------------------------------------------------------------------
# section 3

def _hyp_independent_edges(f: Facts, **_):
    if f.complete or f.n < 2:
        return "complete graph has no vertex cut"
    return None


@checker("lemma_independent_edges", _hyp_independent_edges)
def check_lemma_independent_edges(f: Facts, budget: _Budget) -> dict:
    """At least min(|H|, |X|) independent edges between a component H and any X within the cut."""
    g = f.g
    checked = 0
    for cut in f.cuts:
        S = list(cut.S)
        subsets = (X for r in range(len(S) + 1) for X in combinations(S, r))
        if len(S) > 12:
            subsets = islice(subsets, BOUNDED_ITEMS)
            budget.truncated = True
        for X in budget.take(subsets):
            for H in cut.parts:
                checked += 1
                cert = bipartite_max_matching(g, H, X)
                if len(cert.matching) < min(len(H), len(X)):
                    smaller_cut = sorted((set(S) - set(X)) | set(cert.cover))
                    raise _Fail(
                        _violation("independent_edges_at_least_min", H=list(H), X=list(X)),
                        cut=S, konig_cover=list(cert.cover), refuting_cut=smaller_cut,
                    )
    return {"k": f.kappa, "cuts": len(f.cuts), "triples_checked": checked}


def _qualifying_k_and_one(f: Facts, cut: CutDecomposition):
    sizes = [len(p) for p in cut.parts]
    return 1 in sizes and any(s >= f.kappa for s in sizes)


def _hyp_k_and_one(f: Facts, **_):
    reason = _kconn_efc(2)(f)
    if reason:
        return reason
    if not any(_qualifying_k_and_one(f, c) for c in f.cuts):
        return "no minimum cut with a singleton and a >= k component"
    return None


@checker("thm_k_and_one", _hyp_k_and_one)
def check_thm_k_and_one(f: Facts, budget: _Budget) -> dict:
    """Singleton plus large component: two components, S-saturating M, C - V(M) connected RM."""
    g = f.g
    per_cut = []
    for cut in f.cuts:
        if not _qualifying_k_and_one(f, cut):
            continue
        if len(cut.parts) != 2:
            raise _Fail(_violation("component_count_eq", cut=list(cut.S), count=2), **_cut_cert(cut))
        C = cut.parts[0]
        cmask = to_mask(C)
        found = 0
        for M in budget.take(enumerate_saturating_between(g, cut.S, C)):
            found += 1
            rest = cmask & ~covered(M)
            if not structural_randomly_matchable(g, rest):
                raise _Fail(_violation("connected_randomly_matchable", vertices=_vs(rest)),
                            matching=format_matching(M), **_cut_cert(cut))
        if not found:
            raise _Fail(_violation("has_saturating_matching", side=list(cut.S), other=list(C)),
                        **_cut_cert(cut))
        per_cut.append({"S": list(cut.S), "saturating_matchings": found})
    return {"k": f.kappa, "cuts": per_cut}


@checker("lemma_two_components", _kconn_efc(2, min_order=True))
def check_lemma_two_components(f: Facts, budget: _Budget) -> dict:
    """With n >= 2k+3 every minimum cut leaves exactly two components."""
    for cut in f.cuts:
        if len(cut.parts) != 2:
            raise _Fail(_violation("component_count_eq", cut=list(cut.S), count=2), **_cut_cert(cut))
    return {"k": f.kappa, "cuts_checked": len(f.cuts)}


def _k_and_two_pairs(f: Facts, cut: CutDecomposition):
    """Components C (>= k vertices) for which another component has exactly 2 vertices."""
    out = []
    for i, C in enumerate(cut.parts):
        if len(C) >= f.kappa and any(len(P) == 2 for j, P in enumerate(cut.parts) if j != i):
            out.append(C)
    return out


def _hyp_k_and_two(min_k: int):
    def hyp(f: Facts, **_):
        reason = _kconn_efc(min_k)(f)
        if reason:
            return reason
        if not any(_k_and_two_pairs(f, c) for c in f.cuts):
            return "no minimum cut with a >= k component and a 2-vertex component"
        return None

    return hyp


@checker("lemma_k_and_two", _hyp_k_and_two(2))
def check_lemma_k_and_two(f: Facts, budget: _Budget) -> dict:
    """Every S-saturating M' and x in C n V(M'): (C - V(M')) + x is connected RM."""
    g = f.g
    per_cut = []
    for cut in f.cuts:
        for C in _k_and_two_pairs(f, cut):
            if len(cut.parts) != 2:
                raise _Fail(_violation("component_count_eq", cut=list(cut.S), count=2), **_cut_cert(cut))
            cmask = to_mask(C)
            found = 0
            for M in budget.take(enumerate_saturating_between(g, cut.S, C)):
                found += 1
                cov = covered(M)
                for x in bits(cmask & cov):
                    R = (cmask & ~cov) | 1 << x
                    if not structural_randomly_matchable(g, R):
                        raise _Fail(_violation("connected_randomly_matchable", vertices=_vs(R)),
                                    matching=format_matching(M), x=x, **_cut_cert(cut))
            if not found:
                raise _Fail(_violation("has_saturating_matching", side=list(cut.S), other=list(C)),
                            **_cut_cert(cut))
            per_cut.append({"S": list(cut.S), "C": list(C), "saturating_matchings": found})
    return {"k": f.kappa, "cuts": per_cut}


def caseb_completion(g: Graph, smask: int, cmask: int):
    """Distinct non-edges x_i y_i (x_i in C, y_i in S) completing G[C u S] to K_{n,n+1}.

    The bipartition is forced: G[C] is connected, so its two-coloring is
    unique, and the independent S must sit wholly on one side. Returns
    (pairs, smaller_side, larger_side) or None.
    """
    sides = bipartition(g, cmask)
    if sides is None:
        return None
    for C1, C2 in (sides, sides[::-1]):
        P, Q = C1, smask | C2
        if abs(P.bit_count() - Q.bit_count()) != 1:
            continue
        if any(g.masks[v] & Q for v in bits(Q)):
            continue
        missing = [(p, q) for p in bits(P) for q in bits(Q & ~g.masks[p])]
        if any(not smask >> q & 1 for _, q in missing):
            continue
        if len({p for p, _ in missing}) != len(missing) or len({q for _, q in missing}) != len(missing):
            continue
        small, large = (P, Q) if P.bit_count() < Q.bit_count() else (Q, P)
        return sorted(missing), small, large
    return None


def kcut_structure_report(g: Graph, cut: CutDecomposition, C) -> dict:
    """Structure of a qualifying cut: S, C, D, X = C n V(M), C' = C - X, U, W, case."""
    cmask = to_mask(C)
    smask = to_mask(cut.S)
    D = [p for p in cut.parts if tuple(p) != tuple(C)]
    M = bipartite_max_matching(g, cut.S, C).matching
    X = cmask & covered(M)
    Cp = cmask & ~X
    report = {
        "S": list(cut.S),
        "C": list(C),
        "D": [list(p) for p in D],
        "M": format_matching(M),
        "X": _vs(X),
        "Cprime": _vs(Cp),
        "case": "A" if any(g.masks[s] & smask for s in cut.S) else "B",
    }
    if report["case"] == "B":
        sides = bipartition(g, Cp)
        if sides is not None:
            U, W = sorted(sides, key=lambda m: (m.bit_count(), m))
            report["U"], report["W"] = _vs(U), _vs(W)
    return report


@checker("thm_kcut_structure", _hyp_k_and_two(3))
def check_thm_kcut_structure(f: Facts, budget: _Budget) -> dict:
    """Case A: an edge in S forces C complete. Case B: G[C u S] is K_{n,n+1} minus distinct pairs."""
    g = f.g
    reports = []
    for cut in f.cuts:
        for C in _k_and_two_pairs(f, cut):
            if len(cut.parts) != 2:
                raise _Fail(_violation("component_count_eq", cut=list(cut.S), count=2), **_cut_cert(cut))
            rep = kcut_structure_report(g, cut, C)
            if rep["case"] == "A":
                if not is_clique(g, to_mask(C)):
                    raise _Fail(_violation("complete", vertices=list(C)), report=rep)
            else:
                comp = caseb_completion(g, to_mask(cut.S), to_mask(C))
                if comp is None:
                    raise _Fail(_violation("complete_bipartite_completion", S=list(cut.S), C=list(C)),
                                report=rep)
                pairs, small, large = comp
                rep["completion"] = [[p, q] for p, q in pairs]
                rep["sides"] = [_vs(small), _vs(large)]
            reports.append(rep)
    return {"k": f.kappa, "reports": reports}


def _big_parts(cut: CutDecomposition, size: int = 3):
    return [p for p in cut.parts if len(p) >= size]


def _hyp_both_complete(f: Facts, **_):
    reason = _kconn_efc(3, min_order=True)(f)
    if reason:
        return reason
    if not any(len(_big_parts(c)) >= 2 for c in f.cuts):
        return "no minimum cut with two components of >= 3 vertices"
    return None


@checker("thm_both_complete", _hyp_both_complete)
def check_thm_both_complete(f: Facts, budget: _Budget) -> dict:
    """Two components of size >= 3 behind a minimum cut: exactly two, both complete."""
    g = f.g
    checked = []
    for cut in f.cuts:
        if len(_big_parts(cut)) < 2:
            continue
        if len(cut.parts) != 2:
            raise _Fail(_violation("component_count_eq", cut=list(cut.S), count=2), **_cut_cert(cut))
        for P in cut.parts:
            if not is_clique(g, to_mask(P)):
                raise _Fail(_violation("complete", vertices=list(P)), **_cut_cert(cut))
        checked.append(_cut_cert(cut))
    return {"k": f.kappa, "cuts": checked}


@checker("prop_component_bound", _kconn_efc(3))
def check_prop_component_bound(f: Facts, budget: _Budget) -> dict:
    """Every minimum cut leaves at most k components."""
    worst = 0
    for cut in f.cuts:
        worst = max(worst, len(cut.parts))
        if len(cut.parts) > f.kappa:
            raise _Fail(_violation("component_count_le", cut=list(cut.S), bound=f.kappa), **_cut_cert(cut))
    return {"k": f.kappa, "max_components": worst, "tight": worst == f.kappa}


def _favaron_cutvertex_conditions(f: Facts) -> dict:
    g = f.g
    cut_vertices = [c.S[0] for c in f.cuts] if f.kappa == 1 else []
    cond = {"one_cut_vertex": len(cut_vertices) == 1, "components_rm": False, "adjacent_pair_each": False}
    if cond["one_cut_vertex"]:
        d = cut_vertices[0]
        parts = component_masks(g, f.full & ~(1 << d))
        cond["components_rm"] = all(
            is_randomly_matchable(induced_subgraph(g, bits(P))[0]) for P in parts
        )
        nd = g.masks[d]
        cond["adjacent_pair_each"] = all(
            any(g.masks[u] & nd & P for u in bits(nd & P)) for P in parts
        )
    return cond


def _hyp_kappa(k: int, extra=None):
    def hyp(f: Facts, **_):
        if f.complete or not f.connected:
            return "graph is complete or disconnected"
        if f.kappa != k:
            return f"connectivity {f.kappa} != {k}"
        return extra(f) if extra else None

    return hyp


@checker("favaron_cutvertex", _hyp_kappa(1))
def check_favaron_cutvertex(f: Facts, budget: _Budget) -> dict:
    """Connectivity 1: EFC iff one cut-vertex d, RM components of G - d, d sees an edge of each."""
    cond = _favaron_cutvertex_conditions(f)
    rhs = all(cond.values())
    if f.efc != rhs:
        raise _Fail(_violation("favaron_cutvertex_iff"), efc=f.efc, conditions=cond)
    return {"efc": f.efc, "conditions": cond}


def _b_shape(g: Graph, B: int, s1: int, s2: int) -> str | None:
    """Which of the four allowed shapes the odd component B takes.

    b1, b2 range over distinct vertices of B adjacent to s1 and s2.
    """
    size = B.bit_count()
    inner = sum((g.masks[v] & B).bit_count() for v in bits(B)) // 2
    if inner == size * (size - 1) // 2:
        return "K_2p+1"
    choices = [(b1, b2) for b1 in bits(g.masks[s1] & B) for b2 in bits(g.masks[s2] & B) if b1 != b2]
    if inner == size * (size - 1) // 2 - 1:
        if any(not g.has_edge(b1, b2) for b1, b2 in choices):
            return "K_2p+1 - b1b2"
    p = size // 2
    s_nbrs = (g.masks[s1] | g.masks[s2]) & B

    def complete_bipartite_shape(h: Graph) -> bool:
        sides = bipartition(h, B)
        if sides is None:
            return False
        small, large = sorted(sides, key=lambda m: m.bit_count())
        h_inner = sum((h.masks[v] & B).bit_count() for v in bits(B)) // 2
        return (small.bit_count() == p and large.bit_count() == p + 1
                and h_inner == p * (p + 1) and not s_nbrs & ~large)

    if complete_bipartite_shape(g):
        return "K_p,p+1"
    for b1, b2 in choices:
        if g.has_edge(b1, b2) and complete_bipartite_shape(g.remove_edges([(b1, b2)])):
            return "K_p,p+1 + b1b2"
    return None


def _favaron_2cut_problem(g: Graph, cut) -> str | None:
    S = sorted(cut)
    if len(S) != 2:
        return "cut is not a 2-set"
    s1, s2 = S
    full = g.vertex_mask
    parts = component_masks(g, full & ~to_mask(S))
    if len(parts) != 2:
        return "G - S does not have exactly two components"
    odd = [P for P in parts if P.bit_count() % 2]
    if len(odd) != 1:
        return "components do not have opposite parity"
    B = odd[0]
    A = parts[0] if parts[1] == B else parts[1]
    if B.bit_count() > 1 and _b_shape(g, B, s1, s2) is None:
        return "odd component is none of the four allowed shapes"
    for a1 in bits(g.masks[s1] & A):
        for a2 in bits(g.masks[s2] & A):
            if a1 != a2 and not structural_randomly_matchable(g, A & ~(1 << a1 | 1 << a2)):
                return f"A - {{{a1}, {a2}}} is not connected randomly matchable"
    if B.bit_count() > 1 and not structural_randomly_matchable(g, A):
        return "A is not connected randomly matchable although |B| > 1"
    return None


@checker("favaron_2cut", _hyp_kappa(2, lambda f: None if f.n >= 4 and f.efc else "graph is not EFC with n >= 4"))
def check_favaron_2cut(f: Facts, budget: _Budget) -> dict:
    """2-cuts: one even and one odd component; B in four shapes; A - {a1, a2} connected RM."""
    g = f.g
    shapes = []
    for cut in f.cuts:
        problem = _favaron_2cut_problem(g, cut.S)
        if problem:
            raise _Fail(_violation("favaron_2cut_structure", cut=list(cut.S)), problem=problem, **_cut_cert(cut))
        B = next(to_mask(p) for p in cut.parts if len(p) % 2)
        shapes.append({"S": list(cut.S), "B": _vs(B),
                       "shape": "K_2p+1" if B.bit_count() == 1 else _b_shape(g, B, *cut.S)})
    return {"cuts": shapes}


# ---------------------------------------------------------------------------
# section 4

def _hyp_alpha(f: Facts, **_):
    if f.alpha.alpha != 2:
        return f"independence number {f.alpha.alpha} != 2"
    return None


def _alpha2_problem(f: Facts) -> str | None:
    g = f.g
    if f.n % 2:
        return None if f.equimatchable else "odd graph with alpha = 2 is not equimatchable"
    rm = is_randomly_matchable(g)
    alt = False
    if not f.equimatchable and has_perfect_matching(g):
        cap = f.n // 2 - 2
        alt = cap < 0 or next(enumerate_maximal_matchings(g, size_cap=cap), None) is None
    if rm == alt:
        return "even graph is neither randomly matchable nor almost equimatchable"
    return None


@checker("prop_alpha2_matchings", _hyp_alpha)
def check_prop_alpha2_matchings(f: Facts, budget: _Budget) -> dict:
    """alpha = 2: odd => equimatchable; even => RM xor (non-EM, perfect matching, exposure <= 2)."""
    problem = _alpha2_problem(f)
    if problem:
        raise _Fail(_violation("alpha2_matchings"), problem=problem, witness=list(f.alpha.witness))
    return {"parity": "odd" if f.n % 2 else "even", "equimatchable": f.equimatchable}


def _odd_alpha2_structure(g: Graph) -> dict | None:
    full = g.vertex_mask
    for v in range(g.n):
        parts = component_masks(g, full & ~(1 << v))
        if len(parts) != 2 or not all(is_clique(g, P) for P in parts):
            continue
        if any(g.masks[v] & P == P for P in parts):
            return {"cut_vertex": v, "cliques": [_vs(P) for P in parts]}
    return None


def _hyp_odd_alpha2(f: Facts, **_):
    if not f.connected:
        return "graph is not connected"
    if f.n % 2 == 0:
        return "graph is even"
    return _hyp_alpha(f)


@checker("prop_odd_alpha2_structure", _hyp_odd_alpha2)
def check_prop_odd_alpha2_structure(f: Facts, budget: _Budget) -> dict:
    """Connected odd alpha = 2: factor-critical, or two cliques joined through one vertex."""
    if f.factor_critical:
        return {"branch": "factor_critical"}
    found = _odd_alpha2_structure(f.g)
    if found is None:
        raise _Fail(_violation("odd_alpha2_structure"))
    return {"branch": "two_cliques", **found}


def _two_complete_parts(f: Facts, cut: CutDecomposition) -> bool:
    return len(cut.parts) == 2 and all(is_clique(f.g, to_mask(p)) for p in cut.parts)


def _hyp_matching_of_S(f: Facts, **_):
    reason = _kconn_efc(3)(f)
    if reason:
        return reason
    if not any(_two_complete_parts(f, c) for c in f.cuts):
        return "no minimum cut with exactly two complete components"
    return None


@checker("lemma_matching_of_S", _hyp_matching_of_S)
def check_lemma_matching_of_S(f: Facts, budget: _Budget) -> dict:
    """For each s in S a matching inside S - s leaves 2 (k even) or 3 (k odd) vertices of S."""
    g = f.g
    out = []
    k = f.kappa
    target = (k - 2) // 2 if k % 2 == 0 else (k - 3) // 2
    for cut in f.cuts:
        if not _two_complete_parts(f, cut):
            continue
        smask = to_mask(cut.S)
        for s in cut.S:
            M = maximum_matching(g, smask & ~(1 << s))
            if len(M) < target:
                raise _Fail(_violation("matching_in_S_minus_s", S=list(cut.S), s=s), **_cut_cert(cut))
            out.append({"s": s, "matching": format_matching(sorted(M)[:target])})
    return {"k": k, "target_size": target, "witnesses": out}


def _hyp_unmatched_triple(f: Facts, **_):
    reason = _kconn_efc(4, min_order=True)(f)
    if reason:
        return reason
    if not any(len(_big_parts(c)) >= 2 for c in f.cuts):
        return "no minimum cut with two components of >= 3 vertices"
    return None


@checker("lemma_unmatched_triple", _hyp_unmatched_triple)
def check_lemma_unmatched_triple(f: Facts, budget: _Budget) -> dict:
    """Any s in S, c in C, d in D span at least one edge."""
    g = f.g
    triples = 0
    for cut in f.cuts:
        big = _big_parts(cut)
        for C, D in combinations(big, 2):
            for s in cut.S:
                for c in C:
                    for d in D:
                        triples += 1
                        if not _p_triple_has_edge(g, s, c, d):
                            raise _Fail(_violation("triple_has_edge", s=s, c=c, d=d), **_cut_cert(cut))
    return {"k": f.kappa, "triples_checked": triples}


def _hyp_alpha_iff(f: Facts, **_):
    if f.n % 2 == 0:
        return "graph is even"
    if f.complete or f.n < 2:
        return "complete graph has no vertex cut"
    if f.kappa < 4:
        return f"connectivity {f.kappa} < 4"
    if f.n < 2 * f.kappa + 3:
        return f"n = {f.n} < 2k+3 = {2 * f.kappa + 3}"
    if not any(len(_big_parts(c)) >= 2 for c in f.cuts):
        return "no minimum cut with two components of >= 3 vertices"
    return None


@checker("thm_alpha_iff_efc", _hyp_alpha_iff)
def check_thm_alpha_iff_efc(f: Facts, budget: _Budget) -> dict:
    """alpha <= 2 iff equimatchable and factor-critical."""
    lhs = f.alpha.alpha <= 2
    if lhs != f.efc:
        raise _Fail(_violation("alpha_iff_efc"), alpha=f.alpha.alpha, efc=f.efc,
                    independent_set=list(f.alpha.witness))
    return {"alpha": f.alpha.alpha, "efc": f.efc}


def _plus_e_rhs(f: Facts) -> tuple[bool, list | None]:
    """(EFC and every G + e equimatchable, a complement edge breaking it if any)."""
    g = f.g
    if not f.efc:
        return False, None
    candidates = complement_edges(g)
    if f.alpha.alpha >= 3:
        # the edge x'y' built from an independent triple is the natural suspect
        x, y, z = f.alpha.witness[:3]
        M = maximum_matching(g, f.full & ~(1 << z))
        mate = {u: v for e in M for u, v in (e, e[::-1])}
        e = tuple(sorted((mate[x], mate[y])))
        if e in candidates:
            candidates.remove(e)
            candidates.insert(0, e)
    for e in candidates:
        if not is_equimatchable(g.add_edge(*e)):
            return False, list(e)
    return True, None


def _hyp_plus_e(f: Facts, **_):
    if f.n < 5:
        return "fewer than 5 vertices"
    if f.n % 2 == 0:
        return "graph is even"
    if f.kappa < 2:
        return "graph is not 2-connected"
    return None


@checker("thm_plus_e", _hyp_plus_e)
def check_thm_plus_e(f: Facts, budget: _Budget) -> dict:
    """alpha <= 2 iff G is EFC and G + e is equimatchable for every complement edge e."""
    lhs = f.alpha.alpha <= 2
    rhs, witness_edge = _plus_e_rhs(f)
    cert = {"alpha": f.alpha.alpha, "efc": f.efc, "all_extensions_equimatchable": rhs,
            "complement_edges": len(complement_edges(f.g))}
    if witness_edge is not None:
        cert["witness_edge"] = witness_edge
    if lhs != rhs:
        raise _Fail(_violation("plus_e_iff"), **cert)
    return cert


ORDER = (
    "thm_isolating",
    "lemma_matching_cut",
    "lemma_independent_edges",
    "thm_k_and_one",
    "lemma_two_components",
    "lemma_k_and_two",
    "thm_kcut_structure",
    "thm_both_complete",
    "prop_component_bound",
    "favaron_cutvertex",
    "favaron_2cut",
    "prop_alpha2_matchings",
    "prop_odd_alpha2_structure",
    "lemma_matching_of_S",
    "lemma_unmatched_triple",
    "thm_alpha_iff_efc",
    "thm_plus_e",
)
assert set(ORDER) == set(CHECKERS)


def check_all(g: Graph, statements=None, deadline: float | None = None) -> list[Verdict]:
    f = Facts(g, deadline)
    wanted = ORDER if statements is None else [s for s in ORDER if s in set(statements)]
    return [CHECKERS[s](g, f) for s in wanted]
