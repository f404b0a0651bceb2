"""Generators for the named graph families, with labeled role sets.

Vertex numbering: S first, then C, then D (families without those roles
number their vertices in the natural order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, complete_bipartite, complete_graph, cycle_graph

FAMILIES = (
    "complete",
    "complete_bipartite",
    "odd_cycle",
    "Gk_tight",
    "G_mn",
    "small_component_m1",
    "small_component_m2",
    "favaron_cutvertex",
    "kCutEFC_bipartite_case",
)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class Construction:
    spec: FamilySpec
    graph: Graph
    roles: dict = field(default_factory=dict)

    def role_map(self) -> dict:
        return {k: list(v) for k, v in sorted(self.roles.items())}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


def _arity(spec: FamilySpec, k: int) -> None:
    _need(len(spec.params) == k, f"{spec.family} takes {k} parameter(s), got {len(spec.params)}")


def gk_tight(k: int) -> Construction:
    """S independent (k), C independent (k-1), D = K_2; S joined to everything else."""
    _need(k >= 3, "Gk_tight requires k >= 3")
    S = list(range(k))
    C = list(range(k, 2 * k - 1))
    D = [2 * k - 1, 2 * k]
    edges = [(s, x) for s in S for x in C + D] + [tuple(D)]
    return Construction(FamilySpec("Gk_tight", (k,)), Graph(2 * k + 1, edges), {"S": S, "C": C, "D": D})


def g_mn(m: int, n: int) -> Construction:
    """K_m and K_n, both joined completely to an independent triple S."""
    _need(m % 2 == 1, "G_mn requires m odd")
    _need(n % 2 == 1, "G_mn requires n odd")
    _need(m + n >= 4, "G_mn requires m + n >= 4")
    S = [0, 1, 2]
    C = list(range(3, 3 + m))
    D = list(range(3 + m, 3 + m + n))
    edges = list(combinations(C, 2)) + list(combinations(D, 2))
    edges += [(s, x) for s in S for x in C + D]
    return Construction(FamilySpec("G_mn", (m, n)), Graph(3 + m + n, edges), {"S": S, "C": C, "D": D})


def small_component_m1(n: int, k: int) -> Construction:
    """K_{l,l} (l = max(n, k)) plus an apex joined to a k-set S meeting both sides.

    S takes ceil(k/2) lowest vertices of side 0 and the rest from side 1.
    """
    _need(k >= 3, "small_component_m1 requires k >= 3")
    _need(n >= 1, "small_component_m1 requires n >= 1")
    l = max(n, k)
    a = (k + 1) // 2
    b = k - a
    side0 = list(range(l))
    side1 = list(range(l, 2 * l))
    s_old = side0[:a] + side1[:b]
    c_old = side0[a:] + side1[b:]
    relabel = {v: i for i, v in enumerate(s_old + c_old)}
    apex = 2 * l
    edges = [(relabel[u], relabel[v]) for u in side0 for v in side1]
    edges += [(relabel[s], apex) for s in s_old]
    roles = {
        "S": list(range(k)),
        "C": list(range(k, 2 * l)),
        "D": [apex],
        "side0": sorted(relabel[v] for v in side0),
        "side1": sorted(relabel[v] for v in side1),
    }
    return Construction(FamilySpec("small_component_m1", (n, k)), Graph(2 * l + 1, edges), roles)


def kcut_caseb_shape(n: int, k: int, removed_pairs=()) -> Construction:
    """K_{n,n+1} on C u S with S inside the larger side, minus the listed
    S-to-smaller-side edges, plus a K_2 component D joined to all of S.

    ``removed_pairs`` holds (i, j): the i-th vertex of S and the j-th vertex
    of the smaller side. Both coordinates must be pairwise distinct.
    """
    _need(k >= 1, "k must be >= 1")
    _need(n >= k, "larger side must contain S: need n >= k")
    pairs = [tuple(p) for p in removed_pairs]
    _need(len({i for i, _ in pairs}) == len(pairs), "removed pairs repeat an S vertex")
    _need(len({j for _, j in pairs}) == len(pairs), "removed pairs repeat a C vertex")
    for i, j in pairs:
        _need(0 <= i < k and 0 <= j < n, f"removed pair {(i, j)} out of range")
    S = list(range(k))
    W = list(range(k, n + 1))  # rest of the larger side
    small = list(range(n + 1, 2 * n + 1))
    D = [2 * n + 1, 2 * n + 2]
    gone = {(S[i], small[j]) for i, j in pairs}
    edges = [(u, v) for u in S + W for v in small if (u, v) not in gone]
    edges += [(s, d) for s in S for d in D] + [tuple(D)]
    roles = {"S": S, "C": W + small, "D": D, "larger": S + W, "smaller": small}
    spec = FamilySpec("kCutEFC_bipartite_case", (n, k) + tuple(x for p in pairs for x in p))
    return Construction(spec, Graph(2 * n + 3, edges), roles)


def small_component_m2(n: int, k: int) -> Construction:
    """K_{l,l+1} (l = max(n, k)) with K_2 joined to k vertices of the larger side."""
    _need(k >= 3, "small_component_m2 requires k >= 3")
    _need(n >= 1, "small_component_m2 requires n >= 1")
    l = max(n, k)
    c = kcut_caseb_shape(l, k)
    return Construction(FamilySpec("small_component_m2", (n, k)), c.graph, c.roles)


def favaron_cutvertex(*halves: int) -> Construction:
    """Cut vertex 0 joined to every vertex of blocks K_{2p} (one per parameter p >= 1)."""
    _need(len(halves) >= 1, "favaron_cutvertex needs at least one block size")
    _need(all(p >= 1 for p in halves), "block half-sizes must be >= 1")
    edges = []
    nxt = 1
    blocks = []
    for p in halves:
        block = list(range(nxt, nxt + 2 * p))
        nxt += 2 * p
        blocks.append(block)
        edges += list(combinations(block, 2)) + [(0, v) for v in block]
    roles = {"S": [0], "C": blocks[0]}
    if len(blocks) > 1:
        roles["D"] = [v for b in blocks[1:] for v in b]
    return Construction(FamilySpec("favaron_cutvertex", tuple(halves)), Graph(nxt, edges), roles)


def build(spec: FamilySpec) -> Construction:
    p = tuple(spec.params)
    f = spec.family
    if f == "complete":
        _arity(spec, 1)
        _need(p[0] >= 1, "complete requires n >= 1")
        return Construction(spec, complete_graph(p[0]))
    if f == "complete_bipartite":
        _arity(spec, 2)
        _need(p[0] >= 1 and p[1] >= 1, "complete_bipartite requires both sides >= 1")
        return Construction(spec, complete_bipartite(*p), {"side0": list(range(p[0])),
                                                            "side1": list(range(p[0], p[0] + p[1]))})
    if f == "odd_cycle":
        _arity(spec, 1)
        _need(p[0] >= 3 and p[0] % 2 == 1, "odd_cycle requires odd n >= 3")
        return Construction(spec, cycle_graph(p[0]))
    if f == "Gk_tight":
        _arity(spec, 1)
        return gk_tight(*p)
    if f == "G_mn":
        _arity(spec, 2)
        return g_mn(*p)
    if f == "small_component_m1":
        _arity(spec, 2)
        return small_component_m1(*p)
    if f == "small_component_m2":
        _arity(spec, 2)
        return small_component_m2(*p)
    if f == "favaron_cutvertex":
        return favaron_cutvertex(*p)
    if f == "kCutEFC_bipartite_case":
        _need(len(p) >= 2 and len(p) % 2 == 0, "kCutEFC_bipartite_case takes n, k, then index pairs")
        pairs = list(zip(p[2::2], p[3::2]))
        return kcut_caseb_shape(p[0], p[1], pairs)
    raise ConstructionError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")


def standard_suite() -> list[FamilySpec]:
    """Fixed, ordered list of family instances used by the verification suite."""
    specs = [FamilySpec("Gk_tight", (k,)) for k in (3, 4, 5, 6)]
    specs += [FamilySpec("G_mn", mn) for mn in ((1, 3), (3, 3), (3, 5), (5, 5))]
    for fam in ("small_component_m1", "small_component_m2"):
        specs += [FamilySpec(fam, (n, k)) for k in (3, 4) for n in (4, 6)]
    specs += [FamilySpec("complete", (n,)) for n in (4, 5, 6)]
    specs += [FamilySpec("complete_bipartite", ab) for ab in ((3, 3), (3, 4))]
    specs += [FamilySpec("odd_cycle", (n,)) for n in (5, 7, 9)]
    specs += [FamilySpec("favaron_cutvertex", p) for p in ((1, 1), (1, 2), (2, 2))]
    specs += [FamilySpec("kCutEFC_bipartite_case", p) for p in ((3, 3), (4, 3), (4, 3, 0, 0))]
    return specs
