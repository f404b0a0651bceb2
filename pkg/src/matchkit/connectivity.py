"""Vertex connectivity, minimum vertex cuts, and exact independence number."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, bits, component_masks, is_independent, to_mask
from .matching import bipartite_max_matching


@dataclass(frozen=True)
class CutDecomposition:
    S: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]  # components of G - S, largest first

    @property
    def k(self) -> int:
        return len(self.S)

    def summary(self) -> dict:
        return {"S": list(self.S), "component_sizes": [len(p) for p in self.parts]}


@dataclass(frozen=True)
class IndependenceCertificate:
    alpha: int
    witness: tuple[int, ...]


def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Max number of internally disjoint s-t paths (s, t non-adjacent), stopping at ``limit``.

    Unit vertex capacities via splitting v -> (v_in = 2v, v_out = 2v+1).
    """
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(b, a)] = cap.get((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {src: src}
        q = deque([src])
        while q and dst not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if dst not in prev:
            break
        b = dst
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); K_n gives n - 1 and a disconnected graph gives 0.

    Fix a minimum-degree vertex v: a minimum cut either avoids v (so it
    separates v from some non-neighbor) or contains v (then it separates two
    non-adjacent neighbors of v).
    """
    n = g.n
    if n <= 1:
        return 0
    if len(component_masks(g)) > 1:
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    v = min(range(n), key=lambda x: (g.degree(x), x))
    best = g.degree(v)
    for w in range(n):
        if w != v and not g.has_edge(v, w):
            best = min(best, _local_connectivity(g, v, w, best))
    nb = g.adj[v]
    for x, y in combinations(nb, 2):
        if not g.has_edge(x, y):
            best = min(best, _local_connectivity(g, x, y, best))
    return best


def is_separating(g: Graph, cut_mask: int) -> bool:
    rest = g.vertex_mask & ~cut_mask
    return len(component_masks(g, rest)) >= 2


def cut_decomposition(g: Graph, S) -> CutDecomposition:
    smask = to_mask(S)
    parts = component_masks(g, g.vertex_mask & ~smask)
    ordered = sorted(parts, key=lambda c: (-c.bit_count(), (c & -c).bit_length()))
    return CutDecomposition(tuple(bits(smask)), tuple(tuple(bits(c)) for c in ordered))


def minimum_vertex_cuts(g: Graph, cap: int | None = None) -> Iterator[CutDecomposition]:
    """Every vertex cut of size kappa(g), in lexicographic order of the cut."""
    n = g.n
    if g.edge_count == n * (n - 1) // 2:
        raise GraphError("no vertex cut exists: graph is complete")
    k = vertex_connectivity(g)
    count = 0
    for S in combinations(range(n), k):
        smask = to_mask(S)
        if is_separating(g, smask):
            yield cut_decomposition(g, S)
            count += 1
            if cap is not None and count >= cap:
                return


def independence_number(g: Graph) -> IndependenceCertificate:
    """Exact alpha by branch and bound: max clique of the complement with a
    greedy-coloring upper bound."""
    n = g.n
    full = g.vertex_mask
    comp = [full & ~g.masks[v] & ~(1 << v) for v in range(n)]
    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # vertices with their color numbers, sorted by color
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                rest &= ~(1 << v)
                avail &= ~(1 << v) & ~comp[v]
        return order

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, c in reversed(order):
            if len(current) + c <= len(best):
                return
            current.append(v)
            nxt = cand & comp[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if n:
        expand([], full)
    witness = tuple(sorted(best))
    assert is_independent(g, to_mask(witness))
    return IndependenceCertificate(len(witness), witness)


def independent_edges_between(g: Graph, H, X) -> frozenset:
    """A maximum matching between vertex sets H and X (edges with one end in each)."""
    hm, xm = to_mask(H), to_mask(X)
    if hm & xm:
        raise GraphError("H and X must be disjoint")
    return bipartite_max_matching(g, bits(hm), bits(xm)).matching
