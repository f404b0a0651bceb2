"""Matchings: Edmonds' blossom algorithm, bipartite matching with König covers,
saturating matchings, and enumeration of maximal / minimal isolating matchings.

Matchings are frozensets of ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, bits, to_mask

Matching = frozenset


def make_matching(edges: Iterable[tuple[int, int]]) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


def covered(m: Iterable[tuple[int, int]]) -> int:
    """Bitmask of the vertices covered by ``m``."""
    mask = 0
    for u, v in m:
        mask |= 1 << u | 1 << v
    return mask


def sorted_edges(m: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted((min(u, v), max(u, v)) for u, v in m)


def format_matching(m: Iterable[tuple[int, int]]) -> list[str]:
    return [f"{u}-{v}" for u, v in sorted_edges(m)]


def is_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    seen = 0
    for u, v in m:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False
        if seen >> u & 1 or seen >> v & 1:
            return False
        seen |= 1 << u | 1 << v
    return True


def _require_matching(g: Graph, m) -> None:
    if not is_matching(g, m):
        raise GraphError(f"not a matching of the graph: {format_matching(m)}")


# ---------------------------------------------------------------------------
# maximum matching in general graphs

def _mate_array(g: Graph, restrict: int | None = None) -> list[int]:
    """Edmonds' blossom algorithm, O(n^3). Returns ``mate`` (-1 = exposed).

    Exposed roots are tried in increasing vertex order and neighbors are
    scanned ascending, so the result is deterministic.
    """
    n = g.n
    allowed = g.vertex_mask if restrict is None else restrict
    adj = [list(bits(g.masks[v] & allowed)) if allowed >> v & 1 else [] for v in range(n)]
    mate = [-1] * n

    # greedy start, lexicographic
    for u in range(n):
        if mate[u] == -1:
            for w in adj[u]:
                if mate[w] == -1:
                    mate[u], mate[w] = w, u
                    break

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return _augment(to, parent, mate)
                    used[mate[to]] = True
                    q.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] == -1 and adj[root]:
            find_path(root)
    return mate


def _augment(v: int, parent: list[int], mate: list[int]) -> int:
    while v != -1:
        pv = parent[v]
        nxt = mate[pv]
        mate[v], mate[pv] = pv, v
        v = nxt
    return 0


def maximum_matching(g: Graph, within: int | None = None) -> frozenset:
    """A maximum matching of ``g`` (or of ``g[within]``)."""
    mate = _mate_array(g, within)
    return frozenset((v, mate[v]) for v in range(g.n) if mate[v] > v)


def matching_number(g: Graph, within: int | None = None) -> int:
    mate = _mate_array(g, within)
    return sum(1 for v in mate if v != -1) // 2


def deficiency(g: Graph) -> int:
    return g.n - 2 * matching_number(g)


def has_perfect_matching(g: Graph, within: int | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    size = mask.bit_count()
    return size % 2 == 0 and 2 * matching_number(g, mask) == size


def augmenting_path(g: Graph, m: Iterable[tuple[int, int]]) -> list[int] | None:
    """An m-augmenting path (vertex list) or None; certifies maximality of m.

    Runs the blossom search seeded with ``m`` and diffs the result.
    """
    m = frozenset(m)
    _require_matching(g, m)
    best = maximum_matching(g)
    if len(best) == len(m):
        return None
    # symmetric difference contains a path component with more best-edges
    sym = (set(best) - set(m)) | (set(m) - set(best))
    nb: dict[int, list[int]] = {}
    for u, v in sym:
        nb.setdefault(u, []).append(v)
        nb.setdefault(v, []).append(u)
    exposed = {v for v in nb if not covered(m) >> v & 1}
    for start in sorted(exposed):
        path, prev, cur = [start], -1, start
        while True:
            nxt = [w for w in nb[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        if cur != start and cur in exposed:
            return path
    raise AssertionError("no augmenting path in symmetric difference")


# ---------------------------------------------------------------------------
# maximality

def is_maximal(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    m = frozenset(m)
    _require_matching(g, m)
    free = g.vertex_mask & ~covered(m)
    return all(not (g.masks[v] & free) for v in bits(free))


def extend_to_maximal(g: Graph, m: Iterable[tuple[int, int]]) -> frozenset:
    """Greedy extension over lexicographic edge order."""
    m = frozenset(m)
    _require_matching(g, m)
    cov = covered(m)
    out = set(m)
    for u, v in g.edges:
        if not (cov >> u & 1 or cov >> v & 1):
            out.add((u, v))
            cov |= 1 << u | 1 << v
    return frozenset(out)


def enumerate_maximal_matchings(g: Graph, size_cap: int | None = None) -> Iterator[frozenset]:
    """Every maximal matching exactly once (optionally only those of size <= cap).

    Branches on the smallest vertex that is still free and has a free
    neighbor: match it to each free neighbor in turn, or declare it
    permanently exposed. A permanently exposed vertex forces all of its
    neighbors to be covered, which prunes branches early.
    """
    masks = g.masks
    cap = g.n if size_cap is None else size_cap

    def rec(free: int, exposed: int, chosen: list[tuple[int, int]]):
        # a neighbor of an exposed vertex that is itself exposed: dead branch
        for x in bits(exposed):
            if masks[x] & exposed:
                return
        # a neighbor of an exposed vertex must still be coverable
        need = 0
        for x in bits(exposed):
            need |= masks[x] & free
        for w in bits(need):
            if not masks[w] & free:
                return
        if len(chosen) > cap:
            return
        pick = -1
        for v in bits(free):
            if masks[v] & free:
                pick = v
                break
        if pick == -1:
            # remaining free vertices are isolated among themselves
            yield frozenset(chosen)
            return
        if len(chosen) == cap:
            # only the "stay exposed" branches can stay within the cap
            if need:
                return
        v = pick
        for w in bits(masks[v] & free):
            if len(chosen) < cap:
                chosen.append((v, w))
                yield from rec(free & ~(1 << v | 1 << w), exposed, chosen)
                chosen.pop()
        yield from rec(free & ~(1 << v), exposed | 1 << v, chosen)

    # isolated vertices play no role; everything starts free
    yield from rec(g.vertex_mask, 0, [])


def enumerate_matchings(g: Graph, size_cap: int | None = None) -> Iterator[frozenset]:
    """Every matching (including the empty one) exactly once, by edge index."""
    edges = g.edges
    cap = len(edges) if size_cap is None else size_cap

    def rec(start: int, cov: int, chosen: list):
        yield frozenset(chosen)
        if len(chosen) >= cap:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (cov >> u & 1 or cov >> v & 1):
                chosen.append((u, v))
                yield from rec(i + 1, cov | 1 << u | 1 << v, chosen)
                chosen.pop()

    yield from rec(0, 0, [])


def matched_vertex_sets(g: Graph, size_cap: int | None = None) -> Iterator[tuple[int, frozenset]]:
    """Each vertex set V(M) over all matchings M, once, with one matching covering it.

    Vertices are decided in index order (leave exposed, or match to a later
    neighbor); revisited (position, covered) states are pruned.
    """
    n = g.n
    masks = g.masks
    cap = n // 2 if size_cap is None else size_cap
    seen_state: set = set()
    seen_final: set = set()
    chosen: list = []

    def rec(i: int, cov: int):
        while i < n and cov >> i & 1:
            i += 1
        if (i, cov) in seen_state:
            return
        seen_state.add((i, cov))
        if i >= n or len(chosen) >= cap:
            if cov not in seen_final:
                seen_final.add(cov)
                yield cov, make_matching(chosen)
            return
        yield from rec(i + 1, cov)
        for j in bits(masks[i] & ~cov & ~((2 << i) - 1)):
            chosen.append((i, j))
            yield from rec(i + 1, cov | 1 << i | 1 << j)
            chosen.pop()

    yield from rec(0, 0)


def minimal_isolating_covers(g: Graph, v: int) -> Iterator[tuple[int, frozenset]]:
    """Distinct sets V(M) over minimal isolating matchings M of ``v``, each with one such M."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    nv = g.masks[v]
    masks = g.masks
    seen: set = set()
    chosen: list = []

    def rec(cov: int):
        if cov in seen:
            return
        seen.add(cov)
        todo = nv & ~cov
        if not todo:
            yield cov, make_matching(chosen)
            return
        x = (todo & -todo).bit_length() - 1
        for y in bits(masks[x] & ~cov & ~(1 << v)):
            chosen.append((x, y))
            yield from rec(cov | 1 << x | 1 << y)
            chosen.pop()

    yield from rec(0)


# ---------------------------------------------------------------------------
# bipartite matching and König covers

@dataclass(frozen=True)
class KonigCertificate:
    matching: frozenset
    cover: tuple[int, ...]


def bipartite_max_matching(g: Graph, left: Iterable[int], right: Iterable[int]) -> KonigCertificate:
    """Maximum matching using only left-right edges, with a König vertex cover."""
    lmask, rmask = to_mask(left), to_mask(right)
    if lmask & rmask:
        raise GraphError("left and right vertex sets must be disjoint")
    L = list(bits(lmask))
    nbrs = {u: list(bits(g.masks[u] & rmask)) for u in L}
    match_r: dict[int, int] = {}
    match_l: dict[int, int] = {}

    def try_augment(u: int, seen: set) -> bool:
        for w in nbrs[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or try_augment(match_r[w], seen):
                match_r[w] = u
                match_l[u] = w
                return True
        return False

    for u in L:
        try_augment(u, set())

    # König: Z = vertices reachable from exposed left vertices by alternating paths
    zl = {u for u in L if u not in match_l}
    zr: set[int] = set()
    stack = list(zl)
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w not in zr:
                zr.add(w)
                x = match_r.get(w)
                if x is not None and x not in zl:
                    zl.add(x)
                    stack.append(x)
    cover = sorted([u for u in L if u not in zl] + list(zr))
    m = make_matching(match_l.items())
    return KonigCertificate(m, tuple(cover))


def enumerate_saturating_between(g: Graph, side: Iterable[int], other: Iterable[int]) -> Iterator[frozenset]:
    """All matchings between ``side`` and ``other`` that cover every vertex of ``side``."""
    S = list(bits(to_mask(side)))
    omask = to_mask(other)

    def rec(i: int, used: int, chosen: list):
        if i == len(S):
            yield make_matching(chosen)
            return
        s = S[i]
        for w in bits(g.masks[s] & omask & ~used):
            chosen.append((s, w))
            yield from rec(i + 1, used | 1 << w, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


# ---------------------------------------------------------------------------
# saturation

def saturating_matching(g: Graph, required: Iterable[int], within: int | None = None) -> frozenset | None:
    """A matching of ``g[within]`` covering every vertex of ``required``, or None.

    Reduction: add a clique Z joined to every non-required vertex, with
    |Z| = #non-required (+1 for parity); a perfect matching of the
    augmented graph restricts to the wanted matching.
    """
    allowed = g.vertex_mask if within is None else within
    req = to_mask(required)
    if req & ~allowed:
        return None
    verts = list(bits(allowed))
    others = [v for v in verts if not req >> v & 1]
    z = len(others) + (len(verts) + len(others)) % 2
    index = {v: i for i, v in enumerate(verts)}
    base = len(verts)
    edges = [(index[u], index[v]) for u in verts for v in bits(g.masks[u] & allowed) if u < v]
    for i in range(z):
        for j in range(i + 1, z):
            edges.append((base + i, base + j))
        for v in others:
            edges.append((base + i, index[v]))
    aug = Graph(base + z, edges)
    pm = maximum_matching(aug)
    if 2 * len(pm) != aug.n:
        return None
    return make_matching((verts[u], verts[v]) for u, v in pm if v < base)


# ---------------------------------------------------------------------------
# isolating matchings

def isolates(g: Graph, m: Iterable[tuple[int, int]], v: int) -> bool:
    """Whether {v} is a component of g - V(m)."""
    cov = covered(m)
    return not cov >> v & 1 and g.masks[v] & ~cov == 0


def minimal_isolating_matchings(g: Graph, v: int) -> Iterator[frozenset]:
    """Matchings M isolating ``v`` such that no proper subset of M isolates ``v``.

    Minimality holds exactly when every edge of M meets N(v); each such M is
    built once by giving the smallest uncovered neighbor its partner.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    nv = g.masks[v]
    masks = g.masks

    def rec(cov: int, chosen: list):
        todo = nv & ~cov
        if not todo:
            yield make_matching(chosen)
            return
        x = (todo & -todo).bit_length() - 1
        for y in bits(masks[x] & ~cov & ~(1 << v)):
            chosen.append((x, y))
            yield from rec(cov | 1 << x | 1 << y, chosen)
            chosen.pop()

    yield from rec(0, [])
