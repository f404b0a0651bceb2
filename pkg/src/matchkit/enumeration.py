"""Exhaustive generation of small graphs up to isomorphism.

Canonical forms come from color refinement plus individualization: every
leaf of the search tree is a vertex ordering, and the canonical form is the
lexicographically smallest adjacency code over all leaves. No automorphism
pruning is attempted; at n <= 8 the trees stay small.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, bits, is_connected


def _refine(masks: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(masks)
    count = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in bits(masks[v]))))
            for v in range(n)
        ]
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [ranks[k] for k in keys]
        if len(ranks) == count:
            return colors
        count = len(ranks)


def _code(masks: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for j, v in enumerate(order):
        row = 0
        for w in bits(masks[v]):
            i = pos[w]
            if i < j:
                row |= 1 << i
        out.append(row)
    return tuple(out)


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """An isomorphism-invariant key: equal keys iff the graphs are isomorphic."""
    masks = g.masks
    n = g.n
    if n == 0:
        return (0, ())
    best: list = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(masks, colors)
        if len(set(colors)) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            code = _code(masks, order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        # first smallest non-singleton cell
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min((c for c, vs in cells.items() if len(vs) > 1),
                     key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            search([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    search([g.degree(v) for v in range(n)])
    return (n, best[0])


def graph_from_canonical(key: tuple[int, tuple[int, ...]]) -> Graph:
    n, rows = key
    return Graph(n, ((i, j) for j in range(n) for i in bits(rows[j])))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Canonical keys of every graph on n vertices (connected or not), sorted."""
    if n == 0:
        return ((0, ()),)
    seen = set()
    for key in _all_graphs(n - 1):
        base = graph_from_canonical(key)
        edges = base.edges
        for nbhd in range(1 << (n - 1)):
            h = Graph(n, edges + tuple((v, n - 1) for v in bits(nbhd)))
            seen.add(canonical_form(h))
    return tuple(sorted(seen))


def nonisomorphic_graphs(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """All graphs on n vertices up to isomorphism, in canonical-key order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for key in _all_graphs(n):
        g = graph_from_canonical(key)
        if not connected_only or (n > 0 and is_connected(g)):
            yield g


def connected_graphs_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from nonisomorphic_graphs(n)
