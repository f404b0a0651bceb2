"""Immutable simple graphs on vertices ``0..n-1`` plus graph6 / edge-list I/O."""

from __future__ import annotations

import gzip
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph input (bad vertex id, loop, malformed encoding)."""


class Graph:
    """Simple undirected graph with dense integer vertex ids.

    Adjacency is kept both as sorted neighbor tuples and as integer bitmasks;
    the bitmasks drive the combinatorial searches.
    """

    __slots__ = ("n", "adj", "masks", "edge_count", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks = tuple(masks)
        self.adj = tuple(tuple(bits(m)) for m in masks)
        self.edge_count = sum(m.bit_count() for m in masks) // 2
        self._edges = None
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in bits(masks[u]) if u < v))

    def __setattr__(self, name, value):
        if name in ("_edges", "_hash") or not hasattr(self, "_hash"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("Graph is immutable")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))

    def remove_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        gone = {tuple(sorted(e)) for e in drop}
        return Graph(self.n, (e for e in self.edges if e not in gone))


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    out = sorted(set(vertices))
    for v in out:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep`` and the relabeling map old id -> new id."""
    kept = _check_vertices(g, keep)
    relabel = {v: i for i, v in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(kept), edges), relabel


def remove_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    dropped = set(_check_vertices(g, drop))
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by smallest member."""
    rest = g.vertex_mask if within is None else within
    masks = g.masks
    out = []
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    """Connectivity of ``g[within]``; the empty vertex set counts as connected."""
    return len(component_masks(g, within)) <= 1


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.masks[v] | (1 << v)) & mask == mask for v in bits(mask))


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.masks[v] & mask) for v in bits(mask))


def bipartition(g: Graph, mask: int | None = None) -> tuple[int, int] | None:
    """Two-coloring of ``g[mask]`` as (side0, side1) masks, or None if not bipartite.

    Each component's smallest vertex is put in side0.
    """
    within = g.vertex_mask if mask is None else mask
    side = [0, 0]
    for comp in component_masks(g, within):
        color = {}
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in bits(g.masks[u] & comp):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
        for v, c in color.items():
            side[c] |= 1 << v
    return side[0], side[1]


# ---------------------------------------------------------------------------
# graph6

def _n_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError(f"graph6 supports n <= 258047, got {n}")


def emit_graph6(g: Graph) -> bytes:
    out = bytearray(_n_bytes(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            acc = acc << 1 | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record. Errors name the offending byte offset."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 record (offset 0)")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphError(f"byte {b!r} outside graph6 range at offset {off}")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise GraphError("truncated size field at offset 1")
        if data[1] == 126:
            raise GraphError("8-byte size field unsupported at offset 1")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise GraphError("non-canonical long size field at offset 0")
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphError(f"truncated adjacency data at offset {len(data)}: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise GraphError(f"trailing garbage at offset {pos + need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need:
        pad = 6 * need - total
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphError(f"nonzero padding bits at offset {pos + need - 1}")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge list text

def parse_edgelist(text: str) -> Graph:
    """First data line ``n m``, then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty edge list (line 1)")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
    if len(rows) - 1 != m:
        raise GraphError(f"line {lineno}: header declares {m} edges, found {len(rows) - 1}")
    edges = []
    seen = set()
    for lineno, toks in rows[1:]:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}") from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"{exc} (edge list)") from None


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph6_file(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` from a graph6 file; ``.gz`` is decompressed."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, parse_graph6(line)
            except GraphError as exc:
                raise GraphError(f"{path}:{lineno}: {exc}") from None


# ---------------------------------------------------------------------------
# named graphs used throughout tests and fixtures

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)
