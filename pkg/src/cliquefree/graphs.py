"""Bitmask graphs, deterministic sampling, and text formats.

Graphs are immutable adjacency-row structures: row u is a Python int whose
bit v is set iff uv is an edge.  Vertex sets are plain int masks, so set
algebra is bitwise arithmetic and counting is int.bit_count().  The size
cap of 512 vertices keeps every mask a handful of machine words.

Sampling is counter-mode: edge {u, v} of the graph with a given seed is
decided by the low bit of the SplitMix64 stream at position
pair_index(u, v).  Because the pair index orders pairs by (max, min),
adding vertex v consumes the contiguous stream block [C(v,2), C(v+1,2)),
and growing a graph one vertex at a time (vertex exposure) reproduces the
one-shot sample exactly.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import Graph6Error
from .rng import pair_index, stream_block

MAX_VERTICES = 512


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int], validate: bool = True):
        rows = tuple(rows)
        if validate:
            if not 0 <= n <= MAX_VERTICES:
                raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}]")
            if len(rows) != n:
                raise ValueError("row count does not match vertex count")
            full = (1 << n) - 1
            for u, row in enumerate(rows):
                if row & ~full:
                    raise ValueError(f"row {u} references vertices >= n")
                if (row >> u) & 1:
                    raise ValueError(f"self-loop at vertex {u}")
            for u, row in enumerate(rows):
                m = row
                while m:
                    b = m & -m
                    v = b.bit_length() - 1
                    m ^= b
                    if not (rows[v] >> u) & 1:
                        raise ValueError(f"asymmetric adjacency at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}]")
        return Graph(n, [0] * n, validate=False)

    @staticmethod
    def complete(n: int) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}]")
        full = (1 << n) - 1
        return Graph(n, [full ^ (1 << u) for u in range(n)], validate=False)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, rows)

    # -- queries ----------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            m = self.rows[v] & ((1 << v) - 1)  # u < v only
            while m:
                b = m & -m
                m ^= b
                yield (b.bit_length() - 1, v)

    def edges_within(self, mask: int) -> int:
        """Number of edges with both endpoints in the vertex mask."""
        total = 0
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            total += (self.rows[v] & mask & (b - 1)).bit_count()
        return total

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(
            self.n,
            [(full ^ r) & ~(1 << u) for u, r in enumerate(self.rows)],
            validate=False,
        )

    def subgraph(self, mask: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the mask, relabeled; returns (graph, old labels)."""
        verts = mask_to_vertices(mask)
        pos = {v: p for p, v in enumerate(verts)}
        rows = [0] * len(verts)
        for p, v in enumerate(verts):
            m = self.rows[v] & mask
            while m:
                b = m & -m
                m ^= b
                rows[p] |= 1 << pos[b.bit_length() - 1]
        return Graph(len(verts), rows, validate=False), tuple(verts)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def vertices_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def covers_edge(g: Graph, mask: int, u: int, v: int) -> bool:
    """True if no vertex of the mask is adjacent to both u and v.

    A vertex set with this property cannot extend the edge uv to a
    triangle, which is what lets an independent set sit next to a single
    defect edge without creating larger cliques.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if mask & ((1 << u) | (1 << v)):
        raise ValueError("covering set must avoid the edge endpoints")
    return mask & g.rows[u] & g.rows[v] == 0


def _floor_root(x: int, d: int) -> int:
    """floor(x^(1/d)) in exact integer arithmetic.

    Float powers truncate wrong at perfect powers, e.g. int(27 ** (2/3))
    is 8, so fractional-exponent floors go through here instead.
    """
    if x < 0 or d < 1:
        raise ValueError("nonnegative base and positive degree required")
    r = int(round(x ** (1.0 / d))) if x else 0
    while r ** d > x:
        r -= 1
    while (r + 1) ** d <= x:
        r += 1
    return r


def is_light(g: Graph, mask: int) -> bool:
    """Edge count of the induced subgraph at most floor(|mask|^(3/4))."""
    k = mask.bit_count()
    return g.edges_within(mask) <= _floor_root(k ** 3, 4)


def weakly_covers(g: Graph, mask: int, u: int, v: int) -> bool:
    """At most floor(|mask|^(2/3)) vertices of mask adjacent to both u, v."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    k = mask.bit_count()
    return (mask & g.rows[u] & g.rows[v]).bit_count() <= _floor_root(k ** 2, 3)


# -- deterministic sampling ------------------------------------------------


def edge_coins(n: int, seed: int) -> np.ndarray:
    """The C(n,2) edge indicator bits for (n, seed), in pair_index order."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}]")
    total = n * (n - 1) // 2
    return (stream_block(seed, 0, total) & np.uint64(1)).astype(np.uint8)


def sample_graph(n: int, seed: int) -> Graph:
    """Uniform random graph (edge probability 1/2), fully seed-determined."""
    bits = edge_coins(n, seed)
    if n <= 1:
        return Graph(n, [0] * n, validate=False)
    v_of_t = np.repeat(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64))
    starts = np.arange(n, dtype=np.int64)
    starts = (starts * (starts - 1)) // 2
    u_of_t = np.arange(len(bits), dtype=np.int64) - starts[v_of_t]
    adj = np.zeros((n, n), dtype=bool)
    idx = np.nonzero(bits)[0]
    adj[u_of_t[idx], v_of_t[idx]] = True
    adj |= adj.T
    rows = [
        int.from_bytes(np.packbits(adj[v], bitorder="little").tobytes(), "little")
        for v in range(n)
    ]
    return Graph(n, rows, validate=False)


class ExposureStream:
    """Vertex-by-vertex growth of the seeded random graph.

    After m calls to step() the current graph equals sample_graph(m, seed)
    bit for bit: step v consumes stream positions pair_index(0, v) ..
    pair_index(v-1, v), the same coins the one-shot sampler uses.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._rows: list[int] = []

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def graph(self) -> Graph:
        return Graph(self.n, self._rows, validate=False)

    def step(self) -> Graph:
        v = len(self._rows)
        if v >= MAX_VERTICES:
            raise ValueError("exposure stream exceeded the vertex cap")
        if v == 0:
            self._rows.append(0)
            return self.graph
        bits = stream_block(self.seed, pair_index(0, v), v) & np.uint64(1)
        new_row = 0
        for u in np.nonzero(bits)[0]:
            u = int(u)
            new_row |= 1 << u
            self._rows[u] |= 1 << v
        self._rows.append(new_row)
        return self.graph


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> str:
    """Canonical graph6 text for the graph (no trailing newline)."""
    n = g.n
    out = bytearray(_g6_size_bytes(n))
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | ((g.rows[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line; accepts an optional >>graph6<< header."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for ch in data:
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch} outside the graph6 alphabet")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 sizes above 258047 are not supported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the {MAX_VERTICES} cap")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"graph6 body length {len(body)} does not match n={n} (need {need})"
        )
    rows = [0] * n
    t = 0
    for ch in body:
        bits = ch - 63
        for shift in range(5, -1, -1):
            if t >= n * (n - 1) // 2:
                if (bits >> shift) & 1:
                    raise Graph6Error("nonzero padding bits in graph6 body")
                continue
            if (bits >> shift) & 1:
                # pair t in (max, min) order
                v = 1
                while v * (v + 1) // 2 <= t:
                    v += 1
                u = t - v * (v - 1) // 2
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            t += 1
    return Graph(n, rows, validate=False)


# -- edge-list text ----------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Plain text: first line the vertex count, then one 'u v' line per edge."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [
        ln for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError as e:
        raise ValueError(f"edge-list header must be a vertex count: {lines[0]!r}") from e
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"edge line needs two endpoints: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def read_graph(text: str) -> Graph:
    """Auto-detect graph6 vs edge list (edge lists start with a digit)."""
    s = text.lstrip()
    if not s:
        raise ValueError("empty graph input")
    if s[0].isdigit():
        return parse_edge_list(text)
    return graph6_decode(s.splitlines()[0])
