"""Undirected simple graphs with bitset adjacency rows.

Vertices are 0-indexed integers 0..V-1.  (Worked examples elsewhere use
1-indexed clockwise numbering; subtract one.)  Adjacency rows are Python ints
used as bitsets, so neighborhood intersections are single AND operations.
"""

import json

import numpy as np

from .errors import UsageError, check_guard

MIS_GUARD_DEFAULT = 24


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("vertex_count", "_rows", "_hash")

    def __init__(self, vertex_count, rows):
        self.vertex_count = vertex_count
        self._rows = tuple(rows)
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, vertex_count, edges):
        if vertex_count < 1:
            raise UsageError("vertex_count must be positive")
        rows = [0] * vertex_count
        seen = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise UsageError(f"edge ({u},{v}) out of range for V={vertex_count}")
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise UsageError(f"duplicate edge {key}")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(vertex_count, rows)

    # -- queries ----------------------------------------------------------

    def has_edge(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def neighbors_bitset(self, v):
        return self._rows[v]

    def neighbors(self, v):
        return bits_to_list(self._rows[v])

    def degree(self, v):
        if not 0 <= v < self.vertex_count:
            raise UsageError(f"vertex {v} out of range")
        return self._rows[v].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self._rows]

    @property
    def edge_count(self):
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self):
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.vertex_count):
            rest = self._rows[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def adjacency_matrix(self):
        V = self.vertex_count
        m = np.zeros((V, V), dtype=np.int64)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self._rows == other._rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertex_count, self._rows))
        return self._hash

    def __repr__(self):
        return f"Graph(V={self.vertex_count}, E={self.edge_count})"

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges()]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        try:
            return cls.from_edges(d["vertices"], [tuple(e) for e in d["edges"]])
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed graph JSON: {exc}") from exc

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def bits_to_list(bits):
    out = []
    v = 0
    while bits:
        if bits & 1:
            out.append(v)
        bits >>= 1
        v += 1
    return out


def make_graph(kind, size=None, edges=None):
    """Standard constructors: cycle, complete, path, edgeless, or custom."""
    if kind == "cycle":
        if size is None or size < 3:
            raise UsageError("cycle needs size >= 3")
        return Graph.from_edges(size, [(i, (i + 1) % size) for i in range(size)])
    if kind == "complete":
        if size is None or size < 1:
            raise UsageError("complete needs size >= 1")
        return Graph.from_edges(size, [(i, j) for i in range(size) for j in range(i + 1, size)])
    if kind == "path":
        if size is None or size < 1:
            raise UsageError("path needs size >= 1")
        return Graph.from_edges(size, [(i, i + 1) for i in range(size - 1)])
    if kind == "edgeless":
        if size is None or size < 1:
            raise UsageError("edgeless needs size >= 1")
        return Graph.from_edges(size, [])
    if kind == "custom":
        if size is None or edges is None:
            raise UsageError("custom needs size and edge list")
        return Graph.from_edges(size, edges)
    raise UsageError(f"unknown graph kind {kind!r}")


def cycle_graph(n):
    return make_graph("cycle", n)


def complete_graph(n):
    return make_graph("complete", n)


def path_graph(n):
    return make_graph("path", n)


def prism_graph():
    """Triangular prism: the concrete 3-regular graph on 6 vertices."""
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


def maximal_independent_sets(g, guard=None):
    """All maximal independent sets, via Bron-Kerbosch cliques of the complement.

    Returns a list of sorted vertex tuples.  Complete and duplicate-free.
    """
    V = g.vertex_count
    check_guard("vertex count", V, guard, MIS_GUARD_DEFAULT)
    full = (1 << V) - 1
    # complement adjacency rows (no self-bit)
    comp = [full & ~g.neighbors_bitset(v) & ~(1 << v) for v in range(V)]
    out = []

    def expand(r, p, x):
        if p == 0 and x == 0:
            out.append(tuple(bits_to_list(r)))
            return
        # pivot: vertex of p|x maximizing |p & comp[u]|
        pivot = max(bits_to_list(p | x), key=lambda u: (p & comp[u]).bit_count())
        for v in bits_to_list(p & ~comp[pivot]):
            bit = 1 << v
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    out.sort()
    return out


def max_independent_set_size(g, guard=None):
    """|MIS_G|: cardinality of the largest (maximal) independent set."""
    return max(len(s) for s in maximal_independent_sets(g, guard=guard))


def is_independent_set(g, vertices):
    vs = list(vertices)
    return all(not g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))
