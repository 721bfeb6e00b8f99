"""n-fold OR powers of a graph, with tuple indexing and block views.

The power is built recursively block-by-block: G^n consists of V copies of
G^{n-1} (the sub-graph blocks), with complete bipartite cross edges between
blocks l and l' whenever (l, l') is an edge of G and no cross edges otherwise.
Equivalently, two distinct tuples are adjacent iff they are adjacent in the
first coordinate where they differ.  This is the construction all closed-form
degree/chromatic/spectral results in this package are stated for; its
adjacency matrix has the block layout

    A^n = A ⊗ J_{V^{n-1}} + I_V ⊗ A^{n-1}.

Tuples are encoded big-endian, so sub-graph block l is the contiguous index
range [l·V^{n-1}, (l+1)·V^{n-1}).
"""

from .errors import UsageError, check_guard
from .graphs import Graph

POWER_GUARD_DEFAULT = 10_000


class PowerGraph(Graph):
    """OR power with recorded provenance (base size and exponent)."""

    __slots__ = ("tuple_base", "tuple_len")

    def __init__(self, vertex_count, rows, tuple_base, tuple_len):
        super().__init__(vertex_count, rows)
        self.tuple_base = tuple_base
        self.tuple_len = tuple_len

    def to_dict(self):
        d = super().to_dict()
        d["tuple_base"] = self.tuple_base
        d["tuple_len"] = self.tuple_len
        return d


def encode_tuple(tup, base):
    """Big-endian tuple -> integer index in [base^len]."""
    idx = 0
    for x in tup:
        if not 0 <= x < base:
            raise UsageError(f"coordinate {x} out of range for base {base}")
        idx = idx * base + x
    return idx


def decode_index(idx, base, length):
    """Integer index -> big-endian tuple."""
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        out[pos] = idx % base
        idx //= base
    return tuple(out)


def or_power(g, n, guard=None):
    """n-fold OR power of g (recursive block construction, see module docs)."""
    if n < 1:
        raise UsageError("power n must be >= 1")
    V = g.vertex_count
    check_guard("power vertex count", V**n, guard, POWER_GUARD_DEFAULT)
    rows = list(g._rows)
    for _ in range(n - 1):
        V1 = len(rows)
        full1 = (1 << V1) - 1
        new_rows = []
        for l in range(V):
            base_bits = g.neighbors_bitset(l)
            cross = 0
            lp = 0
            b = base_bits
            while b:
                if b & 1:
                    cross |= full1 << (lp * V1)
                b >>= 1
                lp += 1
            for t in range(V1):
                new_rows.append(cross | (rows[t] << (l * V1)))
        rows = new_rows
    return PowerGraph(V**n, rows, V, n)


def subgraph_view(gn, l):
    """Induced graph on sub-graph block l of an OR power (identity on tails)."""
    if not isinstance(gn, PowerGraph):
        raise UsageError("subgraph_view requires a PowerGraph with provenance")
    V, n = gn.tuple_base, gn.tuple_len
    if not 0 <= l < V:
        raise UsageError(f"block index {l} out of range")
    size = V ** (n - 1)
    lo = l * size
    mask = (1 << size) - 1
    rows = [(gn.neighbors_bitset(lo + t) >> lo) & mask for t in range(size)]
    if n == 2:
        return Graph(size, rows)
    return PowerGraph(size, rows, V, n - 1)


def cross_edge_count(gn, l1, l2):
    """Number of edges between blocks l1 and l2 of an OR power."""
    if not isinstance(gn, PowerGraph):
        raise UsageError("cross_edge_count requires a PowerGraph")
    V, n = gn.tuple_base, gn.tuple_len
    size = V ** (n - 1)
    lo1, lo2 = l1 * size, l2 * size
    mask = (1 << size) - 1
    return sum(
        ((gn.neighbors_bitset(lo1 + t) >> lo2) & mask).bit_count() for t in range(size)
    )


def degree_formula(family, n, V=None, d=None, base_graph=None):
    """Closed-form OR-power degrees.

    cycle:     2(V^n - 1)/(V - 1), every vertex.
    d-regular: d(V^n - 1)/(V - 1), every vertex.
    general:   per base vertex x_k, deg(x_k)·(1 + V + ... + V^{n-1}) — the
               degree of the diagonal vertex (x_k, ..., x_k); returns a list.
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    if family == "cycle":
        if V is None or V < 3:
            raise UsageError("cycle needs V >= 3")
        return 2 * (V**n - 1) // (V - 1)
    if family == "d-regular":
        if V is None or d is None or not 0 <= d < V:
            raise UsageError("d-regular needs V and 0 <= d < V")
        return d * (V**n - 1) // (V - 1)
    if family == "general":
        if base_graph is None:
            raise UsageError("general needs base_graph with its degrees")
        Vb = base_graph.vertex_count
        mult = (Vb**n - 1) // (Vb - 1) if Vb > 1 else n
        return [base_graph.degree(v) * mult for v in range(Vb)]
    raise UsageError(f"unknown family {family!r}")


def tuple_degree(base_graph, tup):
    """Exact degree of an arbitrary tuple vertex in the OR power.

    Under the recursive block construction, deg((x_1,...,x_n)) =
    Σ_j deg(x_j)·V^{n-j}... positionally: coordinate j (big-endian, 0-based)
    contributes deg(x_j)·V^{n-1-j}, except the last which contributes deg(x_n).
    """
    V = base_graph.vertex_count
    n = len(tup)
    return sum(base_graph.degree(x) * V ** (n - 1 - j) for j, x in enumerate(tup))
