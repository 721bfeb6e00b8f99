"""Valid colorings: verification, greedy/exact baselines, closed-form schemes
for cycle and regular OR powers, and fractional (b-fold) colorings."""

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import GuardExceeded, UsageError, check_guard
from .graphs import Graph, make_graph
from .orpower import or_power

CHI_GUARD_DEFAULT = 64
CHI_TIMEOUT_DEFAULT = 60.0


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color assignment with a contiguous 0-based palette."""

    assignment: tuple
    palette_size: int

    @classmethod
    def from_list(cls, colors):
        colors = list(colors)
        # normalize palette ids to contiguous 0..a-1, by first appearance
        remap = {}
        out = []
        for c in colors:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return cls(tuple(out), len(remap))

    def to_dict(self):
        return {"colors": list(self.assignment), "palette": self.palette_size}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        try:
            c = cls.from_list(d["colors"])
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed coloring JSON: {exc}") from exc
        if "palette" in d and d["palette"] != c.palette_size:
            raise UsageError(
                f"palette mismatch: declared {d['palette']}, found {c.palette_size}"
            )
        return c

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def is_valid_coloring(g, c):
    """True iff no edge of g is monochromatic under c."""
    if len(c.assignment) != g.vertex_count:
        raise UsageError(
            f"coloring length {len(c.assignment)} != vertex count {g.vertex_count}"
        )
    return all(c.assignment[u] != c.assignment[v] for u, v in g.edges())


def greedy_coloring(g, order=None):
    """First-fit greedy coloring along the given vertex order (default natural)."""
    V = g.vertex_count
    if order is None:
        order = range(V)
    order = list(order)
    if sorted(order) != list(range(V)):
        raise UsageError("order must be a permutation of all vertices")
    colors = [-1] * V
    for v in order:
        used = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring.from_list(colors)


def _greedy_clique(g, order):
    clique = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def exact_chromatic_number(g, guard=None, timeout=CHI_TIMEOUT_DEFAULT):
    """Minimal palette size and a witness coloring, by branch and bound.

    Vertices are branched in degree-descending order (ties: lowest id); the
    lower bound is seeded with a greedy clique, the upper with first-fit
    greedy.  Deterministic.  Raises GuardExceeded on size or timeout, which is
    distinct from any coloring outcome.
    """
    V = g.vertex_count
    check_guard("vertex count", V, guard, CHI_GUARD_DEFAULT)
    order = sorted(range(V), key=lambda v: (-g.degree(v), v))
    clique = _greedy_clique(g, order)
    lb = max(1, len(clique))
    greedy = greedy_coloring(g, order)
    best_k = greedy.palette_size
    best = list(greedy.assignment)
    if best_k == lb:
        return best_k, Coloring.from_list(best)

    colors = [-1] * V
    deadline = time.monotonic() + timeout if timeout else None

    def bb(i, k):
        nonlocal best_k, best
        if k >= best_k:
            return
        if i == V:
            best_k, best = k, colors.copy()
            return
        if deadline is not None and time.monotonic() > deadline:
            raise GuardExceeded("exact coloring time (s)", timeout, timeout)
        v = order[i]
        used = 0
        for u in g.neighbors(v):
            if colors[u] >= 0:
                used |= 1 << colors[u]
        for c in range(min(k + 1, best_k - 1)):
            if used >> c & 1:
                continue
            colors[v] = c
            bb(i + 1, max(k, c + 1))
            colors[v] = -1
            if best_k == lb:
                return

    bb(0, 0)
    return best_k, Coloring.from_list(best)


# -- closed-form schemes for cycle powers ----------------------------------


def even_cycle_power_coloring(k, n, guard=None):
    """Parity-vector coloring of C_{2k}^n with exactly 2^n colors.

    Returns (power graph, coloring); the coloring is validated.
    """
    if k < 2 or n < 1:
        raise UsageError("need k >= 2 (C_{2k} with at least 4 vertices) and n >= 1")
    V = 2 * k
    gn = or_power(make_graph("cycle", V), n, guard=guard)
    colors = []
    for idx in range(V**n):
        parity = 0
        rest = idx
        for _ in range(n):
            parity = (parity << 1) | (rest % V) & 1
            rest //= V
        colors.append(parity)
    c = Coloring.from_list(colors)
    assert c.palette_size == 2**n
    assert is_valid_coloring(gn, c)
    return gn, c


def odd_cycle_chi_sequence(n):
    """χ(C_{2k+1}^m) for m = 1..n by the recursion χ' = 2χ + ⌈χ/2⌉, χ(C)=3."""
    seq = [3]
    while len(seq) < n:
        chi = seq[-1]
        seq.append(2 * chi + ceil(chi / 2))
    return seq


def _window_starts(vertices, size, palette):
    """Consecutive color windows of `size` from `palette` colors around a cycle.

    Start of window l is l*size mod palette; returns None if adjacent windows
    (including the wraparound pair) are not disjoint.
    """
    starts = [(l * size) % palette for l in range(vertices)]

    def disjoint(s1, s2):
        w1 = {(s1 + t) % palette for t in range(size)}
        w2 = {(s2 + t) % palette for t in range(size)}
        return not (w1 & w2)

    for l in range(vertices):
        if not disjoint(starts[l], starts[(l + 1) % vertices]):
            return None
    return starts


def odd_cycle_power_coloring(i, n, guard=None, materialize=True):
    """Recursive block coloring of C_i^n (i = 2k+1, k >= 2).

    Returns (chi, coloring, graph): chi follows the 2χ+⌈χ/2⌉ recursion;
    the constructed coloring gives each sub-graph block a consecutive window
    of colors, shifted block to block, and is validated on the materialized
    power whenever that is feasible (coloring/graph are None otherwise).
    The coloring's palette never exceeds chi.
    """
    if i < 5 or i % 2 == 0:
        raise UsageError("odd cycle scheme needs odd i >= 5 (C3 is complete: chi=3^n)")
    if n < 1:
        raise UsageError("n must be >= 1")
    k = (i - 1) // 2
    chis = odd_cycle_chi_sequence(n)
    chi = chis[-1]
    if not materialize:
        return chi, None, None
    try:
        gn = or_power(make_graph("cycle", i), n, guard=guard)
    except GuardExceeded:
        return chi, None, None

    colors = [v % 2 for v in range(i - 1)] + [2]
    palette = 3
    for m in range(2, n + 1):
        size = palette
        # try the paper's palette first, then the tight 2s+ceil(s/k) one,
        # then grow until the window scheme closes around the cycle
        target = chis[m - 1]
        starts = None
        for pal in sorted({target, 2 * size + ceil(size / k)} | set(range(2 * size + 1, target + 1))):
            starts = _window_starts(i, size, pal)
            if starts is not None:
                palette = pal
                break
        assert starts is not None, "window scheme failed to close"
        assert palette <= target
        prev = colors
        block = i ** (m - 1)
        colors = [
            (starts[idx // block] + prev[idx % block]) % palette
            for idx in range(i**m)
        ]
    c = Coloring.from_list(colors)
    assert c.palette_size <= chi
    assert is_valid_coloring(gn, c)
    return chi, c, gn


def greedy_gain(i, n):
    """η_n = 3^n / χ(C_i^n): palette gain of the recursive scheme over the
    naive per-coordinate 3-coloring.  Exact rational."""
    if i < 5 or i % 2 == 0:
        raise UsageError("greedy gain defined for odd cycles i >= 5")
    chi = odd_cycle_chi_sequence(n)[-1]
    return Fraction(3**n, chi)


def regular_power_chromatic(d, V, n, graph=None, cross_check=False, guard=None):
    """χ(G_{d,V}^n) = d^n for d-regular graphs with an even number of vertices.

    With a concrete graph and cross_check=True the exact solver must agree.
    """
    if V % 2 == 1:
        raise UsageError("out of proposition scope: V must be even")
    if not 1 <= d < V:
        raise UsageError("need 1 <= d < V")
    if n < 1:
        raise UsageError("n must be >= 1")
    result = d**n
    if graph is not None and cross_check:
        if graph.vertex_count != V or any(graph.degree(v) != d for v in range(V)):
            raise UsageError("supplied graph is not d-regular on V vertices")
        gn = or_power(graph, n, guard=guard)
        chi, _ = exact_chromatic_number(gn)
        if chi != result:
            raise AssertionError(f"exact chi {chi} != closed form {result}")
    return result


def product_coloring(g, n, base_coloring=None, guard=None):
    """Coordinate-wise product coloring of an OR power.

    Color of a tuple is the base-coloring vector of its coordinates; always
    valid, with palette ≤ (base palette)^n.
    """
    if base_coloring is None:
        _, base_coloring = exact_chromatic_number(g)
    V = g.vertex_count
    gn = or_power(g, n, guard=guard)
    p = base_coloring.palette_size
    colors = []
    for idx in range(V**n):
        code = 0
        rest = idx
        for _ in range(n):
            code = code * p + base_coloring.assignment[rest % V]
            rest //= V
        colors.append(code)
    c = Coloring.from_list(colors)
    assert is_valid_coloring(gn, c)
    return gn, c


# -- fractional colorings ----------------------------------------------------


@dataclass(frozen=True)
class FractionalColoring:
    a: int  # total colors
    b: int  # fold size
    sets: tuple  # per-vertex frozensets of color ids


def is_valid_b_fold(g, fc):
    if len(fc.sets) != g.vertex_count:
        raise UsageError("set count != vertex count")
    if any(len(s) != fc.b for s in fc.sets):
        return False
    if any(max(s) >= fc.a for s in fc.sets if s):
        return False
    return all(not (fc.sets[u] & fc.sets[v]) for u, v in g.edges())


def b_fold_coloring_search(g, a, b, guard=None):
    """Exhaustive search for a valid a:b coloring; None if none exists.

    Vertex 0's set is fixed to {0..b-1} (colors are interchangeable).
    """
    from itertools import combinations

    V = g.vertex_count
    check_guard("b-fold search space", V * a * b, guard, 2000)
    choices = [frozenset(c) for c in combinations(range(a), b)]
    sets = [None] * V

    def bt(v):
        if v == V:
            return True
        for s in [frozenset(range(b))] if v == 0 else choices:
            if all(
                sets[u] is None or not (sets[u] & s) for u in g.neighbors(v)
            ):
                sets[v] = s
                if bt(v + 1):
                    return True
                sets[v] = None
        return False

    if bt(0):
        return FractionalColoring(a, b, tuple(sets))
    return None


def fractional_chromatic_cycle(k, b):
    """b-fold colorings of the odd cycle C_{2k+1}.

    Returns a dict with:
      chi_b_lower: 2b+1, the counting lower bound (any b-fold coloring of an
                   odd cycle needs more than 2b colors);
      chi_b:       ⌈(2k+1)b/k⌉, the least a for which an a:b coloring exists
                   (each color class is an independent set of size ≤ k);
      coloring:    a constructive, validated chi_b : b window coloring;
      chi_f:       (2k+1)/k as an exact rational.
    """
    if k < 2 or b < 1:
        raise UsageError("need k >= 2 and b >= 1")
    V = 2 * k + 1
    a = ceil(Fraction(V * b, k))
    # consecutive windows of size b at stride b mod a close around the cycle
    sets = tuple(
        frozenset((v * b + t) % a for t in range(b)) for v in range(V)
    )
    fc = FractionalColoring(a, b, sets)
    g = make_graph("cycle", V)
    assert is_valid_b_fold(g, fc)
    return {
        "chi_b_lower": 2 * b + 1,
        "chi_b": a,
        "coloring": fc,
        "chi_f": Fraction(V, k),
    }


def fractional_chromatic_power(k, n):
    """χ_f(C_{2k+1}^n) = ((2k+1)/k)^n, exact rational."""
    if k < 2 or n < 1:
        raise UsageError("need k >= 2 and n >= 1")
    return Fraction(2 * k + 1, k) ** n
