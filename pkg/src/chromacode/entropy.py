"""Coloring PMFs, chromatic entropy, α-profile upper bounds, the fractional
lower bound, and Huffman coding of color distributions.

PMFs stay exact rationals; entropies are floats (comparison tolerance 1e-9).
"""

import heapq
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import log2

from .coloring import is_valid_coloring
from .errors import UsageError, check_guard
from .graphs import max_independent_set_size

BRUTE_ENTROPY_GUARD_DEFAULT = 12


def entropy_bits(probs):
    """Shannon entropy in bits of an iterable of probabilities."""
    return float(-sum(float(p) * log2(float(p)) for p in probs if p > 0))


def coloring_pmf(coloring, vertex_pmf=None):
    """Pushforward of the vertex distribution under the color map (exact)."""
    n = len(coloring.assignment)
    if vertex_pmf is None:
        vertex_pmf = [Fraction(1, n)] * n
    if len(vertex_pmf) != n:
        raise UsageError("vertex PMF length != vertex count")
    if sum(vertex_pmf) != 1:
        raise UsageError("vertex PMF must sum to exactly 1")
    pmf = {}
    for v, c in enumerate(coloring.assignment):
        pmf[c] = pmf.get(c, Fraction(0)) + Fraction(vertex_pmf[v])
    return pmf


def coloring_entropy(g, coloring, vertex_pmf=None):
    """(entropy in bits, exact color PMF) of a valid coloring of g."""
    if not is_valid_coloring(g, coloring):
        raise UsageError("coloring is not valid on g")
    pmf = coloring_pmf(coloring, vertex_pmf)
    return entropy_bits(pmf.values()), pmf


def chromatic_entropy_bruteforce(g, vertex_pmf=None, guard=None):
    """Global minimum of coloring entropy over all valid colorings.

    Enumerates partitions into independent sets (colorings up to relabeling)
    by assigning each vertex to an existing class or a fresh one.
    """
    V = g.vertex_count
    check_guard("vertex count", V, guard, BRUTE_ENTROPY_GUARD_DEFAULT)
    if vertex_pmf is None:
        vertex_pmf = [Fraction(1, V)] * V
    vertex_pmf = [Fraction(p) for p in vertex_pmf]
    if sum(vertex_pmf) != 1:
        raise UsageError("vertex PMF must sum to exactly 1")
    best = [float("inf")]
    class_bits = []  # bitset of vertices per class
    class_mass = []

    def rec(v):
        if v == V:
            h = entropy_bits(class_mass)
            if h < best[0]:
                best[0] = h
            return
        nb = g.neighbors_bitset(v)
        for i in range(len(class_bits)):
            if class_bits[i] & nb:
                continue
            class_bits[i] |= 1 << v
            class_mass[i] += vertex_pmf[v]
            rec(v + 1)
            class_mass[i] -= vertex_pmf[v]
            class_bits[i] &= ~(1 << v)
        class_bits.append(1 << v)
        class_mass.append(vertex_pmf[v])
        rec(v + 1)
        class_bits.pop()
        class_mass.pop()

    rec(0)
    return best[0]


# -- alpha-profile upper bounds ----------------------------------------------


@dataclass(frozen=True)
class AlphaProfile:
    """alphas[t] = number of color classes realized as independent sets of
    size mis_sizes[t] = |MIS_{G^t}| in a coloring of G^n."""

    alphas: tuple  # alpha_0 .. alpha_n
    mis_sizes: tuple  # |MIS_{G^t}| for t = 0..n
    total: int  # V^n

    def pmf(self):
        out = {}
        cid = 0
        for t in range(len(self.alphas) - 1, -1, -1):
            p = Fraction(self.mis_sizes[t], self.total)
            for _ in range(self.alphas[t]):
                out[cid] = p
                cid += 1
        assert sum(out.values()) == 1
        return out

    def entropy(self):
        return entropy_bits(self.pmf().values())


def alpha_n_window(V, m, n):
    """Feasible integer window for α_n: ⌊V^n·m^n(m²−1)/(m^{2(n+1)}−1)⌋+1
    (strict rational lower bound) up to ⌊(V^n−1)/m^n⌋ (α_0 = 1, rest ≥ 0)."""
    lo_rat = Fraction(V**n * m**n * (m**2 - 1), m ** (2 * (n + 1)) - 1)
    hi = (V**n - 1) // m**n
    # the strict rational bound overshoots at n = 1, where alpha_0 = alpha_n/m
    # holds with equality; clamp to keep the window nonempty
    lo = min(int(lo_rat) + 1, hi)
    return lo, hi


def _profile_max_alpha_n(V, m, n):
    """Profile maximizing α_n under α_0 = 1, Σ α_t·m^t = V^n, and the
    nondecreasing ordering α_{t+1} ≥ α_t ≥ 1."""
    total = V**n
    _, hi = alpha_n_window(V, m, n)

    def complete(t, remaining, hi_bound):
        # choose alpha_t .. alpha_1 (descending t), each >= 1 and <= alpha_{t+1}
        if t == 0:
            return [] if remaining == 1 else None
        for a in range(min(hi_bound, remaining // m**t), 0, -1):
            rest = remaining - a * m**t
            if rest < 1:
                continue
            tail = complete(t - 1, rest, a)
            if tail is not None:
                return [a] + tail
        return None

    for an in range(hi, 0, -1):
        tail = complete(n - 1, total - an * m**n, an)
        if tail is not None:
            alphas = [1] + tail[::-1] + [an]
            return tuple(alphas)
    raise AssertionError("no feasible monotone alpha profile")


def _profile_min_alpha_n(V, m, n):
    """Profile minimizing α_n under the full chain constraints α_0 = 1,
    α_t ≥ m·α_{t-1}, Σ α_t·m^t = V^n."""
    total = V**n
    lo, hi = alpha_n_window(V, m, n)

    def complete(t, remaining, cap):
        # alpha_t for t descending to 1; alpha_t >= m*alpha_{t-1} means
        # alpha_{t-1} <= alpha_t // m, and the chain forces alpha_t >= m^t
        if t == 0:
            return [] if remaining == 1 else None
        for a in range(min(cap, remaining // m**t), m**t - 1, -1):
            rest = remaining - a * m**t
            if rest < 1:
                continue
            tail = complete(t - 1, rest, a // m)
            if tail is not None:
                return [a] + tail
        return None

    for an in range(max(lo, m**n), hi + 1):
        tail = complete(n - 1, total - an * m**n, an // m)
        if tail is not None:
            return tuple([1] + tail[::-1] + [an])
    raise AssertionError("no feasible chain alpha profile")


def odd_cycle_entropy_upper_bound(k, n):
    """[lo, hi] window on the normalized chromatic entropy of C_{2k+1}^n.

    |MIS_{C_{2k+1}^t}| = k^t.  The low edge evaluates the extremal profile
    with maximal α_n (most mass on the largest independent sets); the high
    edge the feasible profile with minimal α_n.  Returns a dict with the
    window, the α_n integer window, and both extremal profiles.
    """
    if k < 2 or n < 1:
        raise UsageError("need k >= 2 and n >= 1")
    V = 2 * k + 1
    return _entropy_window(V, k, n)


def _entropy_window(V, m, n):
    sizes = tuple(m**t for t in range(n + 1))
    total = V**n
    lo_profile = AlphaProfile(_profile_max_alpha_n(V, m, n), sizes, total)
    hi_profile = AlphaProfile(_profile_min_alpha_n(V, m, n), sizes, total)
    lo = lo_profile.entropy() / n
    hi = hi_profile.entropy() / n
    a_lo, a_hi = alpha_n_window(V, m, n)
    return {
        "lo": lo,
        "hi": hi,
        "alpha_n_window": (a_lo, a_hi),
        "lo_profile": lo_profile,
        "hi_profile": hi_profile,
    }


def general_entropy_upper_bound(g, n, guard=None):
    """Same α machinery with |MIS_{G^t}| = |MIS_G|^t for a general graph."""
    if n < 1:
        raise UsageError("n must be >= 1")
    V = g.vertex_count
    m = max_independent_set_size(g, guard=guard)
    if m == 1:
        # complete graph: every class is a singleton, bound is log2 V exactly
        sizes = tuple(1 for _ in range(n + 1))
        profile = AlphaProfile((1,) * n + (V**n - n,), sizes, V**n)
        h = log2(V)
        return {
            "lo": h,
            "hi": h,
            "alpha_n_window": (V**n - n, V**n - n),
            "lo_profile": profile,
            "hi_profile": profile,
        }
    return _entropy_window(V, m, n)


def fractional_entropy_lower_bound(V):
    """log2((2k+1)/k) for odd V = 2k+1: graph-entropy lower bound under a
    uniform source."""
    if V % 2 == 0:
        raise UsageError("fractional lower bound needs odd V = 2k+1")
    k = (V - 1) // 2
    if k < 2:
        raise UsageError("need V >= 5")
    return log2(Fraction(2 * k + 1, k))


# -- Huffman ------------------------------------------------------------------


def huffman_code(pmf):
    """Optimal binary prefix code for a color PMF.

    Ties in the merge queue are broken by the lexicographically smallest color
    id contained in a subtree, so the code is deterministic.  Zero-probability
    colors are dropped with a warning.  Returns (code dict, average length as
    an exact Fraction).
    """
    items = sorted(pmf.items())
    if not items:
        raise UsageError("empty PMF")
    dropped = [c for c, p in items if p == 0]
    if dropped:
        warnings.warn(f"dropping zero-probability colors {dropped}")
        items = [(c, p) for c, p in items if p > 0]
    if len(items) == 1:
        # a lone symbol needs zero bits
        return {items[0][0]: ""}, Fraction(0)
    heap = [(Fraction(p), (c,)) for c, p in items]
    heapq.heapify(heap)
    children = {}
    while len(heap) > 1:
        p1, key1 = heapq.heappop(heap)
        p2, key2 = heapq.heappop(heap)
        merged = tuple(sorted(key1 + key2))
        children[merged] = (key1, key2)
        heapq.heappush(heap, (p1 + p2, merged))
    root = heap[0][1]
    code = {}

    def walk(key, prefix):
        if key not in children:
            code[key[0]] = prefix or "0"
            return
        left, right = children[key]
        walk(left, prefix + "0")
        walk(right, prefix + "1")

    walk(root, "")
    avg = sum(Fraction(p) * len(code[c]) for c, p in items)
    return code, avg
