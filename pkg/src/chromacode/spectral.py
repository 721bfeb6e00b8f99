"""Symmetric eigensolving (cyclic Jacobi rotations), Gershgorin enclosures,
closed-form largest eigenvalues of cycle powers, the split decomposition of
OR-power adjacency matrices, and the eigenvalue-based chromatic bounds."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import UsageError, check_guard
from .orpower import PowerGraph, subgraph_view

DENSE_GUARD_DEFAULT = 10_000
DISTINCT_TOL = 1e-6


# -- eigensolver --------------------------------------------------------------


def jacobi_eigenvalues(matrix, tol=1e-10, max_sweeps=60, vectors=False):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps 2x2 rotations over all off-diagonal positions until the
    off-diagonal Frobenius mass is below tol * ||M||_F.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise UsageError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-8):
        raise UsageError("matrix must be symmetric")
    vecs = np.eye(n) if vectors else None
    scale = np.linalg.norm(a)
    if n > 1 and scale > 0:
        for _ in range(max_sweeps):
            off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
            if off <= tol * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= 1e-30 * scale:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if theta == 0.0:
                        t = 1.0
                    else:
                        t = math.copysign(1.0, theta) / (
                            abs(theta) + math.sqrt(theta * theta + 1.0)
                        )
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    rp, rq = a[p, :].copy(), a[q, :].copy()
                    a[p, :] = c * rp - s * rq
                    a[q, :] = s * rp + c * rq
                    cp, cq = a[:, p].copy(), a[:, q].copy()
                    a[:, p] = c * cp - s * cq
                    a[:, q] = s * cp + c * cq
                    if vectors:
                        vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
                        vecs[:, p] = c * vp - s * vq
                        vecs[:, q] = s * vp + c * vq
    diag = np.diag(a).copy()
    order = np.argsort(diag)[::-1]
    if vectors:
        return diag[order], vecs[:, order]
    return diag[order]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with clustering into distinct values."""

    values: tuple

    @property
    def lambda_1(self):
        return self.values[0]

    @property
    def lambda_min(self):
        return self.values[-1]

    def distinct(self, tol=DISTINCT_TOL):
        out = []
        for v in self.values:
            if not out or abs(out[-1] - v) > tol:
                out.append(v)
        return tuple(out)

    def multiplicities(self, tol=DISTINCT_TOL):
        out = []
        for v in self.values:
            if out and abs(out[-1][0] - v) <= tol:
                out[-1][1] += 1
            else:
                out.append([v, 1])
        return [(v, m) for v, m in out]


def symmetric_eigenvalues(matrix, tol=1e-10, guard=None):
    """Spectrum of a symmetric matrix (Jacobi solver)."""
    m = np.asarray(matrix)
    check_guard("matrix dimension", m.shape[0], guard, DENSE_GUARD_DEFAULT)
    return Spectrum(tuple(jacobi_eigenvalues(m, tol=tol)))


def graph_spectrum(g, tol=1e-10, guard=None):
    return symmetric_eigenvalues(g.adjacency_matrix(), tol=tol, guard=guard)


def spectral_norm(matrix):
    """2-norm of an arbitrary rectangular matrix via Jacobi on M^T M."""
    m = np.asarray(matrix, dtype=float)
    if m.size == 0:
        return 0.0
    ev = jacobi_eigenvalues(m.T @ m)
    return math.sqrt(max(float(ev[0]), 0.0))


# -- Gershgorin ---------------------------------------------------------------


@dataclass(frozen=True)
class GershgorinIntervals:
    mode: str
    intervals: tuple  # (lo, hi) pairs
    envelope: tuple  # (lo, hi) hull of the intervals
    scalar_envelope: tuple = None  # block mode only: scalar-GCT-centered hull

    def contains(self, value, tol=1e-9):
        return any(lo - tol <= value <= hi + tol for lo, hi in self.intervals)


def gershgorin(matrix, mode="scalar", block_size=None):
    """Gershgorin interval enclosures of a symmetric matrix.

    scalar: one interval per row, centered at the diagonal entry with radius
    the off-diagonal absolute row sum.  block: for each diagonal block, one
    interval per block eigenvalue with radius the sum of 2-norms of the
    off-diagonal blocks in that block row; scalar_envelope replaces the block
    eigenvalues by the scalar-GCT range of the diagonal block, which is the
    loose outer interval the block form is usually quoted with.
    """
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    if mode == "scalar":
        intervals = []
        for i in range(n):
            r = float(np.sum(np.abs(a[i]))) - abs(float(a[i, i]))
            c = float(a[i, i])
            intervals.append((c - r, c + r))
        env = (min(lo for lo, _ in intervals), max(hi for _, hi in intervals))
        return GershgorinIntervals("scalar", tuple(intervals), env)
    if mode == "block":
        if block_size is None or n % block_size:
            raise UsageError("block mode needs a block size dividing the dimension")
        b = block_size
        nb = n // b
        intervals = []
        scalar_lo, scalar_hi = [], []
        for k in range(nb):
            diag = a[k * b : (k + 1) * b, k * b : (k + 1) * b]
            radius = sum(
                spectral_norm(a[k * b : (k + 1) * b, t * b : (t + 1) * b])
                for t in range(nb)
                if t != k
            )
            for lam in jacobi_eigenvalues(diag):
                intervals.append((float(lam) - radius, float(lam) + radius))
            inner = gershgorin(diag, "scalar").envelope
            scalar_lo.append(inner[0] - radius)
            scalar_hi.append(inner[1] + radius)
        env = (min(lo for lo, _ in intervals), max(hi for _, hi in intervals))
        return GershgorinIntervals(
            "block", tuple(intervals), env, (min(scalar_lo), max(scalar_hi))
        )
    raise UsageError(f"unknown Gershgorin mode {mode!r}")


# -- closed forms -------------------------------------------------------------


def cycle_power_largest_eig(V, n):
    """λ1 of C_V^n: 2 for n = 1, else 2 + Σ_{j=1}^{n-1} 2 V^j (equals the degree)."""
    if V < 3 or n < 1:
        raise UsageError("need V >= 3 and n >= 1")
    return 2 + sum(2 * V**j for j in range(1, n))


def all_ones_spectrum(V):
    """Spectrum of J_V: {V, 0 x (V-1)}."""
    if V < 1:
        raise UsageError("V must be >= 1")
    return Spectrum((float(V),) + (0.0,) * (V - 1))


def smallest_eig_lower_bounds(V, E, degrees):
    """Named lower bounds on the smallest adjacency eigenvalue."""
    if len(degrees) != V or sum(degrees) != 2 * E:
        raise UsageError("inconsistent V, E, degree list")
    dmin, dmax = min(degrees), max(degrees)
    return {
        "brigham": -math.sqrt(2 * E * (V - 1) / 2),
        "hong": -math.sqrt(V / 2 * (V + 1) / 2),
        "das": -math.sqrt(2 * E - (V - 1) * dmin + (dmin - 1) * dmax),
    }


def hong_bound(V):
    return -math.sqrt(V / 2 * (V + 1) / 2)


# -- split decomposition ------------------------------------------------------


@dataclass
class SplitReport:
    a_gr: np.ndarray
    a_fc: np.ndarray
    lam_gr: tuple
    lam_fc: tuple
    lam_full: tuple
    lam_sums: tuple
    deviations: tuple  # per-index |lam_sums - lam_full|


def split_decomposition(gn, tol=1e-10, guard=None):
    """Split an OR-power adjacency into block-diagonal previous-power copies
    (a_gr) plus the cross-block remainder (a_fc), with an eigen-sum report
    pairing sorted λ(a_gr) + sorted λ(a_fc) against sorted λ(full)."""
    if not isinstance(gn, PowerGraph):
        raise UsageError("split decomposition needs a PowerGraph with provenance")
    check_guard("matrix dimension", gn.vertex_count, guard, DENSE_GUARD_DEFAULT)
    V, n = gn.tuple_base, gn.tuple_len
    size = V ** (n - 1)
    full = gn.adjacency_matrix()
    a_gr = np.zeros_like(full)
    for l in range(V):
        block = subgraph_view(gn, l).adjacency_matrix()
        a_gr[l * size : (l + 1) * size, l * size : (l + 1) * size] = block
    a_fc = full - a_gr
    lam_gr = jacobi_eigenvalues(a_gr, tol=tol)
    lam_fc = jacobi_eigenvalues(a_fc, tol=tol)
    lam_full = jacobi_eigenvalues(full, tol=tol)
    sums = lam_gr + lam_fc
    return SplitReport(
        a_gr,
        a_fc,
        tuple(lam_gr),
        tuple(lam_fc),
        tuple(lam_full),
        tuple(sums),
        tuple(np.abs(sums - lam_full)),
    )


# -- chromatic bounds ---------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    variant: str
    lower: float
    upper: float
    details: dict = field(default_factory=dict)


def bound_hoffman(g, tol=1e-10):
    """Hoffman lower / Wilf upper bound directly from the spectrum of g."""
    spec = graph_spectrum(g, tol=tol)
    l1, lv = spec.lambda_1, spec.lambda_min
    lower = 1.0 - l1 / lv if lv < 0 else 1.0
    upper = math.floor(l1 + 1e-9) + 1
    return BoundReport("hoffman-direct", lower, upper, {"lambda_1": l1, "lambda_V": lv})


def bound_cycle_power(V, n):
    """Bounds on χ(C_V^n): Hoffman ratio with λ1 closed-form and the better of
    the brigham/hong lower bounds on λ_{V^n}; upper is λ1 + 1."""
    l1 = cycle_power_largest_eig(V, n)
    Vn = V**n
    En = Vn * l1 // 2
    bounds = smallest_eig_lower_bounds(Vn, En, [l1] * Vn)
    lam_v = max(bounds["brigham"], bounds["hong"])
    lower = 1.0 - l1 / lam_v
    upper = l1 + 1
    return BoundReport(
        "cycle-power", lower, upper, {"lambda_1": l1, "lambda_V_bound": lam_v}
    )


def bound_degree(gn, tol=1e-10):
    """Degree-flavored bounds on χ of a materialized (power) graph: Hoffman
    ratio against the das lower bound on λ_V; upper is d_max + 1."""
    V = gn.vertex_count
    degrees = gn.degrees()
    spec = graph_spectrum(gn, tol=tol)
    das = smallest_eig_lower_bounds(V, gn.edge_count, degrees)["das"]
    lower = 1.0 - spec.lambda_1 / das if das < 0 else 1.0
    upper = max(degrees) + 1
    return BoundReport("degree", lower, upper, {"lambda_1": spec.lambda_1, "das": das})


def bound_general(g, n, power=None, tol=1e-10):
    """Bounds on χ(G^n) from the base spectrum only: the numerator estimates
    λ1(G^n) by λ1(G) + d_max·Σ V^j.  λ_{V^n} comes from the materialized power
    when supplied, else from the hong bound.  The upper bound carries a +1
    that the floor form needs to stay valid on complete graphs."""
    spec = graph_spectrum(g, tol=tol)
    V = g.vertex_count
    dmax = max(g.degrees())
    est = spec.lambda_1 + dmax * sum(V**j for j in range(1, n))
    if power is not None:
        lam_v = graph_spectrum(power, tol=tol).lambda_min
    else:
        lam_v = hong_bound(V**n)
    lower = 1.0 - est / lam_v if lam_v < 0 else 1.0
    upper = math.floor(est + 1e-9) + 1
    return BoundReport(
        "general", lower, upper, {"lambda_1_estimate": est, "lambda_V": lam_v}
    )


def bound_gct_split(gn, tol=1e-10):
    """Bounds on χ(G^n) via the split decomposition: λ1(a_gr) + λ1(a_fc)
    bounds λ1(G^n) from above; hong bounds λ_{V^n} from below."""
    rep = split_decomposition(gn, tol=tol)
    s = rep.lam_gr[0] + rep.lam_fc[0]
    lam_v = hong_bound(gn.vertex_count)
    lower = 1.0 - s / lam_v
    upper = math.floor(s + 1e-9) + 1
    return BoundReport(
        "gct-split",
        lower,
        upper,
        {"lambda_1_gr": rep.lam_gr[0], "lambda_1_fc": rep.lam_fc[0], "sum": s},
    )


def lambda1_window(g, n, power=None, tol=1e-10):
    """Enclosures of λ1(G^n): the coarse window [d_avg·V^{n-1}, block-GCT
    envelope] and the refined window [d_avg·V^{n-1}, ⌊λ1(gr)+λ1(fc)⌋+1]."""
    if n < 2:
        raise UsageError("lambda1 window needs n >= 2")
    from .orpower import or_power

    V = g.vertex_count
    d_avg = 2 * g.edge_count / V
    lo = d_avg * V ** (n - 1)
    if power is None:
        power = or_power(g, n)
    gct = gershgorin(power.adjacency_matrix(), "block", block_size=V ** (n - 1))
    rep = split_decomposition(power, tol=tol)
    s = rep.lam_gr[0] + rep.lam_fc[0]
    return {
        "window": (lo, gct.scalar_envelope[1]),
        "refined": (lo, math.floor(s + 1e-9) + 1),
        "lambda_1": rep.lam_full[0],
        "gct": gct,
    }


BOUND_VARIANTS = (
    "hoffman-direct",
    "cycle-power",
    "degree",
    "general",
    "lambda1-window",
    "gct-split",
)


def chromatic_bounds_spectral(variant, g=None, n=None, V=None, power=None, tol=1e-10):
    """Dispatch over the named bound variants (see the individual helpers)."""
    if variant == "hoffman-direct":
        return bound_hoffman(power if g is None else g, tol=tol)
    if variant == "cycle-power":
        return bound_cycle_power(V, n)
    if variant == "degree":
        return bound_degree(power if power is not None else g, tol=tol)
    if variant == "general":
        return bound_general(g, n, power=power, tol=tol)
    if variant == "gct-split":
        return bound_gct_split(power, tol=tol)
    if variant == "lambda1-window":
        w = lambda1_window(g, n, power=power, tol=tol)
        return BoundReport("lambda1-window", w["refined"][0], w["refined"][1], w)
    raise UsageError(f"unknown bound variant {variant!r}")
