"""Neighborhood expansion rates and their spectral bounds for OR powers."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import UsageError
from .graphs import bits_to_list
from .orpower import PowerGraph, subgraph_view
from .spectral import graph_spectrum, hong_bound


def expansion_rate(g, y):
    """|N(Y)| / |Y| as an exact rational; N(Y) excludes members of Y."""
    members = set(y)
    if not members:
        raise UsageError("Y must be nonempty")
    if any(not 0 <= v < g.vertex_count for v in members):
        raise UsageError("Y contains out-of-range vertices")
    nbhd = 0
    for v in members:
        nbhd |= g.neighbors_bitset(v)
    outside = [u for u in bits_to_list(nbhd) if u not in members]
    return Fraction(len(outside), len(members))


def tanner_lower_bound(degree, total, y_size, lam):
    """d^2 / (Λ^2 + (d^2 - Λ^2)·|Y|/total), Tanner's bound on |N(Y)|/|Y|.

    Tanner's N(Y) counts every vertex with a neighbor in Y, including those
    inside Y; our expansion_rate excludes Y, so a valid lower bound on it is
    this expression minus one (|N(Y) \\ Y| >= |N(Y)| - |Y|).
    """
    d2 = degree * degree
    lam2 = lam * lam
    return d2 / (lam2 + (d2 - lam2) * y_size / total)


@dataclass(frozen=True)
class ExpansionBounds:
    family: str
    total: int  # V^n
    y_size: int
    lower: float
    upper: float
    lam: float
    lam_is_bound: bool  # True when Λ was substituted by a spectral bound


def expansion_bounds(family, V, n, y_size, d=None, lam=None):
    """Spectral expansion bounds for the n-fold OR power.

    Lower bounds are Tanner's expression minus one (the exclusive-neighborhood
    correction, see tanner_lower_bound), clamped at zero. The upper bound is
    the complete-graph rate (V^n - |Y|)/|Y|, the maximum any graph achieves.

    regular: lower bound with degree d(V^n-1)/(V-1) and supplied Λ.
    complete: the maximum-rate case, Λ = 1 exactly; lower = upper = exact rate.
    cycle: the minimum-rate case; Λ = |λ_{V^n}| when supplied, else the hong
           magnitude as a conservative stand-in (flagged lam_is_bound).
    general: the sandwich [cycle lower, complete upper].
    """
    if n < 1 or y_size < 1:
        raise UsageError("need n >= 1 and |Y| >= 1")
    total = V**n
    if y_size > total:
        raise UsageError("|Y| exceeds the vertex count")
    complete_upper = (total - y_size) / y_size
    if family == "complete":
        return ExpansionBounds(
            "complete", total, y_size, complete_upper, complete_upper, 1.0, False
        )
    if family == "regular":
        if d is None or lam is None:
            raise UsageError("regular family needs d and Λ")
        deg = d * (total - 1) // (V - 1)
        lower = max(tanner_lower_bound(deg, total, y_size, lam) - 1.0, 0.0)
        return ExpansionBounds("regular", total, y_size, lower, complete_upper, lam, False)
    if family in ("cycle", "general"):
        lam_is_bound = lam is None
        if lam is None:
            lam = -hong_bound(total)
        deg = 2 * (total - 1) // (V - 1)
        lower = max(tanner_lower_bound(deg, total, y_size, lam) - 1.0, 0.0)
        return ExpansionBounds(family, total, y_size, lower, complete_upper, lam, lam_is_bound)
    raise UsageError(f"unknown expansion family {family!r}")


@dataclass(frozen=True)
class LambdaRelationReport:
    lhs: float  # λ1 of the induced block sub-graph
    rhs: float  # λ2(A^n) + (deg - λ2)·(1/V)
    holds: bool


def induced_lambda_relation_check(gn, l, tol=1e-9):
    """Check λ1(block l) ≤ λ2(G^n) + (deg(x^n) − λ2(G^n))/V on a regular power."""
    if not isinstance(gn, PowerGraph):
        raise UsageError("needs a PowerGraph with provenance")
    V = gn.tuple_base
    degrees = gn.degrees()
    if min(degrees) != max(degrees):
        raise UsageError("relation check requires a regular power")
    deg = degrees[0]
    block = subgraph_view(gn, l)
    lhs = graph_spectrum(block).lambda_1 if block.vertex_count > 1 else 0.0
    spec = graph_spectrum(gn)
    lam2 = spec.values[1]
    rhs = lam2 + (deg - lam2) / V
    return LambdaRelationReport(lhs, rhs, lhs <= rhs + tol)
