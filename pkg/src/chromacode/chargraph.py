"""Source characteristic graphs from a function table and an exact joint PMF.

Two symbols of source 1 are joined by an edge iff some side value x2 with
positive joint probability at both makes the function differ; then they need
distinct codes.  All probabilities are exact rationals: the edge rule tests
strict positivity and must not be subject to rounding.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .coloring import is_valid_coloring
from .errors import UsageError
from .graphs import Graph


@dataclass(frozen=True)
class FunctionSpec:
    """f(x1, x2) over alphabets [n1] x [n2]; outcomes normalized to 0-based ids."""

    n1: int
    n2: int
    table: tuple  # n1 rows of n2 outcome ids

    @classmethod
    def from_table(cls, table):
        if not table or any(len(row) != len(table[0]) for row in table):
            raise UsageError("function table must be rectangular and nonempty")
        labels = {}
        rows = []
        for row in table:
            out = []
            for label in row:
                if label not in labels:
                    labels[label] = len(labels)
                out.append(labels[label])
            rows.append(tuple(out))
        return cls(len(rows), len(rows[0]), tuple(rows))

    def f(self, x1, x2):
        return self.table[x1][x2]

    def to_dict(self):
        return {"x1": self.n1, "x2": self.n2, "f": [list(r) for r in self.table]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        try:
            spec = cls.from_table(d["f"])
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed function JSON: {exc}") from exc
        if spec.n1 != d.get("x1", spec.n1) or spec.n2 != d.get("x2", spec.n2):
            raise UsageError("declared alphabet sizes do not match table shape")
        return spec

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def _parse_rational(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, int):
        return Fraction(v)
    raise UsageError(f"probability {v!r} must be an exact rational ('num/den' or int)")


@dataclass(frozen=True)
class JointPMF:
    """Exact-rational joint distribution over [n1] x [n2]."""

    probs: tuple  # n1 rows of n2 Fractions

    def __post_init__(self):
        total = sum(p for row in self.probs for p in row)
        if total != 1:
            raise UsageError(f"joint PMF sums to {total}, not 1")
        if any(p < 0 for row in self.probs for p in row):
            raise UsageError("joint PMF has a negative entry")

    @classmethod
    def uniform(cls, n1, n2):
        p = Fraction(1, n1 * n2)
        return cls(tuple(tuple(p for _ in range(n2)) for _ in range(n1)))

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(Fraction(p) for p in row) for row in rows))

    @property
    def n1(self):
        return len(self.probs)

    @property
    def n2(self):
        return len(self.probs[0])

    def p(self, x1, x2):
        return self.probs[x1][x2]

    def marginal(self, source):
        if source == 1:
            return [sum(row) for row in self.probs]
        if source == 2:
            return [sum(row[j] for row in self.probs) for j in range(self.n2)]
        raise UsageError("source must be 1 or 2")

    def to_dict(self):
        return {"p": [[str(p) for p in row] for row in self.probs]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d, n1=None, n2=None):
        if d == "uniform" or d.get("p") == "uniform":
            if n1 is None or n2 is None:
                raise UsageError("uniform PMF shorthand needs alphabet sizes")
            return cls.uniform(n1, n2)
        try:
            rows = d["p"]
            return cls(tuple(tuple(_parse_rational(v) for v in row) for row in rows))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed PMF JSON: {exc}") from exc

    @classmethod
    def from_json(cls, s, n1=None, n2=None):
        v = json.loads(s)
        if v == "uniform":
            return cls.from_dict("uniform", n1, n2)
        return cls.from_dict(v, n1, n2)


def _check_dims(spec, pmf):
    if (spec.n1, spec.n2) != (pmf.n1, pmf.n2):
        raise UsageError(
            f"dimension mismatch: f is {spec.n1}x{spec.n2}, pmf is {pmf.n1}x{pmf.n2}"
        )


def build_characteristic_graph(spec, pmf, source):
    """Characteristic graph of source 1 or 2 (see module docstring)."""
    _check_dims(spec, pmf)
    if source == 1:
        n, m = spec.n1, spec.n2
        f = spec.f
        p = pmf.p
    elif source == 2:
        n, m = spec.n2, spec.n1
        f = lambda a, b: spec.f(b, a)
        p = lambda a, b: pmf.p(b, a)
    else:
        raise UsageError("source must be 1 or 2")
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if any(p(a, s) > 0 and p(b, s) > 0 and f(a, s) != f(b, s) for s in range(m)):
                edges.append((a, b))
    return Graph.from_edges(n, edges)


def verify_coloring_sufficiency(spec, pmf, c1, c2):
    """True iff the receiver table on color pairs is well-defined.

    c1/c2 must be valid colorings of the two characteristic graphs (invalid
    colorings are an error, not False).
    """
    _check_dims(spec, pmf)
    g1 = build_characteristic_graph(spec, pmf, 1)
    g2 = build_characteristic_graph(spec, pmf, 2)
    if not is_valid_coloring(g1, c1):
        raise UsageError("c1 is not a valid coloring of the source-1 graph")
    if not is_valid_coloring(g2, c2):
        raise UsageError("c2 is not a valid coloring of the source-2 graph")
    table = {}
    for x1 in range(spec.n1):
        for x2 in range(spec.n2):
            if pmf.p(x1, x2) == 0:
                continue
            key = (c1.assignment[x1], c2.assignment[x2])
            out = spec.f(x1, x2)
            if table.setdefault(key, out) != out:
                return False
    return True


def example1_spec():
    """f = (x1 + x2) mod 2 with X1 uniform on {0..3}, X2 uniform on {0,1}."""
    spec = FunctionSpec.from_table([[(x1 + x2) % 2 for x2 in range(2)] for x1 in range(4)])
    return spec, JointPMF.uniform(4, 2)
