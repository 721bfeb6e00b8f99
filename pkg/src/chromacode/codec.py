"""End-to-end two-source functional compression.

Pipeline: characteristic graphs -> OR powers -> colorings -> per-source
Huffman codes on the color PMFs -> receiver lookup table on color pairs.
The decoder table is built by enumerating every positive-probability pair of
source blocks, and construction fails loudly if any color pair would have to
decode to two different outcome blocks.
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .chargraph import build_characteristic_graph
from .coloring import (
    exact_chromatic_number,
    even_cycle_power_coloring,
    greedy_coloring,
    is_valid_coloring,
    odd_cycle_power_coloring,
    product_coloring,
)
from .entropy import entropy_bits, huffman_code
from .errors import ChromacodeError, UsageError
from .graphs import make_graph
from .orpower import decode_index, encode_tuple, or_power


class AmbiguityError(ChromacodeError):
    """Two positive-probability block pairs share colors but disagree on f."""

    def __init__(self, pair_a, pair_b, out_a, out_b):
        super().__init__(
            f"ambiguous color pair: blocks {pair_a} -> {out_a} but {pair_b} -> {out_b}"
        )
        self.witness = (pair_a, pair_b)


STRATEGIES = ("exact", "greedy", "even-cycle", "odd-cycle", "product", "auto")


def _power_coloring(g, n, strategy, guard=None):
    V = g.vertex_count
    if strategy == "auto":
        if V >= 4 and V % 2 == 0 and g == make_graph("cycle", V):
            strategy = "even-cycle"
        elif V >= 5 and V % 2 == 1 and g == make_graph("cycle", V):
            strategy = "odd-cycle"
        else:
            strategy = "exact"
    if strategy == "even-cycle":
        if V % 2 or g != make_graph("cycle", V):
            raise UsageError("even-cycle strategy needs the canonical even cycle")
        return even_cycle_power_coloring(V // 2, n, guard=guard)
    if strategy == "odd-cycle":
        if V % 2 == 0 or g != make_graph("cycle", V):
            raise UsageError("odd-cycle strategy needs the canonical odd cycle")
        _, c, gn = odd_cycle_power_coloring(V, n, guard=guard)
        if c is None:
            raise UsageError("power too large to materialize for the codec")
        return gn, c
    if strategy == "product":
        return product_coloring(g, n, guard=guard)
    gn = or_power(g, n, guard=guard)
    if strategy == "exact":
        _, c = exact_chromatic_number(gn)
        return gn, c
    if strategy == "greedy":
        return gn, greedy_coloring(gn)
    raise UsageError(f"unknown coloring strategy {strategy!r}")


@dataclass
class CodecPlan:
    spec: object
    pmf: object
    n: int
    graphs: tuple  # characteristic graphs (g1, g2)
    powers: tuple
    colorings: tuple
    codes: tuple  # Huffman code dicts keyed by color
    color_pmfs: tuple  # exact color PMFs over blocks
    avg_lengths: tuple  # exact Fractions, bits per block
    decoder: dict  # (color1, color2) -> outcome block tuple


def _block_pmf(marginal, n):
    """Distribution of i.i.d. blocks, indexed by the big-endian tuple index."""
    V = len(marginal)
    out = {}
    for idx in range(V**n):
        p = Fraction(1)
        for x in decode_index(idx, V, n):
            p *= marginal[x]
        out[idx] = p
    return out


def build_codec(spec, pmf, n, coloring_strategy="auto", guard=None):
    if n < 1:
        raise UsageError("block length n must be >= 1")
    g1 = build_characteristic_graph(spec, pmf, 1)
    g2 = build_characteristic_graph(spec, pmf, 2)
    gn1, c1 = _power_coloring(g1, n, coloring_strategy, guard=guard)
    gn2, c2 = _power_coloring(g2, n, coloring_strategy, guard=guard)
    assert is_valid_coloring(gn1, c1) and is_valid_coloring(gn2, c2)

    decoder = {}
    witness = {}
    for pair in product(product(range(spec.n1), repeat=n), product(range(spec.n2), repeat=n)):
        b1, b2 = pair
        if any(pmf.p(x1, x2) == 0 for x1, x2 in zip(b1, b2)):
            continue
        out = tuple(spec.f(x1, x2) for x1, x2 in zip(b1, b2))
        key = (
            c1.assignment[encode_tuple(b1, spec.n1)],
            c2.assignment[encode_tuple(b2, spec.n2)],
        )
        if key in decoder:
            if decoder[key] != out:
                raise AmbiguityError(witness[key], pair, decoder[key], out)
        else:
            decoder[key] = out
            witness[key] = pair

    pmf1 = {}
    for idx, p in _block_pmf(pmf.marginal(1), n).items():
        c = c1.assignment[idx]
        pmf1[c] = pmf1.get(c, Fraction(0)) + p
    pmf2 = {}
    for idx, p in _block_pmf(pmf.marginal(2), n).items():
        c = c2.assignment[idx]
        pmf2[c] = pmf2.get(c, Fraction(0)) + p
    code1, avg1 = huffman_code(pmf1)
    code2, avg2 = huffman_code(pmf2)
    return CodecPlan(
        spec, pmf, n, (g1, g2), (gn1, gn2), (c1, c2), (code1, code2),
        (pmf1, pmf2), (avg1, avg2), decoder,
    )


def encode_block(plan, source, block):
    """Codeword bits for a length-n source block."""
    if source not in (1, 2):
        raise UsageError("source must be 1 or 2")
    alphabet = plan.spec.n1 if source == 1 else plan.spec.n2
    block = tuple(block)
    if len(block) != plan.n:
        raise UsageError(f"block length {len(block)} != n = {plan.n}")
    color = plan.colorings[source - 1].assignment[encode_tuple(block, alphabet)]
    code = plan.codes[source - 1]
    if color not in code:
        raise UsageError("unsupported input: block has zero probability")
    return code[color]


def _decode_prefix(code, bits):
    inverse = {w: c for c, w in code.items()}
    if "" in inverse:  # single-color code: zero bits
        if bits:
            raise UsageError(f"trailing bits {bits!r} for a zero-bit code")
        return inverse[""]
    if bits not in inverse:
        raise UsageError(f"bit string {bits!r} is not a codeword")
    return inverse[bits]


def decode_pair(plan, bits1, bits2):
    """Outcome block from the two codewords, via the receiver lookup table."""
    key = (_decode_prefix(plan.codes[0], bits1), _decode_prefix(plan.codes[1], bits2))
    if key not in plan.decoder:
        raise UsageError(f"unsupported input: color pair {key} has zero probability")
    return plan.decoder[key]


def roundtrip_exhaustive(plan):
    """Round-trip every positive-probability block pair; raises on mismatch."""
    count = 0
    for b1 in product(range(plan.spec.n1), repeat=plan.n):
        for b2 in product(range(plan.spec.n2), repeat=plan.n):
            if any(plan.pmf.p(x1, x2) == 0 for x1, x2 in zip(b1, b2)):
                continue
            expected = tuple(plan.spec.f(x1, x2) for x1, x2 in zip(b1, b2))
            got = decode_pair(plan, encode_block(plan, 1, b1), encode_block(plan, 2, b2))
            if got != expected:
                raise AssertionError(f"round-trip mismatch on {b1},{b2}: {got} != {expected}")
            count += 1
    return count


@dataclass
class RateReport:
    n: int
    samples: int
    seed: int
    strategy: str
    rates: tuple  # empirical bits per source symbol, per source
    expected_rates: tuple  # exact avg Huffman length / n, per source
    coloring_entropies: tuple  # bits per symbol of the color PMFs
    source_entropies: tuple  # H(X1), H(X2)
    lossless: bool

    def to_dict(self):
        return {
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "strategy": self.strategy,
            "rates": list(self.rates),
            "expected_rates": [float(r) for r in self.expected_rates],
            "coloring_entropies": list(self.coloring_entropies),
            "source_entropies": list(self.source_entropies),
            "lossless": self.lossless,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def simulate(spec, pmf, n, samples, seed, coloring_strategy="auto", guard=None):
    """Draw i.i.d. blocks, encode, decode, verify, and report empirical rates."""
    if samples < 1:
        raise UsageError("samples must be >= 1")
    plan = build_codec(spec, pmf, n, coloring_strategy, guard=guard)
    rng = random.Random(seed)
    pairs = [(x1, x2) for x1 in range(spec.n1) for x2 in range(spec.n2)]
    weights = [float(pmf.p(x1, x2)) for x1, x2 in pairs]
    bits = [0, 0]
    for _ in range(samples):
        draws = rng.choices(pairs, weights=weights, k=n)
        b1 = tuple(x1 for x1, _ in draws)
        b2 = tuple(x2 for _, x2 in draws)
        w1 = encode_block(plan, 1, b1)
        w2 = encode_block(plan, 2, b2)
        expected = tuple(spec.f(x1, x2) for x1, x2 in draws)
        got = decode_pair(plan, w1, w2)
        if got != expected:
            raise AssertionError(f"decode mismatch on sample {b1},{b2}")
        bits[0] += len(w1)
        bits[1] += len(w2)
    denom = samples * n
    h1 = entropy_bits(pmf.marginal(1))
    h2 = entropy_bits(pmf.marginal(2))
    return RateReport(
        n=n,
        samples=samples,
        seed=seed,
        strategy=coloring_strategy,
        rates=(bits[0] / denom, bits[1] / denom),
        expected_rates=(plan.avg_lengths[0] / n, plan.avg_lengths[1] / n),
        coloring_entropies=(
            entropy_bits(plan.color_pmfs[0].values()) / n,
            entropy_bits(plan.color_pmfs[1].values()) / n,
        ),
        source_entropies=(h1, h2),
        lossless=True,
    )
