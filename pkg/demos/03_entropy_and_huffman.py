"""Walk-through: chromatic entropy, color-class profiles, and Huffman codes.

The rate of a graph-coloring code is the entropy of the color distribution,
so the object of interest is the minimum entropy over valid colorings (the
chromatic entropy) and how it shrinks per symbol as the block length n grows.
"""

import math
from fractions import Fraction

from chromacode import (
    chromatic_entropy_bruteforce,
    cycle_graph,
    fractional_entropy_lower_bound,
    huffman_code,
    odd_cycle_entropy_upper_bound,
)

# --- the base graph: C5 under a uniform source ---------------------------------
h1 = chromatic_entropy_bruteforce(cycle_graph(5))
print(f"chromatic entropy of C5 (uniform): {h1:.4f} bits")
print(f"graph-entropy lower limit log2(5/2): {fractional_entropy_lower_bound(5):.4f} bits")

# --- per-symbol windows from color-class profiles -------------------------------
# A coloring of C5^n sorts its color classes by independent-set size 2^t; the
# class counts alpha_t determine the color distribution exactly, so extremal
# integer profiles bracket the achievable per-symbol entropy.
print("\nper-symbol entropy windows for C5^n:")
for n in range(1, 6):
    res = odd_cycle_entropy_upper_bound(2, n)
    print(f"  n={n}: [{res['lo']:.4f}, {res['hi']:.4f}]"
          f"  alpha_{n} in {res['alpha_n_window']}"
          f"  profiles {res['lo_profile'].alphas} / {res['hi_profile'].alphas}")
print("the windows squeeze down toward the limit",
      f"{math.log2(2.5):.4f} as n grows")

# --- Huffman on exact rational color PMFs ---------------------------------------
# C5 colors have probabilities {1/5, 2/5, 2/5}; the optimal code spends
# 8/5 = 1.6 bits on average, within one bit of the 1.5219-bit entropy.
pmf = {0: Fraction(1, 5), 1: Fraction(2, 5), 2: Fraction(2, 5)}
code, avg = huffman_code(pmf)
print("\nHuffman code for the C5 color PMF:", code)
print("average length:", avg, f"= {float(avg)} bits (entropy {h1:.4f})")

# the same machinery on an extremal C5^3 profile
profile = odd_cycle_entropy_upper_bound(2, 3)["lo_profile"]
code3, avg3 = huffman_code(profile.pmf())
h3 = profile.entropy()
print(f"\nC5^3 extremal profile: {len(code3)} codewords, "
      f"avg {float(avg3):.4f} bits for {h3:.4f} bits of entropy "
      f"({float(avg3)/3:.4f} bits/symbol)")
assert h3 <= float(avg3) < h3 + 1
