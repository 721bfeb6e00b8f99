import math
from fractions import Fraction

import pytest

from chromacode import (
    AlphaProfile,
    Coloring,
    GuardExceeded,
    alpha_n_window,
    chromatic_entropy_bruteforce,
    coloring_entropy,
    coloring_pmf,
    cycle_graph,
    entropy_bits,
    fractional_entropy_lower_bound,
    general_entropy_upper_bound,
    huffman_code,
    make_graph,
    odd_cycle_entropy_upper_bound,
    path_graph,
)


def test_entropy_bits():
    assert entropy_bits([Fraction(1, 2), Fraction(1, 2)]) == 1.0
    assert entropy_bits([1]) == 0.0
    assert abs(entropy_bits([Fraction(1, 4)] * 4) - 2.0) < 1e-12


def test_coloring_pmf_and_entropy():
    c5 = cycle_graph(5)
    c = Coloring.from_list([0, 1, 0, 1, 2])
    pmf = coloring_pmf(c)
    assert pmf == {0: Fraction(2, 5), 1: Fraction(2, 5), 2: Fraction(1, 5)}
    h, _ = coloring_entropy(c5, c)
    expected = entropy_bits([Fraction(2, 5), Fraction(2, 5), Fraction(1, 5)])
    assert abs(h - expected) < 1e-12


def test_chromatic_entropy_c5():
    h = chromatic_entropy_bruteforce(cycle_graph(5))
    assert abs(h - 1.5219280948873621) < 1e-12


def test_chromatic_entropy_matches_min_over_colorings():
    # K3: forced 3 colors, uniform -> log2 3
    h = chromatic_entropy_bruteforce(make_graph("complete", 3))
    assert abs(h - math.log2(3)) < 1e-12
    # edgeless: single color, zero entropy
    assert chromatic_entropy_bruteforce(make_graph("edgeless", 4)) == 0.0
    # path P4: best is a 2/2 split of the 2-coloring
    h = chromatic_entropy_bruteforce(path_graph(4))
    assert abs(h - 1.0) < 1e-12


def test_chromatic_entropy_guard():
    with pytest.raises(GuardExceeded):
        chromatic_entropy_bruteforce(cycle_graph(13))


def test_alpha_profile_pmf_and_entropy():
    p = AlphaProfile((1, 2, 5), (1, 2, 4), 25)
    pmf = p.pmf()
    assert sum(pmf.values()) == 1
    assert sorted(pmf.values(), reverse=True)[0] == Fraction(4, 25)
    assert abs(p.entropy() / 2 - 1.4419280948873623) < 1e-12


@pytest.mark.parametrize(
    "n,window", [(1, (2, 2)), (2, (5, 6)), (3, (12, 15))]
)
def test_alpha_n_window_c5(n, window):
    assert alpha_n_window(5, 2, n) == window


def test_odd_cycle_entropy_window_n3():
    res = odd_cycle_entropy_upper_bound(2, 3)
    assert res["alpha_n_window"] == (12, 15)
    assert abs(res["lo"] - 1.3725947615540288) < 1e-9
    assert abs(res["hi"] - 1.4152614282206954) < 1e-9
    assert res["lo_profile"].alphas == (1, 2, 2, 14)
    assert res["hi_profile"].alphas == (1, 2, 6, 12)
    for profile in (res["lo_profile"], res["hi_profile"]):
        assert profile.alphas[0] == 1
        assert sum(a * 2**t for t, a in enumerate(profile.alphas)) == 125


def test_entropy_window_ordering():
    for n in range(1, 6):
        res = odd_cycle_entropy_upper_bound(2, n)
        assert res["lo"] <= res["hi"]
        # windows sit above the graph-entropy limit log2(5/2)
        assert res["lo"] >= math.log2(2.5) - 1e-9


def test_general_entropy_upper_bound_matches_cycle_machinery():
    res = general_entropy_upper_bound(cycle_graph(5), 2)
    cyc = odd_cycle_entropy_upper_bound(2, 2)
    assert res["hi"] == cyc["hi"]


def test_general_entropy_upper_bound_complete():
    # m = 1: only singleton classes; entropy pinned at log2 V per symbol
    res = general_entropy_upper_bound(make_graph("complete", 4), 2)
    assert abs(res["lo"] - 2.0) < 1e-12
    assert abs(res["hi"] - 2.0) < 1e-12


def test_fractional_entropy_lower_bound():
    lb = fractional_entropy_lower_bound(5)
    assert abs(lb - math.log2(2.5)) < 1e-12
    assert lb <= chromatic_entropy_bruteforce(cycle_graph(5)) + 1e-12


def test_huffman_c5_pmf_is_optimal():
    code, avg = huffman_code({0: Fraction(1, 5), 1: Fraction(2, 5), 2: Fraction(2, 5)})
    assert avg == Fraction(8, 5)
    assert sorted(len(w) for w in code.values()) == [1, 2, 2]


def test_huffman_prefix_free_and_within_one_bit_of_entropy():
    pmf = {c: Fraction(1, 8) if c < 4 else Fraction(1, 4) for c in range(6)}
    code, avg = huffman_code(pmf)
    words = list(code.values())
    for i, w in enumerate(words):
        for j, w2 in enumerate(words):
            if i != j:
                assert not w2.startswith(w)
    h = entropy_bits(pmf.values())
    assert h - 1e-12 <= float(avg) < h + 1


def test_huffman_single_symbol_empty_codeword():
    code, avg = huffman_code({0: Fraction(1)})
    assert code == {0: ""}
    assert avg == 0


def test_huffman_deterministic_tie_break():
    pmf = {c: Fraction(1, 4) for c in range(4)}
    code1, _ = huffman_code(pmf)
    code2, _ = huffman_code(dict(reversed(list(pmf.items()))))
    assert code1 == code2
