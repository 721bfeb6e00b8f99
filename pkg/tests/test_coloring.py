from fractions import Fraction

import pytest

from chromacode import (
    Coloring,
    GuardExceeded,
    UsageError,
    b_fold_coloring_search,
    complete_graph,
    cycle_graph,
    even_cycle_power_coloring,
    exact_chromatic_number,
    fractional_chromatic_cycle,
    fractional_chromatic_power,
    greedy_coloring,
    greedy_gain,
    is_valid_b_fold,
    is_valid_coloring,
    odd_cycle_chi_sequence,
    odd_cycle_power_coloring,
    or_power,
    path_graph,
    prism_graph,
    product_coloring,
    regular_power_chromatic,
)


def test_coloring_normalization_and_json():
    c = Coloring.from_list([5, 7, 5, 9])
    assert c.assignment == (0, 1, 0, 2)
    assert c.palette_size == 3
    assert Coloring.from_json(c.to_json()) == c
    with pytest.raises(UsageError):
        Coloring.from_dict({"colors": [0, 1], "palette": 3})


def test_is_valid_coloring():
    c5 = cycle_graph(5)
    assert is_valid_coloring(c5, Coloring.from_list([0, 1, 0, 1, 2]))
    assert not is_valid_coloring(c5, Coloring.from_list([0, 1, 0, 1, 0]))


def test_greedy_coloring_proper():
    for g in (cycle_graph(5), complete_graph(4), prism_graph(), path_graph(6)):
        c = greedy_coloring(g)
        assert is_valid_coloring(g, c)


@pytest.mark.parametrize(
    "g,chi",
    [
        (cycle_graph(4), 2),
        (cycle_graph(5), 3),
        (complete_graph(4), 4),
        (path_graph(5), 2),
        (prism_graph(), 3),
    ],
)
def test_exact_chromatic_number(g, chi):
    got, c = exact_chromatic_number(g)
    assert got == chi
    assert is_valid_coloring(g, c)
    assert c.palette_size == chi


def test_exact_chi_guard():
    with pytest.raises(GuardExceeded):
        exact_chromatic_number(cycle_graph(100))


def test_odd_cycle_chi_sequence():
    assert odd_cycle_chi_sequence(6) == [3, 8, 20, 50, 125, 313]


@pytest.mark.parametrize("k,n,chi", [(2, 2, 4), (2, 3, 8), (3, 2, 4)])
def test_even_cycle_power_coloring(k, n, chi):
    gn, c = even_cycle_power_coloring(k, n)
    assert c.palette_size == chi == 2**n
    assert is_valid_coloring(gn, c)


@pytest.mark.parametrize("i,n", [(5, 1), (5, 2), (5, 3), (7, 2)])
def test_odd_cycle_power_coloring_valid(i, n):
    chi, c, gn = odd_cycle_power_coloring(i, n)
    assert chi == odd_cycle_chi_sequence(n)[-1]
    assert is_valid_coloring(gn, c)
    assert c.palette_size <= chi


def test_odd_cycle_power_coloring_guard_degrades():
    chi, c, gn = odd_cycle_power_coloring(5, 4, guard=100)
    assert chi == 50 and c is None and gn is None


def test_greedy_gain_monotone():
    gains = [greedy_gain(5, n) for n in range(1, 7)]
    assert gains[0] == 1
    assert all(b > a for a, b in zip(gains, gains[1:]))
    assert gains[1] == Fraction(9, 8)


def test_regular_power_chromatic_even_cycle():
    # d-regular with even V: d^n colors
    assert regular_power_chromatic(2, 4, 2) == 4
    assert regular_power_chromatic(2, 6, 2) == 4
    got = regular_power_chromatic(2, 4, 2, graph=cycle_graph(4), cross_check=True)
    assert got == 4


def test_product_coloring_always_valid():
    for g in (cycle_graph(5), prism_graph(), path_graph(4)):
        gn, c = product_coloring(g, 2)
        assert is_valid_coloring(gn, c)
        chi, _ = exact_chromatic_number(g)
        assert c.palette_size <= chi**2


def test_b_fold_search_c5():
    c5 = cycle_graph(5)
    fc = b_fold_coloring_search(c5, 5, 2)
    assert fc is not None
    assert is_valid_b_fold(c5, fc)
    # 4:2 would mean chi_f <= 2 < 5/2: impossible
    assert b_fold_coloring_search(c5, 4, 2) is None


@pytest.mark.parametrize("b,chi_b", [(1, 3), (2, 5), (3, 8), (4, 10)])
def test_fractional_chromatic_cycle(b, chi_b):
    res = fractional_chromatic_cycle(2, b)
    assert res["chi_b"] == chi_b
    assert res["chi_b_lower"] == 2 * b + 1
    assert res["chi_f"] == Fraction(5, 2)
    assert is_valid_b_fold(cycle_graph(5), res["coloring"])


def test_fractional_chromatic_power():
    assert fractional_chromatic_power(2, 2) == Fraction(25, 4)
    assert fractional_chromatic_power(3, 3) == Fraction(343, 27)
