from fractions import Fraction

import pytest

from chromacode import (
    Coloring,
    FunctionSpec,
    JointPMF,
    UsageError,
    build_characteristic_graph,
    cycle_graph,
    example1_spec,
    verify_coloring_sufficiency,
)


def test_function_spec_normalizes_labels():
    spec = FunctionSpec.from_table([["a", "b"], ["b", "a"]])
    assert spec.n1 == spec.n2 == 2
    assert spec.f(0, 0) == 0 and spec.f(0, 1) == 1 and spec.f(1, 0) == 1


def test_function_spec_json_roundtrip():
    spec, _ = example1_spec()
    assert FunctionSpec.from_json(spec.to_json()) == spec


def test_function_spec_rejects_ragged_table():
    with pytest.raises(UsageError):
        FunctionSpec.from_table([[0, 1], [0]])


def test_pmf_must_sum_to_one():
    with pytest.raises(UsageError):
        JointPMF.from_rows([["1/2", "1/4"]])
    with pytest.raises(UsageError):
        JointPMF.from_rows([["3/2", "-1/2"]])


def test_pmf_uniform_and_marginals():
    pmf = JointPMF.uniform(4, 2)
    assert pmf.p(0, 0) == Fraction(1, 8)
    assert pmf.marginal(1) == [Fraction(1, 4)] * 4
    assert pmf.marginal(2) == [Fraction(1, 2)] * 2


def test_pmf_json_uniform_shorthand():
    pmf = JointPMF.from_json('"uniform"', 2, 2)
    assert pmf == JointPMF.uniform(2, 2)
    with pytest.raises(UsageError):
        JointPMF.from_json('"uniform"')


def test_pmf_json_rational_roundtrip():
    pmf = JointPMF.from_rows([["1/3", "1/6"], ["1/4", "1/4"]])
    assert JointPMF.from_json(pmf.to_json()) == pmf


def test_example1_characteristic_graphs():
    spec, pmf = example1_spec()
    g1 = build_characteristic_graph(spec, pmf, 1)
    g2 = build_characteristic_graph(spec, pmf, 2)
    assert g1 == cycle_graph(4)
    assert g2.edges() == [(0, 1)]


def test_zero_probability_pairs_drop_edges():
    spec, _ = example1_spec()
    # x2 = 1 never occurs: f(x1, 0) = x1 mod 2, so x1-confusability halves
    pmf = JointPMF.from_rows(
        [["1/4", "0"], ["1/4", "0"], ["1/4", "0"], ["1/4", "0"]]
    )
    g1 = build_characteristic_graph(spec, pmf, 1)
    assert g1.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    g2 = build_characteristic_graph(spec, pmf, 2)
    assert g2.edge_count == 0


def test_dimension_mismatch_is_usage_error():
    spec, _ = example1_spec()
    with pytest.raises(UsageError):
        build_characteristic_graph(spec, JointPMF.uniform(2, 2), 1)


def test_verify_coloring_sufficiency_true():
    spec, pmf = example1_spec()
    c1 = Coloring.from_list([0, 1, 0, 1])  # proper on C4
    c2 = Coloring.from_list([0, 1])
    assert verify_coloring_sufficiency(spec, pmf, c1, c2) is True


def test_verify_coloring_sufficiency_invalid_raises():
    spec, pmf = example1_spec()
    c1 = Coloring.from_list([0, 0, 0, 0])  # improper on C4
    c2 = Coloring.from_list([0, 1])
    with pytest.raises(UsageError):
        verify_coloring_sufficiency(spec, pmf, c1, c2)


def test_verify_coloring_sufficiency_false_on_ambiguity():
    # diagonal support: both characteristic graphs are edgeless, so the
    # all-one-color colorings are valid, yet f(0,0) != f(1,1) makes the
    # color pair ((0), (0)) ambiguous for any decoder
    spec = FunctionSpec.from_table([[0, 0], [0, 1]])
    pmf = JointPMF.from_rows([["1/2", "0"], ["0", "1/2"]])
    assert build_characteristic_graph(spec, pmf, 1).edge_count == 0
    assert build_characteristic_graph(spec, pmf, 2).edge_count == 0
    c1 = Coloring.from_list([0, 0])
    c2 = Coloring.from_list([0, 0])
    assert verify_coloring_sufficiency(spec, pmf, c1, c2) is False
