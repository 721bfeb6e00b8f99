import json

import pytest

from chromacode import (
    Graph,
    GuardExceeded,
    UsageError,
    complete_graph,
    cycle_graph,
    is_independent_set,
    make_graph,
    max_independent_set_size,
    maximal_independent_sets,
    path_graph,
    prism_graph,
)


def test_from_edges_basic():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert g.vertex_count == 4
    assert g.edge_count == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(0) == [1]
    assert g.degrees() == [1, 1, 1, 1]


@pytest.mark.parametrize(
    "edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)], [(-1, 0)]]
)
def test_from_edges_rejects_bad_input(edges):
    with pytest.raises(UsageError):
        Graph.from_edges(4, edges)


def test_edges_sorted_lexicographically():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 3)])
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]


def test_json_roundtrip():
    g = cycle_graph(5)
    d = json.loads(g.to_json())
    assert d == {"vertices": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}
    assert Graph.from_json(g.to_json()) == g


def test_adjacency_matrix_symmetric():
    a = cycle_graph(4).adjacency_matrix()
    assert (a == a.T).all()
    assert a.sum() == 8


def test_named_families():
    assert cycle_graph(4).degrees() == [2, 2, 2, 2]
    assert complete_graph(5).edge_count == 10
    assert path_graph(3).edges() == [(0, 1), (1, 2)]
    prism = prism_graph()
    assert prism.vertex_count == 6
    assert prism.degrees() == [3] * 6


def test_make_graph_kinds():
    assert make_graph("cycle", 5) == cycle_graph(5)
    assert make_graph("complete", 4) == complete_graph(4)
    assert make_graph("edgeless", 3).edge_count == 0
    g = make_graph("custom", 3, edges=[(0, 2)])
    assert g.edges() == [(0, 2)]
    with pytest.raises(UsageError):
        make_graph("frobnicate", 3)


def test_maximal_independent_sets_c5():
    sets = maximal_independent_sets(cycle_graph(5))
    assert sets == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert max_independent_set_size(cycle_graph(5)) == 2
    assert max_independent_set_size(complete_graph(6)) == 1
    assert max_independent_set_size(cycle_graph(6)) == 3


def test_is_independent_set():
    c5 = cycle_graph(5)
    assert is_independent_set(c5, [0, 2])
    assert not is_independent_set(c5, [0, 1])
    assert is_independent_set(c5, [])


def test_mis_guard():
    with pytest.raises(GuardExceeded) as exc:
        maximal_independent_sets(cycle_graph(30))
    assert exc.value.limit == 24
    # explicit override wins
    assert maximal_independent_sets(cycle_graph(30), guard=30)


def test_mis_guard_env(monkeypatch):
    monkeypatch.setenv("CHROMACODE_GUARD", "30")
    assert maximal_independent_sets(cycle_graph(30))
    monkeypatch.setenv("CHROMACODE_GUARD", "4")
    with pytest.raises(GuardExceeded):
        maximal_independent_sets(cycle_graph(5))
