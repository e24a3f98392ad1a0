"""Graph type, local complementation, and the edge-list / DOT formats."""

import random

import pytest

from conftest import all_graphs, random_graph
from stabgraph import graphs
from stabgraph.errors import ParseError
from stabgraph.gf2 import BitMatrix
from stabgraph.graphs import Graph


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(BitMatrix.from_rows([[0, 1], [0, 0]]))  # asymmetric
    with pytest.raises(ValueError):
        Graph(BitMatrix.from_rows([[1, 0], [0, 0]]))  # self-loop
    with pytest.raises(ValueError):
        Graph(BitMatrix.zeros(2, 3))


def test_constructors():
    assert Graph.empty(3).edges() == []
    assert Graph.complete(3).edges() == [(1, 2), (1, 3), (2, 3)]
    assert Graph.path(4).edges() == [(1, 2), (2, 3), (3, 4)]
    assert Graph.star(4, 2).edges() == [(1, 2), (2, 3), (2, 4)]
    g = Graph.from_edges(4, [(2, 4), (1, 3)])
    assert g.edges() == [(1, 3), (2, 4)]
    assert g.has_edge(1, 3) and not g.has_edge(1, 2)
    assert g.degree(3) == 1
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_local_complement_complete_graph_becomes_star():
    got = graphs.local_complement(Graph.complete(5), 1)
    assert got.edges() == [(1, 2), (1, 3), (1, 4), (1, 5)]
    assert got == Graph.star(5, 1)


def test_local_complement_empty_graph_fixed():
    g = Graph.empty(4)
    for i in range(1, 5):
        assert graphs.local_complement(g, i) == g


def test_local_complement_path_center_closes_triangle():
    got = graphs.local_complement(Graph.path(3), 2)
    assert got == Graph.complete(3)


def test_local_complement_out_of_range():
    with pytest.raises(ValueError):
        graphs.local_complement(Graph.empty(3), 0)
    with pytest.raises(ValueError):
        graphs.local_complement(Graph.empty(3), 4)


def test_matrix_form_agrees_with_edge_toggling():
    for n in range(1, 5):
        for g in all_graphs(n):
            for i in range(1, n + 1):
                toggled = graphs.local_complement(g, i)
                formula = graphs.local_complement_matrix_form(g.adj, i)
                assert toggled.adj == formula
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(1, 13)
        g = random_graph(rng, n)
        i = rng.randrange(1, n + 1)
        assert graphs.local_complement(g, i).adj == graphs.local_complement_matrix_form(g.adj, i)


def test_matrix_form_input_validation():
    with pytest.raises(ValueError):
        graphs.local_complement_matrix_form(BitMatrix.from_rows([[0, 1], [0, 0]]), 1)


def test_involution():
    for n in range(1, 5):
        for g in all_graphs(n):
            for i in range(1, n + 1):
                assert graphs.local_complement(graphs.local_complement(g, i), i) == g
    rng = random.Random(12)
    for _ in range(500):
        n = rng.randrange(1, 13)
        g = random_graph(rng, n)
        i = rng.randrange(1, n + 1)
        assert graphs.local_complement(graphs.local_complement(g, i), i) == g


def test_commutation_on_non_adjacent_vertices():
    for n in range(2, 5):
        for g in all_graphs(n):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if g.has_edge(i, j):
                        continue
                    ij = graphs.local_complement(graphs.local_complement(g, j), i)
                    ji = graphs.local_complement(graphs.local_complement(g, i), j)
                    assert ij == ji


def test_complement():
    assert graphs.complement(Graph.empty(4)) == Graph.complete(4)
    rng = random.Random(13)
    for _ in range(100):
        g = random_graph(rng, rng.randrange(1, 10))
        assert graphs.complement(graphs.complement(g)) == g
    near_k3 = Graph.from_edges(3, [(1, 2), (1, 3)])
    assert graphs.complement(near_k3) == Graph.from_edges(3, [(2, 3)])


def test_neighborhood():
    assert graphs.neighborhood(Graph.star(5, 1), 1) == {2, 3, 4, 5}
    assert graphs.neighborhood(Graph.path(3), 2) == {1, 3}
    assert graphs.neighborhood(Graph.empty(3), 1) == set()
    with pytest.raises(ValueError):
        graphs.neighborhood(Graph.empty(3), 5)


def test_induced_subgraph():
    assert graphs.induced_subgraph(Graph.complete(4), {1, 2}) == Graph.from_edges(2, [(1, 2)])
    sub = graphs.induced_subgraph(Graph.path(4), {1, 3, 4})
    assert sub.edges() == [(2, 3)]  # relabeled: 3 -> 2, 4 -> 3
    with pytest.raises(ValueError):
        graphs.induced_subgraph(Graph.path(4), {0, 1})


def test_edge_list_roundtrip():
    rng = random.Random(14)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(1, 12))
        text = graphs.format_edge_list(g)
        assert graphs.parse_edge_list(text) == g
        assert graphs.format_edge_list(graphs.parse_edge_list(text)) == text


def test_edge_list_comments_and_blanks():
    text = "# a triangle\n3\n\n1 2 # first edge\n1 3\n2 3\n"
    assert graphs.parse_edge_list(text) == Graph.complete(3)


def test_edge_list_parse_errors():
    with pytest.raises(ParseError):
        graphs.parse_edge_list("")
    with pytest.raises(ParseError) as err:
        graphs.parse_edge_list("3\n2 1\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        graphs.parse_edge_list("3\n1 4\n")
    with pytest.raises(ParseError):
        graphs.parse_edge_list("3\n1 2\n1 2\n")
    with pytest.raises(ParseError):
        graphs.parse_edge_list("x\n")


def test_dot_export():
    g = Graph.from_edges(3, [(1, 2)])
    assert graphs.to_dot(g) == "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n}\n"


def test_graphs_hashable_and_immutable():
    g = Graph.path(3)
    assert len({g, Graph.path(3), Graph.empty(3)}) == 2
    with pytest.raises(AttributeError):
        g.n = 5
