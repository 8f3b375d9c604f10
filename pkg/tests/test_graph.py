import pytest

from gabounds.graph import (
    GraphError,
    TrivialGraphError,
    build_graph,
    classify_structure,
    complete_graph,
    connected_components,
    degree_profile,
    disjoint_union,
    edge_partitions,
)


def test_build_path(P3):
    assert P3.n == 3
    assert P3.degrees == (1, 2, 1)
    assert P3.adjacency[1] == {0, 2}


def test_build_dedupes_and_normalises():
    g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_build_complete(K4):
    assert K4.m == 6
    assert set(K4.degrees) == {3}


@pytest.mark.parametrize(
    "n, edges, fragment",
    [(3, [(0, 0)], "loop"), (3, [(0, 3)], "outside"), (3, [(-1, 2)], "outside")],
)
def test_build_rejects(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment):
        build_graph(n, edges)


def test_graph_constructor_validates():
    from gabounds.graph import Graph

    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (0, 1)))


def test_profile_path(P3):
    p = degree_profile(P3)
    assert (p.delta, p.Delta, p.k, p.n_i, p.m, p.delta1) == (1, 2, 1, (2, 1), 2, 2)


def test_profile_complete(K4):
    p = degree_profile(K4)
    assert (p.delta, p.Delta, p.k, p.n_i, p.m) == (3, 3, 0, (4,), 6)
    assert p.delta1 == 3 and p.m0 == 0


def test_profile_star(K13):
    p = degree_profile(K13)
    assert (p.delta, p.Delta, p.m, p.delta1, p.m0) == (1, 3, 3, 3, 3)
    assert p.n_i == (3, 0, 1)
    assert sum(p.degrees) == 2 * p.m


def test_profile_trivial():
    with pytest.raises(TrivialGraphError, match="trivial"):
        degree_profile(build_graph(3, []))


def test_partitions_path(P3):
    e = edge_partitions(P3)
    assert e.m_ij == ((0, 2), (2, 0))
    assert e.a == (2, 0) and e.b == (0, 2) and e.c == (0, 0)
    assert e.m_tail == (2, 0) and e.m_head == (0, 2)
    assert e.e == (0, 2)
    assert (e.d_min, e.D_max) == (1, 1)


def test_partitions_complete(K4):
    e = edge_partitions(K4)
    assert e.c == (6,) and e.a == (0,) and e.b == (0,)
    assert e.e == (6,)
    assert (e.d_min, e.D_max) == (0, 0)


def test_partitions_k23(K23):
    e = edge_partitions(K23)
    assert e.a == (6, 0) and e.b == (0, 6) and e.c == (0, 0)
    assert e.m_tail == (6, 0) and e.m_head == (0, 6)
    assert e.e == (0, 6)


def test_classify_path(P3):
    c = classify_structure(P3)
    assert c.in_G1 and c.in_G2 and c.in_G3 and c.in_G1_0 and c.in_G2_0
    assert c.biregular and c.biregular_degrees == (1, 2)
    assert c.bipartite_delta_Delta
    assert c.lambda_constant and c.lambda_value == 18
    assert c.star and not c.regular


def test_classify_complete(K4):
    c = classify_structure(K4)
    assert c.regular and c.complete and c.connected
    assert c.lambda_value == 9 * 36
    assert not c.biregular


def test_classify_star(K13):
    c = classify_structure(K13)
    assert c.star and c.biregular_degrees == (1, 3)
    assert c.in_G1_0 and c.in_G2_0


def test_classify_k2_is_complete_and_star():
    c = classify_structure(complete_graph(2))
    assert c.complete and c.star and c.regular and not c.biregular


def test_classify_diamond(diamond):
    c = classify_structure(diamond)
    assert c.in_G1_0 and not c.in_G2_0
    assert c.in_G2 and c.in_G3
    assert not c.lambda_constant


def test_components():
    assert connected_components(build_graph(3, [(0, 1), (1, 2)])) == [frozenset({0, 1, 2})]
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert sorted(len(c) for c in connected_components(g)) == [2, 3]
    assert len(connected_components(complete_graph(4))) == 1


def test_components_regular_flag_on_disjoint_union():
    c = classify_structure(disjoint_union(complete_graph(3), complete_graph(2)))
    assert c.components_regular and not c.regular and not c.connected
