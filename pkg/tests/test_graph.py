import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from _gen import multigraph, rng, simple_graph
from speclap.errors import BadOpPairing, BadRank, NotSimple, Unreachable, UnknownVertex
from speclap.families import complete, cycle, path, petersen
from speclap.graph import (
    DirectedEdge,
    Graph,
    adjacency_matrix,
    boundary,
    build_graph,
    degree_profile,
    diameter,
    distance,
    dual,
    from_pairs,
    incidence,
    is_simple,
)
from speclap.spectra import laplacian_spectrum, multiset_distance
from speclap.transmission import identity_system


def to_nx(g: Graph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertex_ids)
    for e in g.dedges:
        if e.id < e.op:
            G.add_edge(e.tail, e.head)
    return G


def test_build_k2():
    g = build_graph({"vertices": [{"id": "a", "rank": 1}, {"id": "b", "rank": 1}],
                     "edges": [{"from": "a", "to": "b"}]})
    assert len(g.dedges) == 2
    assert g.degree == {"a": 1, "b": 1}


def test_loop_counts_twice():
    g = build_graph('{"vertices": [{"id": "v"}], "edges": [{"from": "v", "to": "v"}]}')
    assert g.degree["v"] == 2


def test_build_errors():
    with pytest.raises(UnknownVertex):
        build_graph({"vertices": [{"id": "a"}], "edges": [{"from": "a", "to": "z"}]})
    with pytest.raises(BadRank):
        build_graph({"vertices": [{"id": "a", "rank": 0}], "edges": []})
    with pytest.raises(BadOpPairing):
        Graph((("a", 1), ("b", 1)), (DirectedEdge(0, "a", "b", 1), DirectedEdge(1, "b", "a", 1)))
    with pytest.raises(BadOpPairing):
        # op edge does not reverse the endpoints
        Graph((("a", 1), ("b", 1)), (DirectedEdge(0, "a", "b", 1), DirectedEdge(1, "a", "b", 0)))


def test_degree_profile_examples():
    assert set(degree_profile(cycle(4)).values()) == {(2, 2)}
    loop = from_pairs(["v"], [("v", "v")])
    assert degree_profile(loop)["v"] == (2, 0)
    double = from_pairs(["u", "v"], [("u", "v"), ("u", "v")])
    assert degree_profile(double)["u"] == (2, 1)


def test_distance_examples():
    g = cycle(8)
    assert distance(g, "v0", "v4") == 4
    assert distance(g, "v3", "v3") == 0
    two = from_pairs(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    with pytest.raises(Unreachable):
        distance(two, "a", "c")
    with pytest.raises(UnknownVertex):
        distance(g, "v0", "nope")


def test_diameter_examples():
    assert diameter(cycle(8)) == 4
    assert diameter(complete(4)) == 1
    assert math.isinf(diameter(from_pairs(["a", "b", "c"], [("a", "b")])))


def test_boundary_examples():
    g = cycle(4)
    edges = boundary(g, {"v0", "v1"})
    assert [(e.tail, e.head) for e in edges] == [("v1", "v2"), ("v0", "v3")]
    assert boundary(g, set()) == []
    assert boundary(g, set(g.vertex_ids)) == []
    with pytest.raises(UnknownVertex):
        boundary(g, {"x"})


def test_incidence_examples():
    assert incidence(from_pairs(["a", "b"], [("a", "b")])).tolist() == [[1], [1]]
    g = cycle(3)
    M = incidence(g)
    T = np.diag([g.degree[v] for v in g.vertex_ids])
    assert np.array_equal(M @ M.T, T + adjacency_matrix(g))
    with pytest.raises(NotSimple):
        incidence(from_pairs(["v"], [("v", "v")]))
    with pytest.raises(NotSimple):
        incidence(from_pairs(["a", "b"], [("a", "b"), ("b", "a")]))


@pytest.mark.parametrize("n", range(3, 10))
def test_dual_of_cycle_is_cycle(n):
    g = cycle(n)
    d = dual(g)
    assert sorted(d.degree.values()) == [2] * n
    a = laplacian_spectrum(g, identity_system(g)).values
    b = laplacian_spectrum(d, identity_system(d)).values
    assert multiset_distance(a.real, b.real) < 1e-9


def test_dual_small_cases():
    d = dual(from_pairs(["a", "b"], [("a", "b")]))
    assert len(d) == 1 and len(d.dedges) == 0
    assert set(dual(petersen()).degree.values()) == {4}


def test_dual_is_line_graph():
    r = rng(5)
    for _ in range(20):
        g = simple_graph(r, int(r.integers(2, 8)))
        assert nx.is_isomorphic(to_nx(dual(g)), nx.line_graph(nx.Graph(to_nx(g))))


@given(st.integers(0, 2**32 - 1))
def test_degree_sum_equals_directed_edges(seed):
    g = multigraph(rng(seed))
    assert sum(g.degree.values()) == len(g.dedges)


@given(st.integers(0, 2**32 - 1))
def test_boundary_of_complement_is_op_image(seed):
    r = rng(seed)
    g = multigraph(r)
    A = {v for v in g.vertex_ids if r.random() < 0.5}
    out = boundary(g, A)
    back = boundary(g, set(g.vertex_ids) - A)
    assert sorted(e.op for e in out) == sorted(e.id for e in back)


@given(st.integers(0, 2**32 - 1))
def test_incidence_identities(seed):
    g = simple_graph(rng(seed), int(rng(seed).integers(2, 9)))
    assert is_simple(g)
    M = incidence(g)
    T = np.diag([g.degree[v] for v in g.vertex_ids])
    assert np.array_equal(M @ M.T - T, adjacency_matrix(g))
    assert np.array_equal(M.T @ M - 2 * np.eye(M.shape[1], dtype=int), adjacency_matrix(dual(g)))


def test_distance_is_metric_and_matches_networkx():
    r = rng(11)
    for _ in range(25):
        g = multigraph(r, nmax=8)
        G = to_nx(g)
        vs = g.vertex_ids
        D = {(u, v): distance(g, u, v) for u in vs for v in vs}
        oracle = dict(nx.all_pairs_shortest_path_length(G))
        for (u, v), d in D.items():
            assert d == oracle[u][v] == D[(v, u)]
        for u, v, w in itertools.product(vs, repeat=3):
            assert D[(u, w)] <= D[(u, v)] + D[(v, w)]
        assert diameter(g) == nx.diameter(G)


def test_path_and_complete_shapes():
    assert diameter(path(5)) == 4
    assert set(complete(5).degree.values()) == {4}
