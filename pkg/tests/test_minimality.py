import pytest
from hypothesis import given, settings, strategies as st

from minconn.connectivity import (
    edge_connectivity,
    is_k_connected,
    is_k_edge_connected,
    vertex_connectivity,
)
from minconn.errors import InvalidParams, TooSmall
from minconn.graphs import (
    Graph,
    MultiGraph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    ladder_graph,
    path_graph,
)
from minconn.minimality import (
    MinimalityClass,
    check_class,
    classify,
    is_edge_min_k_connected,
    is_edge_min_k_edge_connected,
    is_vertex_min_k_connected,
    is_vertex_min_k_edge_connected,
)
from minconn.constructions import band_graph, multipath


@st.composite
def graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, mask) if b])


def brute_edge_min_k_connected(g, k):
    if not is_k_connected(g, k):
        return False
    return all(not is_k_connected(g.delete_edge(u, v), k) for u, v in g.edges())


def brute_vertex_min_k_connected(g, k):
    if k == 1:
        return False
    if not is_k_connected(g, k):
        return False
    return all(not is_k_connected(g.delete_vertex(v)[0], k) for v in range(g.n))


def brute_edge_min_k_edge_connected(g, k):
    if not is_k_edge_connected(g, k):
        return False
    if isinstance(g, MultiGraph):
        return all(
            not is_k_edge_connected(g.delete_one_edge(u, v), k)
            for u, v in g.edge_classes()
        )
    return all(not is_k_edge_connected(g.delete_edge(u, v), k) for u, v in g.edges())


def brute_vertex_min_k_edge_connected(g, k):
    if k == 1:
        return False
    if not is_k_edge_connected(g, k):
        return False
    return all(
        g.n - 1 < 2 or not is_k_edge_connected(g.delete_vertex(v)[0], k)
        for v in range(g.n)
    )


BRUTES = {
    MinimalityClass.EDGE_MIN_CONN: brute_edge_min_k_connected,
    MinimalityClass.VERTEX_MIN_CONN: brute_vertex_min_k_connected,
    MinimalityClass.EDGE_MIN_EDGE_CONN: brute_edge_min_k_edge_connected,
    MinimalityClass.VERTEX_MIN_EDGE_CONN: brute_vertex_min_k_edge_connected,
}


class TestAgainstBruteForce:
    @given(graphs(), st.integers(1, 4))
    @settings(max_examples=150, deadline=None)
    def test_all_predicates(self, g, k):
        for cls, brute in BRUTES.items():
            assert check_class(g, cls, k).holds == brute(g, k), (cls, k, g.edges())

    def test_corpus_k2(self, small_corpus):
        for g in small_corpus:
            for cls, brute in BRUTES.items():
                assert check_class(g, cls, 2).holds == brute(g, 2)

    def test_random_corpus_k3(self, random_corpus):
        for g in random_corpus:
            for cls, brute in BRUTES.items():
                assert check_class(g, cls, 3).holds == brute(g, 3)


class TestKnownMembers:
    def test_cycle_is_everything_at_2(self):
        g = cycle_graph(6)
        rep = classify(g, 2)
        assert [c.value for c in rep.member_classes()] == ["a", "b", "c", "d"]

    def test_complete_graph_class_a(self):
        # K_{k+1} is edge-minimally k-connected: deleting any edge
        # leaves two vertices of degree k-1.
        assert is_edge_min_k_connected(complete_graph(4), 3).holds
        assert is_vertex_min_k_connected(complete_graph(4), 3).holds

    def test_ladders_class_d(self):
        for m in (2, 3, 4, 5):
            lad = ladder_graph(m)
            assert is_vertex_min_k_edge_connected(lad, 2).holds, m

    def test_band_graph_classes(self):
        band = band_graph(3, 2).graph
        assert is_vertex_min_k_connected(band, 3).holds
        assert is_vertex_min_k_edge_connected(band, 3).holds
        assert not is_edge_min_k_connected(band, 3).holds

    def test_trees_are_edge_min_1(self):
        assert is_edge_min_k_connected(path_graph(5), 1).holds
        assert is_edge_min_k_edge_connected(path_graph(5), 1).holds

    def test_k1_vertex_classes_empty(self):
        for g in (path_graph(4), cycle_graph(5), complete_graph(3)):
            assert not is_vertex_min_k_connected(g, 1).holds
            assert not is_vertex_min_k_edge_connected(g, 1).holds

    def test_triangle_is_vertex_min_2_edge_connected(self):
        assert is_vertex_min_k_edge_connected(complete_graph(3), 2).holds

    def test_multipath_class_c_only(self):
        g = multipath(3, 5)
        rep = classify(g, 3)
        assert rep.holds(MinimalityClass.EDGE_MIN_EDGE_CONN)
        assert not rep.holds(MinimalityClass.VERTEX_MIN_EDGE_CONN)

    def test_prism_not_minimal(self):
        # C_3 x K_2 is 3-connected/3-edge-connected but not minimal in
        # any sense at k=2: deleting an edge keeps 2-connectivity.
        g = cartesian_product(cycle_graph(3), complete_graph(2))
        assert not any(classify(g, 2).results[c].holds for c in MinimalityClass)


class TestCertificates:
    @given(graphs(min_n=3, max_n=7), st.integers(1, 3))
    @settings(max_examples=100, deadline=None)
    def test_failure_certificates_check_out(self, g, k):
        for cls in MinimalityClass:
            res = check_class(g, cls, k)
            if res.holds or res.certificate is None:
                continue
            if cls.deletes_edges:
                u, v = res.certificate
                h = g.delete_edge(u, v)
            else:
                h = g.delete_vertex(res.certificate)[0]
            # the certificate deletion keeps the base connectivity
            if cls.uses_edge_connectivity:
                assert is_k_edge_connected(h, k)
            else:
                assert is_k_connected(h, k)

    def test_multigraph_vertex_classes_rejected(self):
        g = MultiGraph(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)])
        with pytest.raises(InvalidParams):
            check_class(g, MinimalityClass.EDGE_MIN_CONN, 2)
        with pytest.raises(InvalidParams):
            check_class(g, MinimalityClass.VERTEX_MIN_CONN, 2)

    def test_too_small(self):
        with pytest.raises(TooSmall):
            classify(Graph(1), 1)


class TestExclusivity:
    def test_higher_connectivity_excludes_minimality(self, small_corpus):
        # A (k+1)-connected graph is never edge- or vertex-minimally
        # k-connected, and similarly for edge connectivity.
        for g in small_corpus:
            k = 2
            if vertex_connectivity(g) > k:
                assert not check_class(g, MinimalityClass.EDGE_MIN_CONN, k).holds
                assert not check_class(g, MinimalityClass.VERTEX_MIN_CONN, k).holds
            if edge_connectivity(g) > k:
                assert not check_class(g, MinimalityClass.EDGE_MIN_EDGE_CONN, k).holds
