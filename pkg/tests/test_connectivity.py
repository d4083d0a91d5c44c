import pytest
from hypothesis import given, settings, strategies as st

from minconn.connectivity import (
    brute_force_connectivity,
    edge_connectivity,
    edge_connectivity_by_subdivision,
    is_k_connected,
    is_k_edge_connected,
    max_disjoint_paths,
    min_cut_containing_edge,
    min_edge_cut,
    min_separator_containing,
    min_vertex_separator,
    vertex_connectivity,
)
from minconn.errors import NoSeparatorThroughVertex, TooSmall
from minconn.graphs import (
    Graph,
    MultiGraph,
    complete_graph,
    cycle_graph,
    path_graph,
)


@st.composite
def graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, mask) if b])


@st.composite
def multigraphs(draw, min_n=2, max_n=6, max_mult=3):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mults = draw(
        st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs))
    )
    return MultiGraph(n, [(u, v, m) for (u, v), m in zip(pairs, mults) if m])


class TestOracleAgreement:
    @given(graphs())
    @settings(max_examples=300, deadline=None)
    def test_flow_matches_brute_force(self, g):
        bk, bl = brute_force_connectivity(g)
        assert vertex_connectivity(g) == bk
        assert edge_connectivity(g) == bl

    @given(multigraphs())
    @settings(max_examples=150, deadline=None)
    def test_multigraph_lambda_matches_brute_force(self, g):
        _, bl = brute_force_connectivity(g)
        assert edge_connectivity(g) == bl
        assert edge_connectivity_by_subdivision(g) == bl

    def test_corpus_agreement(self, small_corpus):
        for g in small_corpus:
            assert (vertex_connectivity(g), edge_connectivity(g)) == brute_force_connectivity(g)


class TestWhitney:
    @given(graphs())
    @settings(max_examples=200, deadline=None)
    def test_kappa_le_lambda_le_delta(self, g):
        assert vertex_connectivity(g) <= edge_connectivity(g) <= g.min_degree()


class TestKnownValues:
    def test_complete(self):
        assert vertex_connectivity(complete_graph(5)) == 4
        assert edge_connectivity(complete_graph(5)) == 4

    def test_cycle(self):
        assert vertex_connectivity(cycle_graph(6)) == 2
        assert edge_connectivity(cycle_graph(6)) == 2

    def test_path(self):
        assert vertex_connectivity(path_graph(5)) == 1

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert vertex_connectivity(g) == 0
        assert edge_connectivity(g) == 0

    def test_too_small(self):
        with pytest.raises(TooSmall):
            vertex_connectivity(Graph(1))

    def test_is_k_predicates(self):
        g = cycle_graph(5)
        assert is_k_connected(g, 2) and not is_k_connected(g, 3)
        assert is_k_edge_connected(g, 2) and not is_k_edge_connected(g, 3)

    def test_complete_graph_k_connected_needs_more_vertices(self):
        # K_4 counts as 3-connected but not 4-connected: no deletion
        # argument applies, the order is just too small.
        assert is_k_connected(complete_graph(4), 3)
        assert not is_k_connected(complete_graph(4), 4)

    def test_multigraph_edge_connectivity(self):
        g = MultiGraph(3, [(0, 1, 3), (1, 2, 2), (0, 2, 1)])
        assert edge_connectivity(g) == 3


class TestSeparators:
    def test_min_separator_is_separator(self, small_corpus):
        for g in small_corpus:
            if g.n < 3 or not g.is_connected():
                continue
            sep = min_vertex_separator(g)
            if sep is None:  # complete graphs have none
                assert vertex_connectivity(g) == g.n - 1
                continue
            assert len(sep.vertices) == vertex_connectivity(g)
            assert len(sep.sides) >= 2
            rest, keep = g.delete_vertices(sep.vertices)
            assert not rest.is_connected()

    def test_min_edge_cut_disconnects(self, small_corpus):
        for g in small_corpus:
            if not g.is_connected():
                continue
            cut = min_edge_cut(g)
            assert cut.size == edge_connectivity(g)
            h = g
            for u, v in cut.edges:
                h = h.delete_edge(u, v)
            assert not h.is_connected()

    def test_separator_through_vertex(self):
        g = cycle_graph(6)
        sep = min_separator_containing(g, 0)
        assert 0 in sep.vertices and len(sep.vertices) == 2

    def test_separator_through_vertex_none_on_complete(self):
        assert min_separator_containing(complete_graph(4), 0) is None

    def test_cut_containing_edge(self):
        g = cycle_graph(6)
        cut = min_cut_containing_edge(g, (0, 1))
        assert (0, 1) in cut.edges and cut.size == 2

    def test_multigraph_cut_containing_edge(self):
        g = MultiGraph(4, [(0, 1, 2), (1, 2, 1), (2, 3, 2), (3, 0, 1)])
        cut = min_cut_containing_edge(g, (1, 2))
        assert (1, 2) in cut.edges
        assert cut.size == 2  # (1,2) and (3,0), both multiplicity 1


class TestDisjointPaths:
    @given(graphs(min_n=4, max_n=7), st.data())
    @settings(max_examples=100, deadline=None)
    def test_menger_duality_vertex(self, g, data):
        a = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=2))
        b_pool = sorted(set(range(g.n)) - a)
        if not b_pool:
            return
        b = data.draw(st.sets(st.sampled_from(b_pool), min_size=1, max_size=2))
        res = max_disjoint_paths(g, sorted(a), sorted(b), mode="vertex")
        # paths are pairwise internally disjoint and connect the sides
        seen = set()
        for p in res.paths:
            assert p[0] in a and p[-1] in b
            inner = set(p[1:-1])
            assert not (inner & seen)
            seen |= inner

    def test_vertex_paths_on_cycle(self):
        g = cycle_graph(6)
        res = max_disjoint_paths(g, [0], [3], mode="vertex")
        assert res.count == 2
        assert res.separator is not None and len(res.separator.vertices) == 2

    def test_edge_paths_on_cycle(self):
        g = cycle_graph(6)
        res = max_disjoint_paths(g, [0], [3], mode="edge")
        assert res.count == 2

    def test_separator_not_exempt_can_use_endpoints(self):
        # With endpoints not exempt the two leaves of a path are split
        # by any single inner vertex, and even by a side vertex itself.
        g = path_graph(5)
        res = max_disjoint_paths(g, [0], [4], mode="vertex", endpoint_exempt=False)
        assert res.count == 1
        assert res.separator is not None and len(res.separator.vertices) == 1
