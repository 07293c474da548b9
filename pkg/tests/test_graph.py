import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphbell import (
    EdgeListParseError,
    Graph,
    GraphFamily,
    InvalidGraphError,
    bridges,
    build_family,
    connected_components,
    from_edges,
    induced_subgraph,
    is_connected,
    is_tree,
    local_complement,
    parse_edge_list,
    parse_graph6,
    render_edge_list,
)
from helpers import connected_graphs, graphs


class TestGraphInvariants:
    def test_rejects_self_loop(self):
        with pytest.raises(InvalidGraphError):
            Graph(2, (0b10 | 0b01, 0b01))

    def test_rejects_asymmetry(self):
        with pytest.raises(InvalidGraphError):
            Graph(2, (0b10, 0b00))

    def test_rejects_bits_beyond_n(self):
        with pytest.raises(InvalidGraphError):
            Graph(2, (0b100, 0b000))

    def test_rejects_bad_size(self):
        with pytest.raises(InvalidGraphError):
            Graph(0, ())
        with pytest.raises(InvalidGraphError):
            Graph(32, tuple([0] * 32))

    def test_from_edges_duplicates_idempotent(self):
        assert from_edges(3, [(0, 1), (1, 0), (0, 1)]) == from_edges(3, [(0, 1)])


class TestFamilies:
    def test_star3_is_path3_relabeled(self):
        st3 = build_family(GraphFamily.STAR, 3)
        assert st3.edges() == [(0, 1), (0, 2)]
        lc3 = build_family(GraphFamily.LINEAR_CLUSTER, 3)
        assert sorted(st3.degree(v) for v in range(3)) == sorted(lc3.degree(v) for v in range(3))

    def test_fc5_has_ten_edges(self):
        assert build_family(GraphFamily.FULLY_CONNECTED, 5).edge_count() == 10

    def test_rc3_equals_fc3(self):
        assert build_family(GraphFamily.RING_CLUSTER, 3) == build_family(
            GraphFamily.FULLY_CONNECTED, 3
        )

    def test_too_small(self):
        for fam in GraphFamily:
            with pytest.raises(InvalidGraphError):
                build_family(fam, 1)

    @pytest.mark.parametrize("fam", GraphFamily)
    @pytest.mark.parametrize("n", range(2, 11))
    def test_every_family_member_valid_and_connected(self, fam, n):
        g = build_family(fam, n)
        assert g.n == n
        assert is_connected(g)


class TestEdgeListParsing:
    def test_path(self):
        assert parse_edge_list("3\n0 1\n1 2") == build_family(GraphFamily.LINEAR_CLUSTER, 3)

    def test_single_edge(self):
        g = parse_edge_list("2\n0 1")
        assert g.edges() == [(0, 1)]

    def test_self_loop_rejected(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("3\n0 0")

    def test_out_of_range_rejected(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("3\n0 3")

    def test_comments_and_blanks_ignored(self):
        text = "# a path\n\n3\n# edge one\n0 1\n1 2\n"
        assert parse_edge_list(text) == build_family(GraphFamily.LINEAR_CLUSTER, 3)

    def test_duplicate_edges_idempotent(self):
        assert parse_edge_list("3\n0 1\n0 1\n1 2") == parse_edge_list("3\n0 1\n1 2")

    def test_garbage_rejected(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("three\n0 1")
        with pytest.raises(EdgeListParseError):
            parse_edge_list("3\n0 1 2")
        with pytest.raises(EdgeListParseError):
            parse_edge_list("")

    @given(graphs(max_n=8))
    def test_render_parse_round_trip(self, g):
        assert parse_edge_list(render_edge_list(g)) == g


class TestGraph6:
    def test_round_trip_against_networkx(self):
        nx = pytest.importorskip("networkx")
        for fam in GraphFamily:
            for n in (2, 5, 7):
                g = build_family(fam, n)
                nx_graph = nx.Graph()
                nx_graph.add_nodes_from(range(n))
                nx_graph.add_edges_from(g.edges())
                encoded = nx.to_graph6_bytes(nx_graph, header=False).decode().strip()
                assert parse_graph6(encoded) == g

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_").n == 2

    def test_invalid_rejected(self):
        with pytest.raises(EdgeListParseError):
            parse_graph6("")
        with pytest.raises(EdgeListParseError):
            parse_graph6("A")  # truncated


class TestLocalComplement:
    def test_star_center_gives_clique(self):
        st5 = build_family(GraphFamily.STAR, 5)
        assert local_complement(st5, 0) == build_family(GraphFamily.FULLY_CONNECTED, 5)

    def test_small_neighborhood_is_noop(self):
        lc3 = build_family(GraphFamily.LINEAR_CLUSTER, 3)
        assert local_complement(lc3, 0) == lc3  # degree-1 vertex

    def test_out_of_range(self):
        with pytest.raises(InvalidGraphError):
            local_complement(build_family(GraphFamily.STAR, 3), 3)

    @given(graphs(max_n=8), st.data())
    def test_involution_and_validity(self, g, data):
        v = data.draw(st.integers(0, g.n - 1))
        once = local_complement(g, v)
        assert once.n == g.n
        assert local_complement(once, v) == g


class TestBridges:
    def test_path_all_bridges(self):
        lc5 = build_family(GraphFamily.LINEAR_CLUSTER, 5)
        assert bridges(lc5) == lc5.edges()

    def test_ring_has_none(self):
        assert bridges(build_family(GraphFamily.RING_CLUSTER, 5)) == []

    def test_two_triangles_joined(self):
        g = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        assert bridges(g) == [(2, 3)]

    @given(graphs(min_n=2, max_n=7))
    @settings(max_examples=60)
    def test_non_bridge_removal_keeps_component_count(self, g):
        bridge_set = set(bridges(g))
        base = len(connected_components(g))
        for i, j in g.edges():
            adj = list(g.adj)
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
            comps = len(connected_components(Graph(g.n, tuple(adj))))
            if (i, j) in bridge_set:
                assert comps == base + 1
            else:
                assert comps == base


class TestInducedSubgraph:
    def test_clique_restriction(self):
        fc5 = build_family(GraphFamily.FULLY_CONNECTED, 5)
        sub, labels = induced_subgraph(fc5, 0b10101)
        assert sub == build_family(GraphFamily.FULLY_CONNECTED, 3)
        assert labels == [0, 2, 4]

    def test_path_prefix(self):
        lc5 = build_family(GraphFamily.LINEAR_CLUSTER, 5)
        sub, _ = induced_subgraph(lc5, 0b00111)
        assert sub == build_family(GraphFamily.LINEAR_CLUSTER, 3)

    def test_ring_nonadjacent_pair(self):
        rc5 = build_family(GraphFamily.RING_CLUSTER, 5)
        sub, _ = induced_subgraph(rc5, 0b00101)
        assert sub.edge_count() == 0

    def test_empty_rejected(self):
        with pytest.raises(InvalidGraphError):
            induced_subgraph(build_family(GraphFamily.STAR, 3), 0)


class TestComponentsAndTrees:
    def test_path_is_tree(self):
        assert is_tree(build_family(GraphFamily.LINEAR_CLUSTER, 7))

    def test_ring_is_not(self):
        assert not is_tree(build_family(GraphFamily.RING_CLUSTER, 7))

    def test_star_is_tree(self):
        assert is_tree(build_family(GraphFamily.STAR, 9))

    def test_components_of_disjoint_union(self):
        g = from_edges(5, [(0, 1), (2, 3)])
        assert connected_components(g) == [0b00011, 0b01100, 0b10000]

    @given(connected_graphs())
    def test_connected_strategy_is_connected(self, g):
        assert is_connected(g)
