import pytest
from hypothesis import given, strategies as st

from exen.graphs import (
    EdgeListParseError,
    Graph,
    Graph6ParseError,
    clebsch_complement,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    degree_profile,
    disjoint_union,
    empty,
    is_complete_bipartite,
    is_connected,
    is_regular,
    is_star_center,
    make_family,
    matching,
    paley,
    parse_edge_list,
    parse_graph6,
    path,
    random_gnp,
    serialize_graph6,
    star,
    strongly_regular_params,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_empty_order(self):
        with pytest.raises(ValueError):
            Graph(0, frozenset())

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1

    @given(graphs())
    def test_complement_involution(self, g):
        assert g.complement().complement().edges == g.edges

    @given(graphs())
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(g.degrees()) == 2 * g.edge_count


class TestGraph6:
    def test_k2_parses(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges == frozenset({(0, 1)})

    def test_empty3_parses(self):
        g = parse_graph6("B?")
        assert g.n == 3 and g.edge_count == 0

    def test_k2_serializes(self):
        assert serialize_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"

    def test_empty3_serializes(self):
        assert serialize_graph6(empty(3)) == "B?"

    def test_dqc_round_trip(self):
        assert serialize_graph6(parse_graph6("DQc")) == "DQc"

    def test_round_trip_random(self):
        # 1000 seeded random graphs up to n = 20
        import numpy as np

        rng = np.random.default_rng(42)
        for k in range(1000):
            n = int(rng.integers(1, 21))
            g = random_gnp(n, float(rng.random()), rng)
            assert parse_graph6(serialize_graph6(g)).edges == g.edges

    def test_extended_header_round_trip(self):
        g = empty(100)
        s = serialize_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s).n == 100

    def test_truncated_names_offset(self):
        with pytest.raises(Graph6ParseError, match="byte"):
            parse_graph6("D")

    def test_out_of_range_character(self):
        with pytest.raises(Graph6ParseError, match="outside graph6 range"):
            parse_graph6("A!")

    def test_trailing_bytes_rejected(self):
        with pytest.raises(Graph6ParseError, match="trailing"):
            parse_graph6("A__")

    @given(graphs(max_n=9))
    def test_round_trip_property(self, g):
        assert parse_graph6(serialize_graph6(g)).edges == g.edges


class TestEdgeList:
    def test_p3(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_duplicates_collapse(self):
        g = parse_edge_list("2 1\n0 1\n1 0")
        assert g.edge_count == 1

    def test_self_loop_rejected(self):
        with pytest.raises(EdgeListParseError, match="self-loop"):
            parse_edge_list("2 1\n0 0")

    def test_vertex_out_of_range(self):
        with pytest.raises(EdgeListParseError, match="out of range"):
            parse_edge_list("2 1\n0 2")

    def test_non_integer(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("2 1\n0 x")


class TestFamilies:
    def test_complete_bipartite_12_is_p3(self):
        g = complete_bipartite(1, 2)
        assert sorted(g.degrees()) == [1, 1, 2]
        assert is_connected(g)

    def test_complement_c5_degrees(self):
        g = cycle(5).complement()
        assert g.degrees() == [2, 2, 2, 2, 2]

    def test_clebsch_complement_is_srg(self):
        g = clebsch_complement()
        assert g.n == 16 and g.edge_count == 80
        assert strongly_regular_params(g) == (16, 10, 6, 6)

    def test_star_center(self):
        g = star(5)
        assert g.degrees()[0] == 4
        assert is_star_center(g, 0)
        assert not is_star_center(g, 1)

    def test_matching_rejects_odd(self):
        with pytest.raises(ValueError):
            matching(5)

    def test_paley_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            paley(7)

    def test_paley_13_is_regular(self):
        g = paley(13)
        assert is_regular(g) and g.degrees()[0] == 6

    def test_paley_5_is_c5(self):
        assert paley(5).edges == cycle(5).edges

    def test_circulant(self):
        g = make_family("circulant:6,1,2")
        assert is_regular(g) and g.degrees()[0] == 4

    def test_gnp_deterministic(self):
        assert random_gnp(12, 0.5, 7).edges == random_gnp(12, 0.5, 7).edges

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            make_family("moebius:5")

    def test_family_specs(self):
        assert make_family("path:3").edge_count == 2
        assert make_family("star:4").n == 4
        assert make_family("complete:4").edge_count == 6
        assert make_family("matching:6").edge_count == 3


class TestDegreeProfile:
    def test_p3(self):
        p = degree_profile(path(3))
        assert p.degrees == (1, 2, 1)
        assert (p.delta_min, p.delta_max, p.edge_count) == (1, 2, 2)
        assert p.forgotten == 10

    def test_p4_forgotten(self):
        assert degree_profile(path(4)).forgotten == 18

    def test_empty4(self):
        p = degree_profile(empty(4))
        assert p.degrees == (0, 0, 0, 0) and p.forgotten == 0

    def test_n_hat(self):
        assert degree_profile(complete(5)).n_hat == 4

    @given(graphs())
    def test_cross_formula_and_handshake(self, g):
        p = degree_profile(g)
        # degree_profile already cross-checks both forgotten-index formulas
        assert sum(p.degrees) == 2 * p.edge_count
        assert p.forgotten == sum(d**3 for d in p.degrees)


class TestComponents:
    def test_2k2(self):
        comps = connected_components(matching(4))
        assert comps == [[0, 1], [2, 3]]

    def test_k5(self):
        assert connected_components(complete(5)) == [[0, 1, 2, 3, 4]]

    def test_empty3(self):
        assert connected_components(empty(3)) == [[0], [1], [2]]

    def test_disjoint_union(self):
        g = disjoint_union(complete(3), path(2))
        comps = connected_components(g)
        assert [len(c) for c in comps] == [3, 2]


class TestPredicates:
    def test_complete_bipartite_recognizer(self):
        assert is_complete_bipartite(complete_bipartite(2, 3))
        assert is_complete_bipartite(path(2))  # K_{1,1}
        assert not is_complete_bipartite(path(4))
        assert not is_complete_bipartite(matching(4))  # disconnected

    def test_srg_rejects_paths(self):
        assert strongly_regular_params(path(4)) is None

    def test_srg_paley(self):
        assert strongly_regular_params(paley(5)) == (5, 2, 0, 1)
