"""graph6 codec, edge-list format, and DOT export."""

from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coeven import (
    Graph6Error,
    VertexSet,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    new_graph,
    parse_edgelist,
    parse_graph6,
    path_graph,
    to_dot,
    to_edgelist,
    to_graph6,
)


def reference_graph6(g) -> str:
    """Independent encoder: networkx."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.to_graph6_bytes(nxg, header=False).decode().strip()


class TestGraph6:
    def test_k1_encodes_to_at_sign(self):
        assert to_graph6(complete_graph(1)) == "@"

    def test_known_string_round_trip(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert to_graph6(g) == "D?{"

    def test_empty_input_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("")

    def test_bad_size_byte_rejected(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("\x1f")
        assert exc.value.position == 0

    def test_long_form_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~??")

    def test_truncated_rejected(self):
        full = to_graph6(cycle_graph(8))
        with pytest.raises(Graph6Error):
            parse_graph6(full[:-1])

    def test_trailing_data_rejected(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(to_graph6(cycle_graph(4)) + "?")
        assert exc.value.position > 0

    def test_bad_data_byte_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("C" + "\x20")

    def test_oversize_graph_rejected(self):
        with pytest.raises(ValueError):
            to_graph6(new_graph(63, []))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_reference_encoder_exhaustively(self, n):
        for g in enumerate_connected(n):
            assert to_graph6(g) == reference_graph6(g)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip_small(self, n):
        for g in enumerate_connected(n):
            assert parse_graph6(to_graph6(g)) == g

    def test_round_trip_all_n7(self):
        count = 0
        for g in enumerate_connected(7):
            assert parse_graph6(to_graph6(g)) == g
            count += 1
        assert count == 1866256

    @settings(derandomize=True, max_examples=150)
    @given(
        st.integers(1, 20).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(
                    st.sampled_from(list(itertools.combinations(range(n), 2))) if n > 1 else st.nothing(),
                    unique=True,
                ),
            )
        )
    )
    def test_round_trip_random(self, ne):
        n, edges = ne
        g = new_graph(n, edges)
        assert parse_graph6(to_graph6(g)) == g
        assert to_graph6(g) == reference_graph6(g)


class TestEdgeList:
    def test_round_trip(self):
        g = cycle_graph(5)
        assert parse_edgelist(to_edgelist(g)) == g

    def test_format_shape(self):
        text = to_edgelist(path_graph(3))
        assert text.splitlines()[0] == "3 2"
        assert len(text.splitlines()) == 3

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            parse_edgelist("3\n0 1\n")

    def test_wrong_edge_count_rejected(self):
        with pytest.raises(ValueError):
            parse_edgelist("3 2\n0 1\n")


class TestDot:
    def test_p2_highlight(self):
        text = to_dot(path_graph(2), VertexSet.of(2, [0]))
        node_lines = [l for l in text.splitlines() if l.strip().startswith(("0", "1"))]
        assert len([l for l in node_lines if "--" not in l]) == 2
        assert sum("filled" in l for l in text.splitlines()) == 1
        assert sum("--" in l for l in text.splitlines()) == 1

    def test_empty_graph(self):
        text = to_dot(new_graph(0, []))
        assert text.startswith("graph G {")
        assert text.rstrip().endswith("}")
        assert "--" not in text

    def test_c3_edges_once(self):
        text = to_dot(cycle_graph(3))
        edge_lines = [l for l in text.splitlines() if "--" in l]
        assert len(edge_lines) == 3
        assert len(set(edge_lines)) == 3

    def test_highlight_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            to_dot(path_graph(2), VertexSet.of(3, [0]))
