import pytest
from hypothesis import given

from conftest import digraphs
from twinblocks.errors import ParseError
from twinblocks.graph import (
    FIG1_ARCS,
    Digraph,
    directed_cycle,
    induced_subgraph,
    labeled_arcs,
    parse_edge_list,
    random_digraph,
    random_tsc_digraph,
    remove_vertex,
    to_edge_list,
    underlying_undirected,
)

LOWER = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15]


def test_parse_named_vertices():
    G = parse_edge_list("a b\nb a\n")
    assert G.n == 2
    assert G.arcs == {(0, 1), (1, 0)}
    assert G.labels == ("a", "b")


def test_parse_drops_loops_and_duplicates():
    stats = {}
    G = parse_edge_list("1 1\n1 2\n1 2\n", stats)
    assert G.n == 2 and G.arcs == {(0, 1)}
    assert stats == {"loops_dropped": 1, "duplicates_dropped": 1}


def test_parse_skips_comments_and_blanks():
    G = parse_edge_list("# header\n\n  x y  \n# trailing\n")
    assert G.labels == ("x", "y") and G.m == 1


@pytest.mark.parametrize("text, line", [("a b c\n", 1), ("a b\n\nlonely\n", 3)])
def test_parse_error_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_parse_fig1_edge_list(fig1):
    text = "".join(f"{u} {v}\n" for u, v in FIG1_ARCS)
    stats = {}
    G = parse_edge_list(text, stats)
    assert (G.n, G.m) == (20, 28)
    assert stats["duplicates_dropped"] == 1
    assert labeled_arcs(G) == labeled_arcs(fig1)


def test_fig1_shape(fig1):
    assert (fig1.n, fig1.m) == (20, 28)
    assert fig1.labels[0] == "1" and fig1.vertex(20) == 19
    pairs = {frozenset((fig1.labels[u], fig1.labels[v])) for u, v in fig1.antiparallel_pairs()}
    assert pairs == {frozenset(p) for p in [("7", "17"), ("12", "19"), ("12", "13")]}


def test_digraph_rejects_bad_arcs():
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(0, 2)}))


def test_remove_vertex_from_cycle():
    H = remove_vertex(directed_cycle(3), 1)
    assert H.n == 2
    assert H.origin == (0, 2)
    assert H.arcs == {(1, 0)}  # arc 2->0 reindexed


def test_remove_vertex_fig1(fig1):
    H = remove_vertex(fig1, fig1.vertex(13))
    assert (H.n, H.m) == (19, 24)
    assert "13" not in H.labels
    gone = {("12", "13"), ("13", "12"), ("13", "16"), ("14", "13")}
    assert not gone & labeled_arcs(H)


def test_remove_isolated_vertex_keeps_arcs():
    G = Digraph(4, frozenset({(0, 1), (1, 2)}))
    H = remove_vertex(G, 3)
    assert H.arcs == G.arcs


def test_remove_vertex_out_of_range():
    with pytest.raises(ValueError):
        remove_vertex(directed_cycle(3), 3)


def test_induced_subgraph_lower_half(fig1):
    H = induced_subgraph(fig1, [fig1.vertex(k) for k in LOWER])
    assert (H.n, H.m) == (11, 13)
    assert H.antiparallel_pairs() == []


def test_induced_subgraph_empty_and_range(fig1):
    assert induced_subgraph(fig1, []).n == 0
    with pytest.raises(ValueError):
        induced_subgraph(fig1, [25])


def test_underlying_undirected():
    assert underlying_undirected(Digraph(2, frozenset({(0, 1), (1, 0)}))).edges == {(0, 1)}
    assert underlying_undirected(directed_cycle(3)).edges == {(0, 1), (1, 2), (0, 2)}


def test_underlying_fig1(fig1):
    assert underlying_undirected(fig1).m == 25


def test_random_digraph_contract():
    assert random_digraph(5, 0, 3).m == 0
    assert random_digraph(5, 20, 7) == random_digraph(5, 20, 7)
    G = random_digraph(8, 20, 1)
    assert G.m == 20 and all(u != v for u, v in G.arcs)
    with pytest.raises(ValueError):
        random_digraph(3, 7, 0)


def test_random_tsc_digraph_size():
    G = random_tsc_digraph(10, 5, seed=2)
    assert G.n == 10 and G.m == 15
    with pytest.raises(ValueError):
        random_tsc_digraph(2, 0, 0)


@given(digraphs())
def test_remove_vertex_arc_count(G):
    for v in range(G.n):
        H = remove_vertex(G, v)
        assert v not in H.origin
        assert H.m == G.m - G.degree(v)


@given(digraphs())
def test_underlying_edge_count(G):
    assert underlying_undirected(G).m == G.m - len(G.antiparallel_pairs())


@given(digraphs())
def test_parse_serialize_roundtrip(G):
    # isolated vertices cannot be written as edge lines and indices follow
    # first appearance, so the identity holds on labelled arcs
    H = parse_edge_list(to_edge_list(G))
    assert labeled_arcs(H) == labeled_arcs(G)
    assert set(H.labels) == {G.labels[v] for v in range(G.n) if G.degree(v)}
    assert labeled_arcs(parse_edge_list(to_edge_list(H))) == labeled_arcs(H)


@given(digraphs())
def test_induced_on_all_vertices_is_identity(G):
    H = induced_subgraph(G, range(G.n))
    assert H == G and H.origin == tuple(range(G.n))
