import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unichord.compose import make_cycle, make_heawood, make_path, make_petersen
from unichord.graph import (
    Graph,
    GraphParseError,
    articulation_points,
    biconnected_blocks,
    biconnected_components,
    bipartition,
    connected_components,
    contains_square,
    contains_triangle,
    induced_subgraph,
    parse_edge_list,
    to_dot,
    to_edge_list,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def bowtie():
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def diamond():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


# --- parsing ---------------------------------------------------------------


def test_parse_triangle():
    g = parse_edge_list("3 3\n0 1\n1 2\n2 0")
    assert g.n == 3 and g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_parse_isolated_node():
    g = parse_edge_list("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_self_loop_names_line():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("2 1\n0 0")


@pytest.mark.parametrize(
    "text",
    ["", "x 1", "2 1\n0 2", "2 1\n0", "2 1\n0 1 5", "3 2\n0 1", "2 1\n-1 0"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphParseError):
        parse_edge_list(text)


def test_duplicate_lines_collapse():
    g = parse_edge_list("2 2\n0 1\n1 0\n")
    assert g.m == 1


@given(graphs())
def test_edge_list_round_trip(g):
    h = parse_edge_list(to_edge_list(g))
    assert h == g
    assert to_edge_list(h) == to_edge_list(g)


def test_dot_is_lexicographic():
    dot = to_dot(Graph(3, [(2, 1), (1, 0)]))
    assert dot.index("0 -- 1") < dot.index("1 -- 2")


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


# --- induced subgraphs and components ---------------------------------------


def test_induced_path_in_c5():
    h, remap = induced_subgraph(make_cycle(5), [1, 2, 3])
    assert h == make_path(3)
    assert remap == (1, 2, 3)


def test_induced_outer_petersen_is_c5():
    h, _ = induced_subgraph(make_petersen(), range(5))
    assert h.m == 5 and all(h.degree(v) == 2 for v in range(5))
    assert connected_components(h) == [[0, 1, 2, 3, 4]]


def test_induced_empty():
    h, remap = induced_subgraph(make_petersen(), [])
    assert h.n == 0 and remap == ()


def test_induced_out_of_range():
    with pytest.raises(ValueError):
        induced_subgraph(make_cycle(4), [0, 9])


def test_components():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert [len(c) for c in connected_components(two_triangles)] == [3, 3]
    assert len(connected_components(make_petersen())) == 1
    assert connected_components(Graph(0)) == []


# --- cut structure -----------------------------------------------------------


def test_articulation_examples():
    assert articulation_points(make_path(3)) == [1]
    assert articulation_points(make_cycle(5)) == []
    assert articulation_points(bowtie()) == [2]
    assert len(biconnected_components(bowtie())) == 2


@settings(max_examples=300)
@given(graphs())
def test_articulation_points_match_deletion(g):
    base = len(connected_components(g))
    expected = []
    for v in range(g.n):
        h, _ = g.delete_nodes([v])
        if len(connected_components(h)) > base:
            expected.append(v)
    assert articulation_points(g) == expected


@settings(max_examples=300)
@given(graphs())
def test_biconnected_components_partition_edges(g):
    comps = biconnected_components(g)
    flat = sorted(e for c in comps for e in c)
    assert flat == g.edges()
    # two edges share a component iff some cycle passes through both, so
    # each multi-edge component must stay connected after removing any node
    for c in comps:
        nodes = sorted({x for e in c for x in e})
        h, _ = induced_subgraph(g, nodes)
        assert h.m == len(c) or len(c) == 1
        if len(nodes) > 2:
            assert articulation_points(h) == []
    blocks = sorted((sorted(b), m) for b, m in biconnected_blocks(g))
    assert blocks == sorted((sorted({x for e in c for x in e}), len(c)) for c in comps)


# --- bipartition, triangles, squares -----------------------------------------


def _has_odd_cycle(g):
    # brute force: an odd closed walk exists iff some node reaches itself with odd parity
    for s in range(g.n):
        frontier, seen = {(s, 0)}, {(s, 0)}
        while frontier:
            nxt = {(w, 1 - p) for v, p in frontier for w in g.adj[v]} - seen
            seen |= nxt
            frontier = nxt
        if (s, 1) in seen:
            return True
    return False


def test_bipartition_examples():
    sides = bipartition(make_cycle(6))
    assert sides == ([0, 2, 4], [1, 3, 5])
    assert bipartition(make_cycle(5)) is None
    a, b = bipartition(make_heawood())
    assert len(a) == len(b) == 7


@settings(max_examples=300)
@given(graphs())
def test_bipartition_iff_no_odd_cycle(g):
    sides = bipartition(g)
    assert (sides is None) == _has_odd_cycle(g)
    if sides is not None:
        assert sorted(sides[0] + sides[1]) == list(range(g.n))
        assert g.is_stable(sides[0]) and g.is_stable(sides[1])


def test_triangle_square_examples():
    assert contains_triangle(diamond()) is not None
    assert contains_square(diamond()) is None
    assert contains_square(make_cycle(4)) is not None
    assert contains_triangle(make_petersen()) is None
    assert contains_square(make_petersen()) is None


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_square_matches_four_subset_scan(g):
    expected = any(
        induced_subgraph(g, q)[0].m == 4 and all(induced_subgraph(g, q)[0].degree(i) == 2 for i in range(4))
        for q in itertools.combinations(range(g.n), 4)
    )
    w = contains_square(g)
    assert (w is not None) == expected
    if w is not None:
        h, _ = induced_subgraph(g, w)
        assert h.m == 4 and all(h.degree(i) == 2 for i in range(4))
    t = contains_triangle(g)
    if t is not None:
        a, b, c = t
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
