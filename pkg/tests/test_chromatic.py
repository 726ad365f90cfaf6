import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unichord.chromatic import (
    NotInCError,
    admissible_pairs,
    classify_pair,
    max_clique,
    optimal_coloring,
    strong_third_color_basic,
    strong_third_color_type2,
    third_color,
    third_color_petersen,
)
from unichord.compose import (
    make_complete,
    make_cycle,
    make_heawood,
    make_no_transversal_fixture,
    make_path,
    make_petersen,
    make_theta,
    op0_union,
    op1_glue,
    random_c_graph,
)
from unichord.decomp import PetersenSub, PreconditionError, build_proper_tree, classify_basic, recognize
from unichord.graph import Graph, induced_subgraph, is_connected
from unichord.oracle import (
    chromatic_number_bruteforce,
    max_clique_bruteforce,
    validate_coloring,
    validate_third_color,
)

A1, A2, A3, A4, A5, B1, B2, B3, B4, B5 = range(10)


def bowtie():
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


class Recorder:
    def __init__(self):
        self.records = []

    def __call__(self, g, pair, tc):
        self.records.append((g, pair, tc))

    def all_valid(self):
        return all(validate_third_color(g, tc.S, tc.strong, pair.R, pair.T) for g, pair, tc in self.records)


# --- admissible pairs ------------------------------------------------------------


def test_pair_counts():
    assert len(admissible_pairs(make_petersen(), 0)) == 2
    assert len(admissible_pairs(make_cycle(5), 0)) == 8
    case1 = admissible_pairs(make_cycle(5), 0)[0]
    assert case1.case_tag == 1 and case1.R == (0,) and case1.T == (1, 4)
    with pytest.raises(ValueError):
        admissible_pairs(make_cycle(5), 5)


def test_pairs_next_to_triangle_drop_overlaps():
    # in a triangle N[w] contains u, so case 4 (T = {u}, R = N[w]) vanishes
    tags = sorted(p.case_tag for p in admissible_pairs(make_complete(3), 0))
    assert tags == [1, 2, 3, 3, 5, 5]


@pytest.mark.parametrize("g", [make_cycle(7), make_petersen(), make_theta(2, 3, 3), make_path(5)])
def test_classify_pair_round_trip(g):
    for v in range(g.n):
        for p in admissible_pairs(g, v):
            assert not set(p.R) & set(p.T)
            found = classify_pair(g, p.R, p.T)
            assert found is not None and set(found.R) == set(p.R) and set(found.T) == set(p.T)
    assert classify_pair(g, [0], []) is None or g.degree(0) == 0


# --- third colours of basic graphs ----------------------------------------------------


def test_long_hole_case2_takes_node_outside_r():
    c7 = make_cycle(7)
    pair = admissible_pairs(c7, 0)[1]
    tc = strong_third_color_basic(c7, pair, classify_basic(c7))
    assert len(tc.S) == 1 and tc.S[0] not in pair.R
    assert validate_third_color(c7, tc.S, True, pair.R, pair.T)


def test_heawood_case1_is_side_minus_r():
    h = make_heawood()
    pair = admissible_pairs(h, 0)[0]
    tc = strong_third_color_basic(h, pair, classify_basic(h))
    assert set(pair.T) <= set(tc.S) and len(tc.S) == 7
    assert validate_third_color(h, tc.S, True, pair.R, pair.T)


def test_petersen_minus_node_case1():
    # delete b5 (node 9); a1's neighbours a2, a5, b1 all survive
    g, remap = induced_subgraph(make_petersen(), range(9))
    basic = classify_basic(g)
    assert isinstance(basic, PetersenSub) and not basic.is_full
    pair = admissible_pairs(g, 0)[0]
    tc = strong_third_color_basic(g, pair, basic)
    assert validate_third_color(g, tc.S, True, pair.R, pair.T)


def test_every_proper_petersen_subgraph_pair():
    p = make_petersen()
    checked = 0
    for k in range(5, 10):
        for keep in itertools.combinations(range(10), k):
            g, _ = induced_subgraph(p, keep)
            basic = classify_basic(g) if is_connected(g) else None
            if not isinstance(basic, PetersenSub):
                continue
            for v in range(g.n):
                for pair in admissible_pairs(g, v):
                    tc = strong_third_color_basic(g, pair, basic)
                    assert validate_third_color(g, tc.S, True, pair.R, pair.T)
                    checked += 1
    assert checked > 1000


def test_basic_lemma_preconditions():
    with pytest.raises(PreconditionError):
        strong_third_color_basic(make_petersen(), admissible_pairs(make_petersen(), 0)[0], classify_basic(make_petersen()))
    with pytest.raises(PreconditionError):
        strong_third_color_basic(make_complete(3), ((0,), (1, 2)), classify_basic(make_complete(3)))
    with pytest.raises(PreconditionError):
        strong_third_color_basic(make_cycle(7), ((0,), (1,)), classify_basic(make_cycle(7)))


def test_full_petersen():
    p = make_petersen()
    tc = third_color_petersen(p, ((A1,), (A2, A5, B1)))
    assert set(tc.S) == {A2, A5, B1} and not tc.strong
    tc = third_color_petersen(p, ((A1, A2, A5, B1), ()))
    assert set(tc.S) == {A3, B3, B5} and tc.strong
    assert validate_third_color(p, tc.S, True, (A1, A2, A5, B1), ())
    for v in range(10):
        for pair in admissible_pairs(p, v):
            tc = third_color_petersen(p, pair)
            assert validate_third_color(p, tc.S, False, pair.R, pair.T)


# --- recursion ------------------------------------------------------------------


def test_type2_theta():
    g = make_theta(3, 3, 3, 3)
    tree = build_proper_tree(g)
    rec = Recorder()
    R = (0,) + tuple(sorted(g.adj[0]))
    tc = strong_third_color_type2(tree.root, (R, ()), rec)
    assert tc.strong and validate_third_color(g, tc.S, True, R, ())
    assert rec.all_valid() and len(rec.records) > 1


def test_third_color_fixture_and_o1():
    fx = make_no_transversal_fixture()
    p = make_petersen()
    glued = op1_glue(p, 0, p, 0)
    for g in (fx, glued):
        tree = build_proper_tree(g)
        rec = Recorder()
        for v in (0, g.n - 1):
            for pair in admissible_pairs(g, v):
                tc = third_color(tree.root, pair, rec)
                assert validate_third_color(g, tc.S, False, pair.R, pair.T)
        assert rec.all_valid()


@pytest.mark.parametrize("seed", range(25))
def test_third_colours_on_generated_graphs(seed):
    g, _ = random_c_graph(seed, 30, basic_mix={"hole": 1, "s2b": 1, "petersen_sub": 1, "heawood_sub": 1})
    tree = build_proper_tree(g)
    rec = Recorder()
    rng = random.Random(seed)
    for v in rng.sample(range(g.n), min(g.n, 6)):
        for pair in admissible_pairs(g, v):
            tc = third_color(tree.root, pair, rec)
            assert validate_third_color(g, tc.S, False, pair.R, pair.T)
    assert rec.all_valid()


# --- colouring and clique -----------------------------------------------------------


def test_colouring_examples():
    assert optimal_coloring(make_complete(4)).num_colors == 4
    assert optimal_coloring(make_petersen()).num_colors == 3
    assert optimal_coloring(make_heawood()).num_colors == 2
    assert optimal_coloring(bowtie()).num_colors == 3
    assert optimal_coloring(Graph(0)).num_colors == 0
    assert optimal_coloring(Graph(3)).num_colors == 1


def test_colouring_refuses_non_members():
    diamond = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    with pytest.raises(NotInCError) as err:
        optimal_coloring(diamond)
    assert err.value.verdict.to_json()["verdict"] == "NOT_IN_C"
    with pytest.raises(NotInCError):
        optimal_coloring(make_petersen().add_edges([(0, 2)]))


def test_colouring_json():
    js = optimal_coloring(make_cycle(5)).to_json()
    assert js["num_colors"] == 3 and set(js["colors"]) == {"0", "1", "2", "3", "4"}


def test_clique_examples():
    p = make_petersen()
    c = max_clique(p)
    assert len(c) == 2 and p.has_edge(*c)
    assert sorted(max_clique(bowtie())) in ([0, 1, 2], [2, 3, 4])
    k5_tail = op1_glue(make_complete(5), 0, make_path(4), 0)
    assert len(max_clique(k5_tail)) == 5
    assert max_clique(Graph(3)) == [0] and max_clique(Graph(0)) == []


@st.composite
def c_graphs(draw):
    seed = draw(st.integers(0, 10**6))
    size = draw(st.integers(2, 11))
    mix = draw(st.sampled_from([None, {"clique": 1.0}, {"hole": 1.0, "petersen_sub": 1.0, "s2b": 1.0}]))
    g, _ = random_c_graph(seed, size, basic_mix=mix)
    return g


@settings(max_examples=200, deadline=None)
@given(c_graphs())
def test_colouring_is_optimal_on_small_members(g):
    col = optimal_coloring(g)
    assert validate_coloring(g, col.colors)
    omega = len(max_clique_bruteforce(g))
    assert len(max_clique(g)) == omega
    if g.n <= 11:
        assert col.num_colors == chromatic_number_bruteforce(g)
    assert col.num_colors == omega or col.num_colors <= 3
    assert col.num_colors <= omega + 1


def test_colouring_disconnected_members():
    g = op0_union(make_complete(4), op0_union(make_petersen(), make_cycle(6)))
    assert recognize(g)
    col = optimal_coloring(g)
    assert col.num_colors == 4 and validate_coloring(g, col.colors)
