"""Acceptance criteria 1-10.

Each test records a one-line PASS/FAIL summary, printed in the
"acceptance criteria" section at the end of the pytest run.  Suites 1-4
are built once and shared; criteria 5-8 are checked in a single pass
over every accepted graph of those suites.

The full run takes roughly ten minutes, most of it in the exhaustive
sweep of criterion 1.
"""

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from checks import ACCEPTANCE, tree_problems
from unichord.chromatic import max_clique, optimal_coloring
from unichord.compose import (
    hole_chord_mutation,
    make_heawood,
    make_no_transversal_fixture,
    make_petersen,
    op1_glue,
    random_c_graph,
    two_subdivision,
)
from unichord.decomp import recognize
from unichord.graph import Graph, contains_triangle, induced_subgraph
from unichord.oracle import (
    CHROMATIC_LIMIT,
    CYCLE_LIMIT,
    chromatic_number_bruteforce,
    has_unique_chord_cycle,
    max_clique_bruteforce,
    validate_coloring,
    validate_third_color,
)

TITLES = {
    1: "oracle equivalence, exhaustive (n <= 6 all, n = 7 connected)",
    2: "oracle equivalence, 10,000 random graphs",
    3: "structure-theorem closure and mutation sensitivity",
    4: "Petersen and Heawood families",
    5: "colouring optimality",
    6: "third-colour validity",
    7: "maximum clique",
    8: "decomposition tree shape",
    9: "performance budget, n = 20,000 (soft)",
    10: "no-transversal fixture",
}


def record(k, ok, detail, soft=False):
    status = "PASS" if ok else ("FLAG" if soft else "FAIL")
    ACCEPTANCE[k] = f"criterion {k:2d}  {status}  {TITLES[k]}: {detail}"


@dataclass
class Suite:
    total: int = 0
    accepted: list = field(default_factory=list)
    disagreements: list = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)


# --- suite 1: every labelled graph ------------------------------------------------


def labeled_graphs(n, connected_only=False):
    """Every labelled graph on ``n`` nodes, in edge-mask order.

    Adjacency bitmasks are assembled from per-chunk lookup tables so that
    the two million graphs on seven nodes can be produced quickly.
    """
    pairs = list(itertools.combinations(range(n), 2))
    chunks = [pairs[i : i + 7] for i in range(0, len(pairs), 7)]
    tables = []
    for chunk in chunks:
        table = []
        for bits in range(1 << len(chunk)):
            row = [0] * n
            for i, (u, v) in enumerate(chunk):
                if bits >> i & 1:
                    row[u] |= 1 << v
                    row[v] |= 1 << u
            table.append(row)
        tables.append(table)
    sets = [frozenset(i for i in range(n) if b >> i & 1) for b in range(1 << n)]
    full = (1 << n) - 1
    nodes = range(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        k = mask
        for table in tables:
            row = table[k & 127]
            k >>= 7
            for i in nodes:
                adj[i] |= row[i]
        if connected_only:
            seen = frontier = 1
            while frontier:
                nxt = 0
                for i in nodes:
                    if frontier >> i & 1:
                        nxt |= adj[i]
                frontier = nxt & ~seen
                seen |= nxt
            if seen != full:
                continue
        yield Graph.from_adjacency([sets[a] for a in adj])


def _compare(suite, g):
    suite.total += 1
    ours = bool(recognize(g))
    truth = has_unique_chord_cycle(g) is None
    if ours != truth:
        suite.disagreements.append(g)
    if ours:
        suite.accepted.append(g)


@lru_cache(maxsize=None)
def suite1():
    s = Suite()
    start = time.perf_counter()
    for n in range(7):
        for g in labeled_graphs(n):
            _compare(s, g)
    s.notes["upto6"] = s.total
    for g in labeled_graphs(7, connected_only=True):
        _compare(s, g)
    s.seconds = time.perf_counter() - start
    return s


# --- suite 2: Erdos-Renyi ------------------------------------------------------------


@lru_cache(maxsize=None)
def suite2():
    s = Suite()
    start = time.perf_counter()
    probs = (0.1, 0.2, 0.3, 0.4, 0.5)
    for i in range(10_000):
        rng = random.Random(i)
        n = 8 + i % 9
        p = probs[(i // 9) % 5]
        _compare(s, Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]))
    s.seconds = time.perf_counter() - start
    return s


# --- suite 3: generated graphs and their mutations ------------------------------------


@lru_cache(maxsize=None)
def suite3():
    s = Suite()
    start = time.perf_counter()
    generated = []
    for seed in range(1000):
        g, _ = random_c_graph(seed, 5 + (seed * 37) % 196)
        generated.append(g)
        s.total += 1
        if recognize(g):
            s.accepted.append(g)
        else:
            s.disagreements.append(("generated rejected", seed))
        if g.n <= CYCLE_LIMIT and has_unique_chord_cycle(g) is not None:
            s.disagreements.append(("oracle rejects generated", seed))
    mutated = small = 0
    seed = 0
    while mutated < 1000:
        out = hole_chord_mutation(generated[seed % 1000], random.Random(seed))
        seed += 1
        if out is None:
            continue
        h, _, _ = out
        mutated += 1
        if recognize(h):
            s.disagreements.append(("mutant accepted", seed - 1))
        if h.n <= CYCLE_LIMIT:
            small += 1
            if has_unique_chord_cycle(h) is None:
                s.disagreements.append(("oracle accepts mutant", seed - 1))
    s.notes.update(
        generated=len(generated),
        max_n=max(g.n for g in generated),
        small_generated=sum(g.n <= CYCLE_LIMIT for g in generated),
        mutated=mutated,
        small_mutated=small,
    )
    s.seconds = time.perf_counter() - start
    return s


# --- suite 4: Petersen and Heawood ----------------------------------------------------


@lru_cache(maxsize=None)
def suite4():
    s = Suite()
    for base in (make_petersen(), make_heawood()):
        for k in range(3):
            for drop in itertools.combinations(range(base.n), k):
                g, _ = base.delete_nodes(drop)
                _compare(s, g)
    p = make_petersen()
    s.notes["members"] = s.total
    extra = [e for e in itertools.combinations(range(10), 2) if not p.has_edge(*e)]
    s.notes["extra_edges"] = len(extra)
    for e in extra:
        g = p.add_edges([e])
        s.total += 1
        if recognize(g) or has_unique_chord_cycle(g) is None:
            s.disagreements.append(("Petersen plus edge accepted", e))
    return s


# --- one pass over every accepted graph: criteria 5 to 8 ------------------------------


@lru_cache(maxsize=None)
def member_checks():
    graphs = [g for s in (suite1(), suite2(), suite3(), suite4()) for g in s.accepted]
    c = Counter()
    bad = {k: [] for k in (5, 6, 7, 8)}

    def trace(h, pair, tc):
        c["third_colours"] += 1
        if not validate_third_color(h, tc.S, tc.strong, pair.R, pair.T):
            bad[6].append((h, pair, tc))

    start = time.perf_counter()
    for g in graphs:
        c["graphs"] += 1
        col = optimal_coloring(g, trace)
        k = col.num_colors
        omega = len(max_clique_bruteforce(g, limit=None))
        if not validate_coloring(g, col.colors) or not (k == omega or k <= 3) or k > omega + 1:
            bad[5].append(g)
        if g.n <= CHROMATIC_LIMIT:
            c["small"] += 1
            if k != chromatic_number_bruteforce(g):
                bad[5].append(g)
            if len(max_clique(g)) != omega:
                bad[7].append(g)
        res = recognize(g)
        for comp, tree in res.trees:
            c["trees"] += 1
            c["type2"] += sum(node.kind == "type2" for node in tree.nodes)
            h, _ = induced_subgraph(g, comp)
            if tree_problems(tree, h):
                bad[8].append(g)
    c["seconds"] = round(time.perf_counter() - start)
    return c, bad


# --- the criteria ------------------------------------------------------------------------


def test_criterion_01_exhaustive_oracle():
    s = suite1()
    ok = not s.disagreements and s.seconds <= 600
    record(
        1,
        ok,
        f"{s.notes['upto6']} graphs on <= 6 nodes + {s.total - s.notes['upto6']} connected on 7, "
        f"{len(s.disagreements)} disagreements, {len(s.accepted)} in C, {s.seconds:.0f} s (target 600 s)",
    )
    assert not s.disagreements
    assert s.seconds <= 600


def test_criterion_02_random_oracle():
    s = suite2()
    ok = s.total >= 10_000 and not s.disagreements
    record(2, ok, f"{s.total} graphs, {len(s.disagreements)} disagreements, {len(s.accepted)} in C, {s.seconds:.0f} s")
    assert ok


def test_criterion_03_closure_and_mutation():
    s = suite3()
    n = s.notes
    ok = not s.disagreements and n["generated"] == 1000 and n["mutated"] == 1000
    record(
        3,
        ok,
        f"{len(s.accepted)}/{n['generated']} generated accepted (max n {n['max_n']}), "
        f"{n['mutated']} mutants, {len(s.disagreements)} failures; oracle checked "
        f"{n['small_generated']} generated + {n['small_mutated']} mutants with <= 16 nodes",
    )
    assert ok, s.disagreements[:5]


def test_criterion_04_fixed_graphs():
    s = suite4()
    ok = not s.disagreements and len(s.accepted) == s.notes["members"] == 56 + 106 and s.notes["extra_edges"] == 30
    record(
        4,
        ok,
        f"{len(s.accepted)}/{s.notes['members']} Petersen/Heawood subgraphs in C, "
        f"{s.notes['extra_edges']} Petersen+edge graphs rejected by both sides, {len(s.disagreements)} failures",
    )
    assert ok, s.disagreements[:5]


def test_criterion_05_colouring():
    c, bad = member_checks()
    ok = not bad[5]
    record(
        5,
        ok,
        f"{c['graphs']} accepted graphs coloured, {c['small']} with <= 11 nodes matched against brute-force chi, "
        f"{len(bad[5])} failures",
    )
    assert ok


def test_criterion_06_third_colours():
    c, bad = member_checks()
    ok = not bad[6] and c["third_colours"] > 0
    record(6, ok, f"{c['third_colours']} third colours validated, {len(bad[6])} invalid")
    assert ok


def test_criterion_07_clique():
    c, bad = member_checks()
    rng = random.Random(7)
    n = 20_000
    edges = set()
    while len(edges) < 100_000:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    g = two_subdivision(Graph(n, edges))
    start = time.perf_counter()
    q = max_clique(g)
    seconds = time.perf_counter() - start
    big_ok = len(q) == 2 and g.has_edge(*q) and seconds < 1.0
    ok = not bad[7] and big_ok
    record(
        7,
        ok,
        f"{c['small']} graphs with <= 11 nodes match brute force ({len(bad[7])} mismatches); "
        f"2-subdivision with {g.n} nodes / {g.m} edges gives size {len(q)} in {seconds:.2f} s",
    )
    assert not bad[7]
    assert big_ok


def test_criterion_08_tree_shape():
    c, bad = member_checks()
    ok = not bad[8]
    record(
        8,
        ok,
        f"{c['trees']} trees checked (size <= 4n+8, split validity, triangle-free heredity, "
        f"six-predicate purity under {c['type2']} type-2 nodes), {len(bad[8])} failures",
    )
    assert ok


def _big_c_graph():
    # ten independently grown pieces joined by O1; clique-heavy so that m is about 2n
    mix = {"clique": 4.0, "hole": 1.0, "s2b": 1.0, "petersen_sub": 1.0, "heawood_sub": 1.0}
    rng = random.Random(9)
    g = None
    for i in range(10):
        piece, _ = random_c_graph(100 + i, 2000, basic_mix=mix, op_mix={"O1": 3.0, "O2": 1.0, "O3": 1.0}, max_clique_size=10)
        g = piece if g is None else op1_glue(g, rng.randrange(g.n), piece, rng.randrange(piece.n))
    return g


def test_criterion_09_performance():
    g = _big_c_graph()
    start = time.perf_counter()
    res = recognize(g)
    seconds = time.perf_counter() - start
    fast = seconds < 10.0
    record(9, bool(res) and fast, f"n = {g.n}, m = {g.m}, recognised in {seconds:.1f} s (budget 10 s)", soft=bool(res))
    assert res  # correctness is required; the time budget is only flagged


def test_criterion_10_fixture():
    g = make_no_transversal_fixture()
    # four Petersen-minus-node copies keep 15 - 3 edges each; four complete 3x3 joins add 9 each
    expected_edges = 4 * (15 - 3) + 4 * 9
    col = optimal_coloring(g)
    ok = (
        g.n == 36
        and g.m == expected_edges == 84
        and bool(recognize(g))
        and contains_triangle(g) is None
        and col.num_colors == 3
        and validate_coloring(g, col.colors)
    )
    record(10, ok, f"{g.n} nodes, {g.m} edges (expected {expected_edges}), {col.num_colors} colours")
    assert ok
