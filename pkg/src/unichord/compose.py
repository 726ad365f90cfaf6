"""Graph construction: fixed graphs, gluing operations O0-O3, generators.

The gluing operations are the inverses of the three decompositions.
Starting from basic graphs and applying them always stays inside the
class, which is what :func:`random_c_graph` relies on.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Any, Optional

from .graph import Graph, articulation_points, connected_components, is_connected

__all__ = [
    "CompositionError",
    "PETERSEN_LABELS",
    "make_petersen",
    "make_heawood",
    "make_cycle",
    "make_path",
    "make_complete",
    "make_complete_bipartite",
    "make_theta",
    "op0_union",
    "op1_glue",
    "op2_glue",
    "op3_glue",
    "two_subdivision",
    "one_subdivision",
    "build_basic",
    "random_basic_spec",
    "random_c_graph",
    "replay_build_log",
    "make_no_transversal_fixture",
    "find_hole_through_edges",
    "hole_chord_mutation",
]

# a1..a5 -> 0..4, b1..b5 -> 5..9
PETERSEN_LABELS = ("a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5")


class CompositionError(ValueError):
    """A gluing precondition failed; ``code`` names which one."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def make_petersen() -> Graph:
    a = [0, 1, 2, 3, 4]
    b = [5, 6, 7, 8, 9]
    edges = [(a[i], a[(i + 1) % 5]) for i in range(5)]
    edges += [(b[i], b[(i + 1) % 5]) for i in range(5)]
    # a1b1, a2b4, a3b2, a4b5, a5b3
    edges += [(a[0], b[0]), (a[1], b[3]), (a[2], b[1]), (a[3], b[4]), (a[4], b[2])]
    return Graph(10, edges)


def make_heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    chords = [(1, 10), (2, 7), (3, 12), (4, 9), (5, 14), (6, 11), (8, 13)]
    edges += [(i - 1, j - 1) for i, j in chords]
    return Graph(14, edges)


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def make_path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def make_complete(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def make_complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def make_theta(*lengths: int) -> Graph:
    """Nodes 0 and 1 joined by internally disjoint paths of the given lengths."""
    if sum(1 for k in lengths if k == 1) > 1:
        raise ValueError("at most one path of length 1 in a simple graph")
    edges = []
    n = 2
    for k in lengths:
        if k < 1:
            raise ValueError("path lengths must be positive")
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Graph(n, edges)


def _disjoint(g1: Graph, drop1: set[int], g2: Graph, drop2: set[int]):
    """Lay out ``g1 - drop1`` then ``g2 - drop2``; return maps and edge list."""
    map1 = {}
    for v in range(g1.n):
        if v not in drop1:
            map1[v] = len(map1)
    map2 = {}
    base = len(map1)
    for v in range(g2.n):
        if v not in drop2:
            map2[v] = base + len(map2)
    edges = [(map1[u], map1[v]) for u, v in g1.edges() if u in map1 and v in map1]
    edges += [(map2[u], map2[v]) for u, v in g2.edges() if u in map2 and v in map2]
    return map1, map2, edges


def op0_union(g1: Graph, g2: Graph) -> Graph:
    _, _, edges = _disjoint(g1, set(), g2, set())
    return Graph(g1.n + g2.n, edges)


def _check_node(g: Graph, v: int, which: str) -> None:
    if not 0 <= v < g.n:
        raise CompositionError("out-of-range", f"{which} node {v} not in graph on {g.n} nodes")


def op1_glue(g1: Graph, u: int, g2: Graph, w: int) -> Graph:
    """Identify ``u`` and ``w`` into a new last node adjacent to both neighbourhoods."""
    _check_node(g1, u, "first")
    _check_node(g2, w, "second")
    map1, map2, edges = _disjoint(g1, {u}, g2, {w})
    v = len(map1) + len(map2)
    edges += [(v, map1[x]) for x in sorted(g1.adj[u])]
    edges += [(v, map2[x]) for x in sorted(g2.adj[w])]
    return Graph(v + 1, edges)


def op2_glue(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Delete ``u`` and ``v`` and make their neighbourhoods complete to each other."""
    _check_node(g1, u, "first")
    _check_node(g2, v, "second")
    for g, x, which in ((g1, u, "first"), (g2, v, "second")):
        nb = g.adj[x]
        if len(nb) < 2:
            raise CompositionError("small-neighborhood", f"{which} node {x} has fewer than 2 neighbours")
        if not g.is_stable(nb):
            raise CompositionError("unstable-neighborhood", f"{which} node {x} has a non-stable neighbourhood")
    map1, map2, edges = _disjoint(g1, {u}, g2, {v})
    edges += [(map1[p], map2[q]) for p in sorted(g1.adj[u]) for q in sorted(g2.adj[v])]
    return Graph(len(map1) + len(map2), edges)


def op3_preconditions(g1: Graph, u: int, g2: Graph, v: int, flip: bool = False) -> Optional[CompositionError]:
    """Return the first violated O3 precondition, or ``None`` when legal."""
    for g, x, which in ((g1, u, "first"), (g2, v, "second")):
        if not 0 <= x < g.n:
            return CompositionError("out-of-range", f"{which} node {x} not in graph on {g.n} nodes")
        if len(g.adj[x]) != 2:
            return CompositionError("not-degree-two", f"{which} node {x} has degree {len(g.adj[x])}")
        p, q = sorted(g.adj[x])
        if q in g.adj[p]:
            return CompositionError("adjacent-neighbors", f"neighbours of {which} node {x} are adjacent")
        if x in articulation_points(g):
            return CompositionError("is-1-cutset", f"{which} node {x} is a 1-cutset")
    u1, u2 = sorted(g1.adj[u])
    v1, v2 = sorted(g2.adj[v])
    if flip:
        v1, v2 = v2, v1
    if (g1.degree(u1) - 1) + (g2.degree(v1) - 1) < 3:
        return CompositionError("degree-sum-1", "first attachment pair has degree sum below 3")
    if (g1.degree(u2) - 1) + (g2.degree(v2) - 1) < 3:
        return CompositionError("degree-sum-2", "second attachment pair has degree sum below 3")
    return None


def op3_glue(g1: Graph, u: int, g2: Graph, v: int, flip: bool = False) -> Graph:
    """Reverse of a proper 2-cutset decomposition.

    ``u`` and ``v`` are degree-2 nodes; their (sorted) neighbours
    ``u1, u2`` and ``v1, v2`` are merged pairwise into new nodes ``w1``
    and ``w2``.  ``flip`` pairs ``u1`` with ``v2`` instead.
    """
    err = op3_preconditions(g1, u, g2, v, flip)
    if err is not None:
        raise err
    u1, u2 = sorted(g1.adj[u])
    v1, v2 = sorted(g2.adj[v])
    if flip:
        v1, v2 = v2, v1
    map1, map2, edges = _disjoint(g1, {u, u1, u2}, g2, {v, v1, v2})
    w1 = len(map1) + len(map2)
    w2 = w1 + 1
    for w, x, y in ((w1, u1, v1), (w2, u2, v2)):
        edges += [(w, map1[z]) for z in sorted(g1.adj[x]) if z != u]
        edges += [(w, map2[z]) for z in sorted(g2.adj[y]) if z != v]
    return Graph(w2 + 1, edges)


def two_subdivision(g: Graph) -> Graph:
    """Replace every edge ``uv`` by a path ``u a b v`` through two new nodes."""
    edges = []
    nxt = g.n
    for u, v in g.edges():
        a, b = nxt, nxt + 1
        nxt += 2
        edges += [(u, a), (a, b), (b, v)]
    return Graph(nxt, edges)


def one_subdivision(g: Graph) -> Graph:
    edges = []
    nxt = g.n
    for u, v in g.edges():
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return Graph(nxt, edges)


# --- basic graph specs -------------------------------------------------------

_BASIC_KINDS = ("clique", "hole", "s2b", "petersen_sub", "heawood_sub")


def build_basic(spec: dict[str, Any]) -> Graph:
    """Materialise a basic-graph spec produced by :func:`random_basic_spec`."""
    kind = spec["kind"]
    if kind == "clique":
        return make_complete(spec["size"])
    if kind == "hole":
        return make_cycle(spec["length"])
    if kind == "s2b":
        core = Graph(spec["core_n"], [tuple(e) for e in spec["core_edges"]])
        return one_subdivision(core)
    if kind in ("petersen_sub", "heawood_sub"):
        full = make_petersen() if kind == "petersen_sub" else make_heawood()
        keep = spec["keep"]
        sub, _ = full.delete_nodes(set(range(full.n)) - set(keep))
        return sub
    raise ValueError(f"unknown basic kind {kind!r}")


def _random_min_degree3_core(rng: random.Random, k: int) -> list[tuple[int, int]]:
    # Hamiltonian cycle plus chords until every node has degree >= 3.
    perm = list(range(k))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[(i + 1) % k]))) for i in range(k)}
    deg = [2] * k
    low = [v for v in range(k) if deg[v] < 3]
    guard = 0
    while low and guard < 100 * k:
        guard += 1
        x = rng.choice(low)
        y = rng.randrange(k)
        e = tuple(sorted((x, y)))
        if x == y or e in edges:
            continue
        edges.add(e)
        deg[x] += 1
        deg[y] += 1
        low = [v for v in range(k) if deg[v] < 3]
    extra = rng.randrange(0, k // 2 + 1)
    for _ in range(extra):
        x, y = rng.sample(range(k), 2)
        edges.add(tuple(sorted((x, y))))
    return sorted(edges)


def _random_connected_keep(rng: random.Random, full: Graph, min_keep: int, max_keep: int) -> list[int]:
    size = rng.randint(min_keep, max_keep)
    for _ in range(50):
        keep = sorted(rng.sample(range(full.n), size))
        sub, _ = full.delete_nodes(set(range(full.n)) - set(keep))
        if is_connected(sub):
            return keep
    # grow a BFS ball, which is always connected
    start = rng.randrange(full.n)
    seen = [start]
    queue = deque([start])
    while queue and len(seen) < size:
        x = queue.popleft()
        for y in sorted(full.adj[x]):
            if y not in seen and len(seen) < size:
                seen.append(y)
                queue.append(y)
    return sorted(seen)


def random_basic_spec(
    rng: random.Random, kind: str, max_nodes: int = 40, max_clique_size: int = 6
) -> dict[str, Any]:
    """Draw a random connected basic graph of the given kind (as a spec)."""
    max_nodes = max(max_nodes, 2)
    if kind == "clique":
        return {"kind": "clique", "size": rng.randint(2, max(2, min(max_clique_size, max_nodes)))}
    if kind == "hole":
        hi = max(7, min(14, max_nodes))
        return {"kind": "hole", "length": rng.randint(7, hi)}
    if kind == "s2b":
        # one-subdivision of a simple graph with min degree 3: n = k + m_core
        k = rng.randint(4, max(4, min(8, max_nodes // 3)))
        core = _random_min_degree3_core(rng, k)
        return {"kind": "s2b", "core_n": k, "core_edges": [list(e) for e in core]}
    if kind == "petersen_sub":
        keep = _random_connected_keep(rng, make_petersen(), 5, 10)
        return {"kind": "petersen_sub", "keep": keep}
    if kind == "heawood_sub":
        keep = _random_connected_keep(rng, make_heawood(), 6, 14)
        return {"kind": "heawood_sub", "keep": keep}
    raise ValueError(f"unknown basic kind {kind!r}")


# --- random growth -----------------------------------------------------------

DEFAULT_BASIC_MIX = {"clique": 1.0, "hole": 1.0, "s2b": 1.0, "petersen_sub": 1.0, "heawood_sub": 1.0}
DEFAULT_OP_MIX = {"O1": 1.0, "O2": 1.0, "O3": 1.0}


def _pick(rng: random.Random, mix: dict[str, float]) -> str:
    keys = sorted(k for k, w in mix.items() if w > 0)
    return rng.choices(keys, weights=[mix[k] for k in keys])[0]


def _stable_nbhd(g: Graph, x: int) -> bool:
    return len(g.adj[x]) >= 2 and g.is_stable(g.adj[x])


def _not_cut_local(g: Graph, x: int, budget: int = 400) -> bool:
    """True when the two neighbours of degree-2 node ``x`` stay connected without it.

    The search is bounded; an inconclusive search counts as "cut".
    """
    p, q = sorted(g.adj[x])
    seen = {p, x}
    queue = deque([p])
    while queue and len(seen) < budget:
        y = queue.popleft()
        for z in g.adj[y]:
            if z == q:
                return True
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return False


def _o3_candidate(g: Graph, x: int) -> bool:
    if len(g.adj[x]) != 2:
        return False
    p, q = sorted(g.adj[x])
    return q not in g.adj[p] and _not_cut_local(g, x)


def _sample_nodes(rng: random.Random, g: Graph, tries: int) -> list[int]:
    if g.n <= tries:
        nodes = list(range(g.n))
        rng.shuffle(nodes)
        return nodes
    return [rng.randrange(g.n) for _ in range(tries)]


def _apply(g: Graph, entry: dict[str, Any]) -> Graph:
    b = build_basic(entry["basic"])
    op = entry["op"]
    if op == "O0":
        return op0_union(g, b)
    if op == "O1":
        return op1_glue(g, entry["u"], b, entry["w"])
    if op == "O2":
        return op2_glue(g, entry["u"], b, entry["v"])
    if op == "O3":
        return op3_glue(g, entry["u"], b, entry["v"], entry.get("flip", False))
    raise ValueError(f"unknown op {op!r}")


def random_c_graph(
    seed: int,
    target_size: int,
    basic_mix: Optional[dict[str, float]] = None,
    op_mix: Optional[dict[str, float]] = None,
    connected: bool = True,
    max_retries: int = 60,
    max_clique_size: int = 6,
) -> tuple[Graph, list[dict[str, Any]]]:
    """Grow a graph of the class from random basic pieces and legal gluings.

    Returns ``(graph, log)``; :func:`replay_build_log` rebuilds the same
    graph from ``log`` without any randomness.  Growth stops once the
    graph has at least ``target_size`` nodes, or after ``max_retries``
    consecutive failed gluing attempts.
    """
    rng = random.Random(seed)
    basic_mix = dict(DEFAULT_BASIC_MIX if basic_mix is None else basic_mix)
    op_mix = dict(DEFAULT_OP_MIX if op_mix is None else op_mix)
    if connected:
        op_mix.pop("O0", None)
    target_size = max(1, target_size)

    spec = None
    for _ in range(100):
        spec = random_basic_spec(rng, _pick(rng, basic_mix), target_size, max_clique_size)
        if build_basic(spec).n <= max(target_size, 2):
            break
    g = build_basic(spec)
    log: list[dict[str, Any]] = [{"op": "start", "basic": spec}]
    failures = 0
    while g.n < target_size and failures < max_retries:
        op = _pick(rng, op_mix)
        room = target_size - g.n
        spec = random_basic_spec(rng, _pick(rng, basic_mix), room + 4, max_clique_size)
        b = build_basic(spec)
        entry: Optional[dict[str, Any]] = None
        if op == "O0":
            entry = {"op": "O0", "basic": spec}
        elif op == "O1":
            entry = {"op": "O1", "basic": spec, "u": rng.randrange(g.n), "w": rng.randrange(b.n)}
        elif op == "O2":
            us = [x for x in _sample_nodes(rng, g, 30) if _stable_nbhd(g, x)]
            vs = [x for x in range(b.n) if _stable_nbhd(b, x)]
            if us and vs:
                entry = {"op": "O2", "basic": spec, "u": us[0], "v": rng.choice(vs)}
        elif op == "O3":
            us = [x for x in _sample_nodes(rng, g, 30) if _o3_candidate(g, x)]
            vs = [x for x in range(b.n) if _o3_candidate(b, x)]
            rng.shuffle(vs)
            for u in us[:5]:
                for v in vs:
                    flip = rng.random() < 0.5
                    u1, u2 = sorted(g.adj[u])
                    v1, v2 = sorted(b.adj[v])
                    if flip:
                        v1, v2 = v2, v1
                    if (g.degree(u1) + b.degree(v1) - 2 >= 3) and (g.degree(u2) + b.degree(v2) - 2 >= 3):
                        entry = {"op": "O3", "basic": spec, "u": u, "v": v, "flip": flip}
                        break
                if entry:
                    break
        if entry is None:
            failures += 1
            continue
        failures = 0
        g = _apply(g, entry)
        log.append(entry)
    return g, log


def replay_build_log(log: list[dict[str, Any]]) -> Graph:
    if not log or log[0]["op"] != "start":
        raise ValueError("build log must begin with a 'start' entry")
    g = build_basic(log[0]["basic"])
    for entry in log[1:]:
        g = _apply(g, entry)
    return g


def make_no_transversal_fixture() -> Graph:
    """Square with a Petersen graph glued by O2 at each of its four nodes.

    The result is four copies of the Petersen graph minus a node whose
    degree-2 triples are joined cyclically; it has no stable set meeting
    every cycle.
    """
    petersen = make_petersen()
    g = make_cycle(4)
    # Gluing at a square node deletes it; the other square nodes keep
    # their relative order at the front, so the next one is always id 0.
    for _ in range(4):
        g = op2_glue(g, 0, petersen, 0)
    return g


# --- holes and mutations -------------------------------------------------------


def find_hole_through_edges(g: Graph, min_length: int = 5, rng: Optional[random.Random] = None) -> Optional[list[int]]:
    """Return a hole of length >= ``min_length`` as a cyclic node list, if one is found.

    For an edge ``uv``, a shortest ``u``-``v`` path avoiding that edge closes
    a chordless cycle.  Edges are tried in random order when ``rng`` is given.
    """
    edges = g.edges()
    if rng is not None:
        rng.shuffle(edges)
    for u, v in edges:
        prev = {u: -1}
        queue = deque([u])
        while queue and v not in prev:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in prev and not (x == u and y == v):
                    prev[y] = x
                    queue.append(y)
        if v not in prev:
            continue
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        if len(path) >= min_length:
            return path
    return None


def hole_chord_mutation(g: Graph, rng: random.Random, min_length: int = 5) -> Optional[tuple[Graph, list[int], tuple[int, int]]]:
    """Add one chord to a hole of length >= 5; the hole plus chord has a unique chord."""
    hole = find_hole_through_edges(g, min_length, rng)
    if hole is None:
        return None
    k = len(hole)
    i = rng.randrange(k)
    j = (i + rng.randint(2, k - 2)) % k
    x, y = hole[i], hole[j]
    return g.add_edges([(x, y)]), hole, (min(x, y), max(x, y))
