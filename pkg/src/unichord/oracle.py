"""Brute-force ground truth for differential testing.

Nothing here imports the decomposition or colouring code: every check
is a direct unfolding of a definition, run by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .graph import Graph

__all__ = [
    "OracleBudgetError",
    "UniqueChordCycle",
    "has_unique_chord_cycle",
    "induced_holes",
    "chromatic_number_bruteforce",
    "max_clique_bruteforce",
    "validate_third_color",
    "validate_split",
    "validate_coloring",
    "is_forest",
    "is_bipartite",
]

CYCLE_LIMIT = 16
CHROMATIC_LIMIT = 11
CLIQUE_LIMIT = 20
_NUMPY_FROM = 10  # below this, plain Python loops beat array setup


class OracleBudgetError(ValueError):
    """The input is larger than the oracle's enumeration budget."""


@dataclass(frozen=True)
class UniqueChordCycle:
    cycle: tuple[int, ...]  # nodes in cyclic order
    chord: tuple[int, int]

    def to_json(self) -> dict[str, Any]:
        return {"cycle": list(self.cycle), "chord": list(self.chord)}


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


@lru_cache(maxsize=None)
def _subsets_by_size(n: int, min_size: int) -> tuple[int, ...]:
    return tuple(sorted((s for s in range(1 << n) if bin(s).count("1") >= min_size), key=lambda s: (bin(s).count("1"), s)))


@lru_cache(maxsize=None)
def _popcount16() -> np.ndarray:
    x = np.arange(1 << 16, dtype=np.uint32)
    pc = np.zeros(1 << 16, dtype=np.uint8)
    for _ in range(16):
        pc += (x & 1).astype(np.uint8)
        x >>= 1
    return pc


@lru_cache(maxsize=None)
def _order_array(n: int, min_size: int) -> np.ndarray:
    return np.array(_subsets_by_size(n, min_size), dtype=np.uint32)


def _degree_table(adjm: Sequence[int], subsets: np.ndarray) -> np.ndarray:
    """``deg[i, v]`` = neighbours of v inside subset i, or -1 when v is not in it."""
    pc = _popcount16()
    n = len(adjm)
    deg = np.empty((len(subsets), n), dtype=np.int8)
    for v in range(n):
        inside = (subsets >> v) & 1
        d = pc[subsets & np.uint32(adjm[v])].astype(np.int8)
        deg[:, v] = np.where(inside == 1, d, -1)
    return deg


def _walk_cycle(adj_in: dict[int, list[int]], size: int) -> Optional[tuple[int, ...]]:
    """Cyclic order of a 2-regular graph given as adjacency lists, if it is one cycle."""
    start = min(adj_in)
    order = [start]
    prev, cur = start, adj_in[start][0]
    while cur != start:
        order.append(cur)
        a, b = adj_in[cur]
        prev, cur = cur, (b if a == prev else a)
        if len(order) > size:
            return None
    return tuple(order) if len(order) == size else None


def _check_unique_chord(adjm: Sequence[int], s: int) -> Optional[UniqueChordCycle]:
    nodes = [v for v in range(len(adjm)) if s >> v & 1]
    deg3 = []
    for v in nodes:
        d = bin(adjm[v] & s).count("1")
        if d == 3:
            deg3.append(v)
        elif d != 2:
            return None
    if len(deg3) != 2:
        return None
    x, y = deg3
    if not adjm[x] >> y & 1:
        return None
    adj_in = {}
    for v in nodes:
        nb = [w for w in nodes if adjm[v] >> w & 1 and {v, w} != {x, y}]
        adj_in[v] = nb
    cyc = _walk_cycle(adj_in, len(nodes))
    if cyc is None:
        return None
    return UniqueChordCycle(cyc, (x, y))


def has_unique_chord_cycle(g: Graph) -> Optional[UniqueChordCycle]:
    """Find a cycle with exactly one chord by scanning all node subsets.

    A subset ``S`` qualifies when ``G[S]`` has exactly two nodes of degree
    3, they are adjacent, every other node has degree 2, and deleting the
    edge between the two degree-3 nodes leaves one spanning cycle.  The
    smallest such subset (then lowest bitmask) is reported.

    Raises
    ------
    OracleBudgetError
        If ``g`` has more than 16 nodes.
    """
    if g.n > CYCLE_LIMIT:
        raise OracleBudgetError(f"unique-chord oracle is limited to {CYCLE_LIMIT} nodes, got {g.n}")
    if g.n < 4 or g.m < 5:
        return None
    adjm = _masks(g)
    if g.n < _NUMPY_FROM:
        for s in _subsets_by_size(g.n, 4):
            w = _check_unique_chord(adjm, s)
            if w is not None:
                return w
        return None
    subsets = _order_array(g.n, 4)
    deg = _degree_table(adjm, subsets)
    bad = ((deg >= 0) & (deg != 2) & (deg != 3)).any(axis=1)
    three = (deg == 3).sum(axis=1)
    for i in np.flatnonzero(~bad & (three == 2)):
        w = _check_unique_chord(adjm, int(subsets[i]))
        if w is not None:
            return w
    return None


def induced_holes(g: Graph) -> list[tuple[int, ...]]:
    """All chordless cycles of length at least 4, each in cyclic order."""
    if g.n > CYCLE_LIMIT:
        raise OracleBudgetError(f"hole enumeration is limited to {CYCLE_LIMIT} nodes, got {g.n}")
    if g.n < 4:
        return []
    adjm = _masks(g)
    subsets = _order_array(g.n, 4)
    deg = _degree_table(adjm, subsets)
    ok = ((deg == -1) | (deg == 2)).all(axis=1)
    out = []
    for i in np.flatnonzero(ok):
        s = int(subsets[i])
        nodes = [v for v in range(g.n) if s >> v & 1]
        adj_in = {v: [w for w in nodes if adjm[v] >> w & 1] for v in nodes}
        cyc = _walk_cycle(adj_in, len(nodes))
        if cyc is not None:
            out.append(cyc)
    return out


def chromatic_number_bruteforce(g: Graph) -> int:
    """Exact chromatic number by backtracking over colourings with k = 1, 2, ... colours."""
    if g.n > CHROMATIC_LIMIT:
        raise OracleBudgetError(f"chromatic oracle is limited to {CHROMATIC_LIMIT} nodes, got {g.n}")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -len(g.adj[v]))
    color = [0] * g.n

    def fits(i: int, k: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = {color[w] for w in g.adj[v]}
        # a colour beyond used+1 is symmetric to used+1
        for c in range(1, min(k, used + 1) + 1):
            if c not in taken:
                color[v] = c
                if fits(i + 1, k, max(used, c)):
                    return True
        color[v] = 0
        return False

    for k in range(1, g.n + 1):
        if fits(0, k, 0):
            return k
    return g.n


def max_clique_bruteforce(g: Graph, limit: Optional[int] = CLIQUE_LIMIT) -> list[int]:
    """A maximum clique by Bron-Kerbosch with pivoting, returned sorted.

    ``limit=None`` lifts the size budget, which is safe on sparse inputs.
    """
    if limit is not None and g.n > limit:
        raise OracleBudgetError(f"clique oracle is limited to {limit} nodes, got {g.n}")
    best: list[int] = []
    adj = g.adj

    def bk(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = sorted(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            bk(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    bk([], set(range(g.n)), set())
    return best


# --- validators ----------------------------------------------------------------


def _remaining(g: Graph, removed: set[int]) -> tuple[list[int], list[tuple[int, int]]]:
    keep = [v for v in range(g.n) if v not in removed]
    edges = [(u, v) for u in keep for v in g.adj[u] if u < v and v not in removed]
    return keep, edges


def is_forest(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    """Union-find cycle check."""
    parent = {v: v for v in nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_bipartite(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    nbrs: dict[int, list[int]] = {v: [] for v in nodes}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    side: dict[int, int] = {}
    for s in nbrs:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def validate_third_color(
    g: Graph,
    S: Iterable[int],
    strong: bool,
    R: Iterable[int] = (),
    T: Iterable[int] = (),
) -> bool:
    """Check a (strong) third colour and optionally the ``T <= S``, ``S & R = {}`` constraints.

    ``S`` must be stable; ``g - S`` must be a forest when ``strong`` and
    bipartite otherwise.
    """
    s = set(S)
    if any(not 0 <= v < g.n for v in s):
        return False
    if any(g.adj[v] & s for v in s):
        return False
    if not set(T) <= s or s & set(R):
        return False
    keep, edges = _remaining(g, s)
    return is_forest(keep, edges) if strong else is_bipartite(keep, edges)


def _field(split: Any, name: str) -> Any:
    return split[name] if isinstance(split, Mapping) else getattr(split, name)


def _has_path_within(g: Graph, a: int, b: int, allowed: set[int]) -> bool:
    seen = {a}
    stack = [a]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w == b:
                return True
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def validate_split(g: Graph, split: Any) -> bool:
    """Re-check a split against its definition.

    Accepts split objects or their JSON dicts; the ``type`` (or ``kind``)
    is one of ``1-cutset``, ``1-join``, ``proper-1-join`` and
    ``proper-2-cutset``.
    """
    kind = split["type"] if isinstance(split, Mapping) else type(split).kind
    X, Y = set(_field(split, "X")), set(_field(split, "Y"))
    if not X or not Y or X & Y:
        return False
    if kind == "1-cutset":
        v = _field(split, "v")
        if v in X or v in Y or X | Y | {v} != set(range(g.n)):
            return False
        return not any(g.adj[x] & Y for x in X)
    if kind in ("1-join", "proper-1-join"):
        A, B = set(_field(split, "A")), set(_field(split, "B"))
        if X | Y != set(range(g.n)) or len(X) < 2 or len(Y) < 2:
            return False
        if not A or not B or not A <= X or not B <= Y:
            return False
        for x in X:
            cross = g.adj[x] & Y
            if cross != (B if x in A else set()):
                return False
        if kind == "proper-1-join":
            for side in (A, B):
                if len(side) < 2 or any(g.adj[u] & side for u in side):
                    return False
        return True
    if kind == "proper-2-cutset":
        a, b = _field(split, "a"), _field(split, "b")
        if a == b or {a, b} & (X | Y) or X | Y | {a, b} != set(range(g.n)):
            return False
        if b in g.adj[a] or len(g.adj[a]) < 3 or len(g.adj[b]) < 3:
            return False
        if len(X) < 2 or len(Y) < 2 or any(g.adj[x] & Y for x in X):
            return False
        return _has_path_within(g, a, b, X) and _has_path_within(g, a, b, Y)
    return False


def validate_coloring(g: Graph, coloring: Union[Mapping[int, int], Sequence[int]]) -> bool:
    """Proper colouring whose colours are exactly ``1..k``."""
    col = [coloring[v] for v in range(g.n)] if isinstance(coloring, Mapping) else list(coloring)
    if len(col) != g.n:
        return False
    if any(not isinstance(c, int) or c < 1 for c in col):
        return False
    if any(col[u] == col[v] for u in range(g.n) for v in g.adj[u]):
        return False
    return set(col) == set(range(1, max(col, default=0) + 1))
