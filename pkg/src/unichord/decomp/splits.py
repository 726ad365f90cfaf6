"""Finding 1-cutsets, 1-joins and proper 2-cutsets, and building blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..graph import (
    Graph,
    _lowpoint_dfs,
    articulation_points,
    connected_components,
    contains_square,
    contains_triangle,
    induced_subgraph,
    is_connected,
)
from .types import (
    CertificateError,
    NotInC,
    OneCutset,
    OneJoin,
    PreconditionError,
    ProperOneJoin,
    ProperTwoCutset,
    Split,
)

__all__ = [
    "Block",
    "find_1cutset",
    "find_1join",
    "check_proper_1join",
    "find_2cutset",
    "find_proper_2cutset",
    "blocks",
    "is_valid_1join",
]


# --- 1-cutsets -----------------------------------------------------------------


def _component_sizes_at_cuts(g: Graph) -> dict[int, list[int]]:
    """For each cut vertex of the connected graph ``g``, sizes of the components of ``g - v``."""
    disc, low, parent, order, children = _lowpoint_dfs(g, 0)
    size = dict.fromkeys(order, 1)
    for u in reversed(order):
        p = parent[u]
        if p >= 0:
            size[p] += size[u]
    out: dict[int, list[int]] = {}
    root_kids = children[0]
    if len(root_kids) > 1:
        out[0] = [size[c] for c in root_kids]
    for u in order[1:]:
        sep = [size[c] for c in children[u] if low[c] >= disc[u]]
        if sep:
            sep.append(g.n - 1 - sum(sep))
            out[u] = sep
    return out


def find_1cutset(g: Graph, balanced: bool = False) -> Optional[OneCutset]:
    """Return a 1-cutset split ``(X, Y, v)`` of the connected graph ``g``.

    By default ``v`` is the lowest-numbered cut vertex and ``X`` is the
    component of ``g - v`` holding the smallest node.  With ``balanced``
    the cut vertex minimising its largest component is chosen and the
    components are packed greedily so that ``max(|X|, |Y|)`` stays small;
    this keeps decomposition trees of long block chains shallow.
    """
    if g.n < 3:
        return None
    if not is_connected(g):
        raise PreconditionError("find_1cutset needs a connected graph")
    return find_1cutset_connected(g, balanced)


def find_1cutset_connected(g: Graph, balanced: bool = False) -> Optional[OneCutset]:
    """:func:`find_1cutset` without the connectivity check."""
    if g.n < 3:
        return None
    if not balanced:
        cuts = articulation_points(g)
        if not cuts:
            return None
        v = cuts[0]
        comps = connected_components(g, [u for u in range(g.n) if u != v])
        X = comps[0]
        Y = sorted(u for c in comps[1:] for u in c)
        return OneCutset(tuple(X), tuple(Y), v)
    sizes = _component_sizes_at_cuts(g)
    if not sizes:
        return None
    v = min(sizes, key=lambda u: (max(sizes[u]), u))
    comps = connected_components(g, [u for u in range(g.n) if u != v])
    comps.sort(key=lambda c: (-len(c), c[0]))
    bins: tuple[list[int], list[int]] = ([], [])
    for c in comps:
        bins[0 if len(bins[0]) <= len(bins[1]) else 1].extend(c)
    X, Y = sorted(bins[0]), sorted(bins[1])
    if X[0] > Y[0]:
        X, Y = Y, X
    return OneCutset(tuple(X), tuple(Y), v)


# --- 1-joins -------------------------------------------------------------------


def is_valid_1join(g: Graph, X, Y, A, B) -> bool:
    """Check the 1-join definition directly (no properness requirement)."""
    Xs, Ys, As, Bs = set(X), set(Y), set(A), set(B)
    if len(Xs) < 2 or len(Ys) < 2 or Xs & Ys or len(Xs) + len(Ys) != g.n:
        return False
    if not As or not Bs or not As <= Xs or not Bs <= Ys:
        return False
    for x in Xs:
        across = g.adj[x] & Ys
        if x in As:
            if across != Bs:
                return False
        elif across:
            return False
    return True


def _closure(
    g: Graph, a: int, s: int, P: frozenset, Q: frozenset, limit: int, failed: set[int]
) -> Optional[set[int]]:
    """Smallest set containing ``a`` and ``s`` that can be the X side of a
    1-join with ``a`` in A and ``b`` in B, where ``P = N(b)`` and ``Q = N(a)``.

    A node x of X outside P may have no neighbour in Y, so N(x) is pulled
    in; a node of X inside P must see exactly ``Q`` on the Y side, so the
    symmetric difference is pulled in.  Returns ``None`` once the set
    exceeds ``limit`` nodes, swallows all of ``Q`` but ``b`` (then B would
    be a single node), or reaches a seed in ``failed`` whose own closure
    was already too large.
    """
    adj = g.adj
    X = {a, s}
    q_left = len(Q) - 1 - (s in Q)
    stack = [s]
    while stack:
        x = stack.pop()
        forced = (adj[x] ^ Q) if x in P else adj[x]
        for z in forced:
            if z not in X and z != x:
                if z in failed:
                    return None
                X.add(z)
                if z in Q:
                    q_left -= 1
                    if q_left == 0:
                        return None
                if len(X) > limit:
                    return None
                stack.append(z)
    return X


def _join_from_square(g: Graph) -> Optional[OneJoin]:
    """Try to read a 1-join off a square by growing a complete bipartite pair around it.

    Only a fast path: returns ``None`` whenever the grown pair is not the
    middle of a 1-join, and the caller falls back to the general search.
    """
    sq = contains_square(g)
    if sq is None:
        return None
    a, b, c, d = sq
    adj = g.adj
    A, B = {a, c}, {b, d}
    grew = True
    while grew:
        grew = False
        for z in sorted(set().union(*(adj[x] for x in B)) - A - B):
            if B <= adj[z] and not (adj[z] & A):
                A.add(z)
                grew = True
        for z in sorted(set().union(*(adj[x] for x in A)) - A - B):
            if A <= adj[z] and not (adj[z] & B):
                B.add(z)
                grew = True
    rest = [v for v in range(g.n) if v not in A and v not in B]
    X, Y = set(A), set(B)
    for comp in connected_components(g, rest):
        touch = set().union(*(adj[v] for v in comp))
        hits_a, hits_b = bool(touch & A), bool(touch & B)
        if hits_a and hits_b:
            return None
        (X if hits_a else Y).update(comp)
    if not is_valid_1join(g, X, Y, A, B):
        return None
    return _oriented_join(X, Y, A, B)


def _oriented_join(X, Y, A, B) -> OneJoin:
    X, Y, A, B = sorted(X), sorted(Y), sorted(A), sorted(B)
    if X[0] > Y[0]:
        X, Y, A, B = Y, X, B, A
    return OneJoin(tuple(X), tuple(Y), tuple(A), tuple(B))


def find_1join(g: Graph) -> Optional[OneJoin]:
    """Return some 1-join ``(X, Y, A, B)`` of ``g`` or ``None`` if there is none.

    Assumes ``g`` is connected and has no 1-cutset, so every 1-join has
    ``|A|, |B| >= 2``.  For each ordered edge ``ab`` and each candidate
    second node ``s`` of ``A`` the smallest compatible X side is grown by
    closure; this finds a 1-join whenever one exists.  Worst case is about
    ``O(m * d * (n + m))``, far below that on the graphs met in practice.
    """
    n = g.n
    if n < 4:
        return None
    triangle_free = contains_triangle(g) is None
    if triangle_free:
        # every 1-join spans a square a-b-s-z once |A|, |B| >= 2
        if contains_square(g) is None:
            return None
        quick = _join_from_square(g)
        if quick is not None:
            return quick
    adj = g.adj
    limit = n - 2
    # Naming the side that holds a as X costs nothing, so each edge is
    # tried in one orientation only.
    for a in range(n):
        Q = adj[a]
        for b in sorted(Q):
            if b < a:
                continue
            P = adj[b]
            Qb = Q - {b}
            failed: set[int] = set()
            for s in sorted(P):
                if s == a or not (adj[s] & Qb):
                    continue
                X = _closure(g, a, s, P, Q, limit, failed)
                if X is None:
                    failed.add(s)
                    continue
                Y = set(range(n)) - X
                return _oriented_join(X, Y, P & X, Q & Y)
    return None


def check_proper_1join(g: Graph, join: OneJoin) -> Union[ProperOneJoin, NotInC]:
    """Promote a 1-join to a proper one, or reject ``g``.

    For a graph with no 1-cutset that is not a clique, a 1-join whose
    special sets are not both stable forces a cycle with a unique chord;
    the verdict carries the triangle formed by an edge inside one special
    set and a node of the other.

    Raises
    ------
    CertificateError
        If ``join`` is not a 1-join of ``g`` or has a special set of size
        one (which would make it a 1-cutset).
    """
    X, Y, A, B = join.X, join.Y, join.A, join.B
    if not is_valid_1join(g, X, Y, A, B):
        raise CertificateError("not a 1-join of this graph")
    if len(A) < 2 or len(B) < 2:
        raise CertificateError("special set of size one: the graph has a 1-cutset")
    for side, other in ((A, B), (B, A)):
        s = set(side)
        for u in side:
            inner = g.adj[u] & s
            if inner:
                v = min(inner)
                return NotInC(
                    "1-join",
                    "1-join with a non-stable special set",
                    {"triangle": sorted((u, v, other[0])), "X": list(X), "Y": list(Y), "A": list(A), "B": list(B)},
                )
    return ProperOneJoin(X, Y, A, B)


# --- 2-cutsets -----------------------------------------------------------------


def find_2cutset(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair ``(a, b)`` whose removal disconnects ``g``.

    Assumes ``g`` is 2-connected.  Runs one articulation point pass per
    node, ``O(n (n + m))``.
    """
    for a in range(g.n):
        cuts = articulation_points(g, removed=a)
        if cuts:
            return (a, cuts[0])
    return None


def _degree_two_paths(g: Graph) -> list[tuple[list[int], int, int]]:
    """Components of the subgraph induced by degree-2 nodes with their two attachments.

    Each entry is ``(path_nodes_in_order, a, b)`` where ``a`` is attached
    to the first node and ``b`` to the last.  Components are ordered by
    smallest member.
    """
    adj = g.adj
    deg2 = [v for v in range(g.n) if len(adj[v]) == 2]
    out = []
    for comp in connected_components(g, deg2):
        cs = set(comp)
        ends = [v for v in comp if len(adj[v] & cs) < 2]
        if not ends:
            raise PreconditionError("the graph is a cycle")
        start = min(ends)
        path = [start]
        prev = -1
        cur = start
        while True:
            nxt = [w for w in adj[cur] if w in cs and w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        outside_first = [w for w in adj[path[0]] if w not in cs]
        outside_last = [w for w in adj[path[-1]] if w not in cs]
        if len(path) == 1:
            a, b = sorted(outside_first)
        else:
            a, b = outside_first[0], outside_last[0]
        out.append((path, a, b))
    return out


def _check_p2c_preconditions(g: Graph) -> None:
    from .basic import classify_basic

    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if classify_basic(g) is not None:
        raise PreconditionError("graph is basic")
    if find_1cutset(g) is not None:
        raise PreconditionError("graph has a 1-cutset")
    join = find_1join(g)
    if join is not None and isinstance(check_proper_1join(g, join), ProperOneJoin):
        raise PreconditionError("graph has a proper 1-join")


def find_proper_2cutset(g: Graph, check_preconditions: bool = True) -> Union[ProperTwoCutset, NotInC]:
    """Find a proper 2-cutset of ``g`` or prove ``g`` is not in the class.

    Input contract: ``g`` is connected, not basic, and has no 1-cutset and
    no proper 1-join.  Four steps:

    1. Look at the paths induced by degree-2 nodes.  If the two nodes a
       path attaches to are adjacent, ``g`` is rejected.
    2. If some such path has at least two nodes, its attachments form a
       proper 2-cutset with the path on one side.
    3. Otherwise replace every degree-2 node by an edge between its
       neighbours.  If the result has no 2-cutset, ``g`` is rejected.
    4. Take a 2-cutset ``{a, b}`` of that graph.  If ``ab`` is an edge of
       ``g`` then ``g`` is rejected, else it is a proper 2-cutset of ``g``.

    Raises
    ------
    PreconditionError
        When ``check_preconditions`` is set and the contract is violated.
    """
    if check_preconditions:
        _check_p2c_preconditions(g)
    adj = g.adj
    paths = _degree_two_paths(g)
    # step 1
    for path, a, b in paths:
        if a == b:
            raise PreconditionError(f"node {a} is a 1-cutset")
        if b in adj[a]:
            return NotInC("p2c-1", "degree-2 path attaches to adjacent nodes", {"path": path, "a": a, "b": b})
    # step 2
    for path, a, b in paths:
        if len(path) >= 2:
            a, b = min(a, b), max(a, b)
            X = sorted(path)
            Y = sorted(set(range(g.n)) - set(X) - {a, b})
            return ProperTwoCutset(tuple(X), tuple(Y), a, b)
    # step 3
    deg2 = {path[0] for path, _, _ in paths}
    keep = [v for v in range(g.n) if v not in deg2]
    sub, remap = induced_subgraph(g, keep)
    index = {v: i for i, v in enumerate(remap)}
    contracted = sub.add_edges((index[a], index[b]) for _, a, b in paths)
    pair = find_2cutset(contracted)
    if pair is None:
        return NotInC("p2c-3", "contracted graph has no 2-cutset", {})
    # step 4
    a, b = remap[pair[0]], remap[pair[1]]
    if b in adj[a]:
        return NotInC("p2c-4", "2-cutset of the contracted graph is an edge", {"a": a, "b": b})
    comps = connected_components(g, [v for v in range(g.n) if v != a and v != b])
    X = next(c for c in comps if len(c) >= 2)
    Y = sorted(set(range(g.n)) - set(X) - {a, b})
    return ProperTwoCutset(tuple(X), tuple(Y), a, b)


# --- blocks --------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """One block of a decomposition.

    ``to_parent[i]`` is the node of the decomposed graph that block node
    ``i`` stands for, or ``None`` for a synthetic marker.  ``marker`` is
    the block id of the marker node (``None`` for 1-cutset blocks).
    """

    graph: Graph
    to_parent: tuple[Optional[int], ...]
    marker: Optional[int]
    marker_is_real: bool


def _with_marker(g: Graph, side: list[int], attach: list[int]) -> Block:
    sub, remap = induced_subgraph(g, side)
    index = {v: i for i, v in enumerate(remap)}
    c = sub.n
    adj = [set(a) for a in sub.adj]
    adj.append({index[x] for x in attach})
    for x in attach:
        adj[index[x]].add(c)
    return Block(Graph.from_adjacency(adj), remap + (None,), c, False)


def _real_marker(g: Graph, a: int, b: int) -> Optional[int]:
    for c in sorted(g.adj[a] & g.adj[b]):
        if len(g.adj[c]) == 2:
            return c
    return None


def blocks(g: Graph, split: Split, mode: str = "proper") -> tuple[Block, Block]:
    """Blocks of decomposition ``(G_X, G_Y)`` of ``g`` with respect to ``split``.

    ``mode="structural"`` always uses fresh markers for 2-cutsets;
    ``mode="proper"`` reuses a real node ``c`` with ``N(c) = {a, b}``
    (smallest such) in both blocks.

    Raises
    ------
    CertificateError
        If the split does not partition the node set as required.
    """
    if mode not in ("structural", "proper"):
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(split, OneCutset):
        X, Y, v = list(split.X), list(split.Y), split.v
        if not X or not Y or len(X) + len(Y) + 1 != g.n or set(X) & set(Y) or v in X or v in Y:
            raise CertificateError("1-cutset sides do not partition the graph")
        bx, mx = induced_subgraph(g, X + [v])
        by, my = induced_subgraph(g, Y + [v])
        return Block(bx, mx, None, False), Block(by, my, None, False)
    if isinstance(split, OneJoin):
        if not is_valid_1join(g, split.X, split.Y, split.A, split.B):
            raise CertificateError("not a 1-join of this graph")
        return _with_marker(g, list(split.X), list(split.A)), _with_marker(g, list(split.Y), list(split.B))
    if isinstance(split, ProperTwoCutset):
        X, Y, a, b = list(split.X), list(split.Y), split.a, split.b
        if len(X) + len(Y) + 2 != g.n or set(X) & set(Y) or {a, b} & (set(X) | set(Y)):
            raise CertificateError("2-cutset sides do not partition the graph")
        c = _real_marker(g, a, b) if mode == "proper" else None
        if c is None:
            return _with_marker(g, X + [a, b], [a, b]), _with_marker(g, Y + [a, b], [a, b])
        out = []
        for side in (X, Y):
            nodes = sorted(set(side) | {a, b, c})
            sub, remap = induced_subgraph(g, nodes)
            out.append(Block(sub, remap, remap.index(c), True))
        return out[0], out[1]
    raise CertificateError(f"unknown split type {type(split).__name__}")
