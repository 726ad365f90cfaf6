"""Simple undirected graphs on dense integer ids, plus elementary queries.

Every algorithm in the package works on :class:`Graph`.  Graphs are
immutable; node ids are ``0 .. n-1`` and every set-valued result is
returned sorted so that outputs are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Graph",
    "GraphParseError",
    "parse_edge_list",
    "to_edge_list",
    "to_dot",
    "induced_subgraph",
    "connected_components",
    "is_connected",
    "articulation_points",
    "biconnected_components",
    "biconnected_blocks",
    "bipartition",
    "contains_triangle",
    "contains_square",
]


class GraphParseError(ValueError):
    """Raised for malformed edge-list text; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable simple undirected graph over ``range(n)``.

    ``adj[v]`` is a frozenset of neighbours.  Self-loops are rejected and
    repeated edges collapse.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.m = sum(len(s) for s in adj) // 2

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        # Trusted fast path: caller guarantees symmetry and no loops.
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(a if isinstance(a, frozenset) else frozenset(a) for a in adj)
        g.m = sum(len(a) for a in g.adj) // 2
        return g

    def nodes(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_stable(self, nodes: Iterable[int]) -> bool:
        s = set(nodes)
        return all(not (self.adj[u] & s) for u in s)

    def is_clique(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def delete_nodes(self, nodes: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(nodes)
        return induced_subgraph(self, [v for v in range(self.n) if v not in drop])

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges()) + list(extra))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical ``n m`` header followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are skipped.  Duplicate edge lines
    collapse; self-loops and out-of-range ids raise :class:`GraphParseError`.
    """
    lines = [
        (i, raw.split("#", 1)[0].strip())
        for i, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise GraphParseError(1, "missing 'n m' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(lineno, f"expected 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(lineno, f"non-integer header {header!r}") from None
    if n < 0 or m < 0:
        raise GraphParseError(lineno, "negative count in header")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise GraphParseError(where, f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, s in body:
        parts = s.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer edge {s!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(lineno, f"node id out of range 0..{n - 1}: {s!r}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at node {u}")
        edges.append((u, v))
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out.extend(f'  {v} [label="{v}"];' for v in range(g.n))
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[S], remap)`` where ``remap[i]`` is the original id of node ``i``.

    Nodes keep their relative order, so lexicographic tie-breaks made on
    the subgraph agree with the parent.
    """
    keep = sorted(set(nodes))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"node {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    adj = g.adj
    sub = [frozenset(index[w] for w in adj[v] if w in index) for v in keep]
    return Graph.from_adjacency(sub), tuple(keep)


def connected_components(g: Graph, within: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Components as sorted node lists, ordered by smallest member.

    ``within`` restricts the search to an induced subgraph without copying.
    """
    allowed = None if within is None else set(within)
    todo = range(g.n) if allowed is None else sorted(allowed)
    seen: set[int] = set()
    comps = []
    adj = g.adj
    for s in todo:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen and (allowed is None or w in allowed):
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def _lowpoint_dfs(g: Graph, root: int, removed: int = -1):
    """Iterative DFS from ``root`` computing discovery order and low points.

    Yields nothing; returns ``(disc, low, parent, order, children)``
    restricted to the component of ``root`` in ``g - removed``.
    """
    adj = g.adj
    disc = {root: 0}
    low = {root: 0}
    parent = {root: -1}
    order = [root]
    children: dict[int, list[int]] = {root: []}
    stack = [(root, iter(adj[root]))]
    t = 1
    while stack:
        u, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed:
                continue
            if w not in disc:
                disc[w] = low[w] = t
                t += 1
                parent[w] = u
                children[u].append(w)
                children[w] = []
                order.append(w)
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            if w != parent[u] and disc[w] < low[u]:
                low[u] = disc[w]
        if not advanced:
            stack.pop()
            p = parent[u]
            if p >= 0 and low[u] < low[p]:
                low[p] = low[u]
    return disc, low, parent, order, children


def articulation_points(g: Graph, removed: int = -1) -> list[int]:
    """Sorted cut vertices of ``g`` (of ``g - removed`` when given).  O(n+m)."""
    cut: set[int] = set()
    seen: set[int] = set()
    for s in range(g.n):
        if s == removed or s in seen:
            continue
        disc, low, parent, order, children = _lowpoint_dfs(g, s, removed)
        seen.update(order)
        if len(children[s]) > 1:
            cut.add(s)
        for u in order:
            if u == s:
                continue
            du = disc[u]
            if any(low[c] >= du for c in children[u]):
                cut.add(u)
    return sorted(cut)


def _biconnected_edge_lists(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Yield the edges of each biconnected component, unsorted, in DFS finishing order."""
    adj = g.adj
    disc = [-1] * g.n
    low = [0] * g.n
    t = 0
    for s in range(g.n):
        if disc[s] >= 0 or not adj[s]:
            continue
        disc[s] = low[s] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            u, p, it = stack[-1]
            advanced = False
            du = disc[u]
            for w in it:
                if w == p:
                    continue
                dw = disc[w]
                if dw < 0:
                    disc[w] = low[w] = t
                    t += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if dw < du:
                    edge_stack.append((u, w))
                    if dw < low[u]:
                        low[u] = dw
            if advanced:
                continue
            stack.pop()
            if p >= 0:
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    i = len(edge_stack) - 1
                    while edge_stack[i] != (p, u):
                        i -= 1
                    yield edge_stack[i:]
                    del edge_stack[i:]


def biconnected_blocks(g: Graph) -> Iterator[tuple[list[int], int]]:
    """Yield ``(nodes, edge_count)`` for each biconnected component.

    Lighter than :func:`biconnected_components`: nodes are kept on the
    stack instead of edges, and each edge is counted once at its endpoint
    discovered later.
    """
    adj = g.adj
    disc = [-1] * g.n
    low = [0] * g.n
    up = [0] * g.n  # neighbours discovered earlier
    t = 0
    for s in range(g.n):
        if disc[s] >= 0 or not adj[s]:
            continue
        disc[s] = low[s] = t
        t += 1
        nodes = [s]
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            u, p, it = stack[-1]
            du, lu = disc[u], low[u]
            for w in it:
                dw = disc[w]
                if dw < 0:
                    disc[w] = low[w] = t
                    t += 1
                    nodes.append(w)
                    stack.append((w, u, iter(adj[w])))
                    break
                if dw < du:
                    up[u] += 1
                    if dw < lu and w != p:
                        lu = dw
            else:
                low[u] = lu
                stack.pop()
                if p >= 0:
                    if lu < low[p]:
                        low[p] = lu
                    if lu >= disc[p]:
                        i = len(nodes) - 1
                        while nodes[i] != u:
                            i -= 1
                        block = nodes[i:]
                        del nodes[i:]
                        block.append(p)
                        yield block, sum(up[x] for x in block) - up[p]
                continue
            low[u] = lu


def biconnected_components(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge partition into biconnected components, each a sorted edge list.

    Components are ordered by their smallest edge.  Isolated nodes belong
    to no component.
    """
    comps = [sorted((min(e), max(e)) for e in comp) for comp in _biconnected_edge_lists(g)]
    comps.sort(key=lambda c: c[0])
    return comps


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Two-colour ``g`` by BFS from each component's smallest node.

    Returns ``(side0, side1)`` as sorted lists, with the smallest node of
    every component in ``side0``; ``None`` when an odd cycle exists.
    """
    color = [-1] * g.n
    adj = g.adj
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - cu
                    queue.append(w)
                elif color[w] == cu:
                    return None
    side0 = [v for v in range(g.n) if color[v] == 0]
    side1 = [v for v in range(g.n) if color[v] == 1]
    return side0, side1


def contains_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    adj = g.adj
    for u in range(g.n):
        au = adj[u]
        for v in au:
            if v > u:
                common = au & adj[v]
                for w in common:
                    if w > v:
                        return (u, v, w)
    return None


def contains_square(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return an induced 4-cycle ``(a, b, c, d)`` in cyclic order, or ``None``.

    For each node ``a`` and each non-neighbour ``c``, look for two
    nonadjacent common neighbours.  Pairs are discovered by walking
    paths of length two, so the cost is bounded by sum of squared degrees.
    """
    adj = g.adj
    for a in range(g.n):
        aa = adj[a]
        mids: dict[int, list[int]] = {}
        for b in aa:
            for c in adj[b]:
                if c != a and c not in aa:
                    mids.setdefault(c, []).append(b)
        for c in sorted(mids):
            bs = sorted(mids[c])
            if len(bs) < 2:
                continue
            for i, b in enumerate(bs):
                ab = adj[b]
                for d in bs[i + 1:]:
                    if d not in ab:
                        return (a, b, c, d)
    return None
