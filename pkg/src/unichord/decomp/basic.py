"""Detection of the five basic classes.

A connected graph is basic when it is a clique, a hole of length at
least 7, a strongly 2-bipartite graph, or an induced subgraph of the
Petersen or the Heawood graph.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from ..compose import make_heawood, make_petersen
from ..graph import Graph, bipartition, contains_square, contains_triangle, is_connected
from .types import (
    BasicKind,
    Clique,
    HeawoodSub,
    LongHole,
    PetersenSub,
    PreconditionError,
    Strongly2Bipartite,
)

__all__ = [
    "classify_basic",
    "is_induced_subgraph_of_fixed",
    "petersen_automorphisms",
    "long_hole_order",
]


@lru_cache(maxsize=None)
def _target(name: str) -> Graph:
    if name == "petersen":
        return make_petersen()
    if name == "heawood":
        return make_heawood()
    raise ValueError(f"unknown target {name!r}; expected 'petersen' or 'heawood'")


def _search_order(g: Graph) -> list[tuple[int, int]]:
    """Nodes in BFS order as ``(node, bfs_parent)``; parent ``-1`` starts a component.

    Each component starts at its highest-degree node so that the most
    constrained nodes are placed first.
    """
    seen = [False] * g.n
    order: list[tuple[int, int]] = []
    starts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        order.append((s, -1))
        head = len(order) - 1
        while head < len(order):
            u = order[head][0]
            head += 1
            for w in sorted(g.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    order.append((w, u))
    return order


def _embeddings(g: Graph, t: Graph, fix_first: bool) -> Iterator[tuple[int, ...]]:
    """Yield every induced embedding of ``g`` into ``t``.

    With ``fix_first`` the first node is pinned to target node 0, which
    loses nothing when ``t`` is vertex-transitive and ``g`` is connected.
    """
    if g.n > t.n:
        return
    if g.n == 0:
        yield ()
        return
    order = _search_order(g)
    pos = {v: i for i, (v, _) in enumerate(order)}
    # earlier[i] = (neighbours, non-neighbours) of order[i] among order[:i]
    earlier = []
    for i, (v, _) in enumerate(order):
        nb = [w for w in g.adj[v] if pos[w] < i]
        non = [order[j][0] for j in range(i) if order[j][0] not in g.adj[v]]
        earlier.append((nb, non))
    tadj = t.adj
    phi = [-1] * g.n
    used = [False] * t.n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(phi)
            return
        v, parent = order[i]
        if parent >= 0:
            cands = sorted(tadj[phi[parent]])
        elif i == 0 and fix_first:
            cands = [0]
        else:
            cands = range(t.n)
        nb, non = earlier[i]
        for x in cands:
            if used[x]:
                continue
            tx = tadj[x]
            if any(phi[w] not in tx for w in nb):
                continue
            if any(phi[w] in tx for w in non):
                continue
            phi[v] = x
            used[x] = True
            yield from rec(i + 1)
            used[x] = False
        phi[v] = -1

    yield from rec(0)


def _fits_fixed(g: Graph, name: str) -> bool:
    # Cheap necessary conditions: both targets are cubic with girth 5 or 6.
    if g.n > (10 if name == "petersen" else 14):
        return False
    if any(len(a) > 3 for a in g.adj):
        return False
    if contains_triangle(g) or contains_square(g):
        return False
    if name == "heawood" and bipartition(g) is None:
        return False
    return True


def is_induced_subgraph_of_fixed(g: Graph, target: str) -> Optional[tuple[int, ...]]:
    """Return an induced embedding of ``g`` into ``"petersen"`` or ``"heawood"``.

    ``embedding[v]`` is the target node that ``v`` maps to.  Petersen
    nodes ``a1..a5`` are ``0..4`` and ``b1..b5`` are ``5..9``; Heawood
    nodes ``a1..a14`` are ``0..13``.

    Examples
    --------
    >>> from unichord.compose import make_cycle
    >>> is_induced_subgraph_of_fixed(make_cycle(6), "petersen") is not None
    True
    """
    t = _target(target)
    if not _fits_fixed(g, target):
        return None
    return next(_embeddings(g, t, fix_first=is_connected(g)), None)


@lru_cache(maxsize=None)
def petersen_automorphisms() -> tuple[tuple[int, ...], ...]:
    """All 120 automorphisms of the Petersen graph, sorted."""
    p = _target("petersen")
    return tuple(sorted(_embeddings(p, p, fix_first=False)))


def long_hole_order(g: Graph) -> tuple[int, ...]:
    """Cyclic order of a connected 2-regular graph, from node 0 towards its smaller neighbour."""
    order = [0]
    prev, cur = 0, min(g.adj[0])
    while cur != 0:
        order.append(cur)
        a, b = g.adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return tuple(order)


def _strongly_2_bipartite(g: Graph) -> Optional[Strongly2Bipartite]:
    two = [v for v in range(g.n) if len(g.adj[v]) == 2]
    big = [v for v in range(g.n) if len(g.adj[v]) >= 3]
    if not two or not big or len(two) + len(big) != g.n:
        return None
    if not g.is_stable(two) or not g.is_stable(big):
        return None
    if contains_square(g):
        return None
    return Strongly2Bipartite(tuple(two), tuple(big))


def classify_basic(g: Graph) -> Optional[BasicKind]:
    """Return a witness that the connected graph ``g`` is basic, or ``None``.

    When several kinds apply the first of clique, long hole, strongly
    2-bipartite, Petersen subgraph, Heawood subgraph wins.

    Raises
    ------
    PreconditionError
        If ``g`` is empty or disconnected.
    """
    if not is_connected(g):
        raise PreconditionError("classify_basic needs a connected graph")
    return classify_connected(g)


def classify_connected(g: Graph) -> Optional[BasicKind]:
    """:func:`classify_basic` without the connectivity check."""
    if g.is_clique():
        return Clique(g.n)
    degs = [len(a) for a in g.adj]
    if g.n >= 7 and all(d == 2 for d in degs):
        return LongHole(long_hole_order(g))
    s2b = _strongly_2_bipartite(g)
    if s2b is not None:
        return s2b
    if max(degs) > 3 or g.n > 14:
        return None
    emb = is_induced_subgraph_of_fixed(g, "petersen")
    if emb is not None:
        return PetersenSub(emb)
    emb = is_induced_subgraph_of_fixed(g, "heawood")
    if emb is not None:
        return HeawoodSub(emb)
    return None
