"""Optimal colouring and maximum clique for graphs in the class."""

from __future__ import annotations

import gc
from collections import deque
from dataclasses import dataclass
from typing import Any, Optional

from ..decomp.tree import build_proper_tree
from ..decomp.types import NotInC
from ..graph import (
    Graph,
    biconnected_blocks,
    biconnected_components,
    bipartition,
    connected_components,
    contains_triangle,
    induced_subgraph,
)
from .pairs import admissible_pairs
from .thirdcolor import Trace, third_color

__all__ = ["Coloring", "NotInCError", "optimal_coloring", "max_clique"]


class NotInCError(ValueError):
    """Raised when an operation that needs a graph of the class gets one outside it."""

    def __init__(self, verdict: NotInC):
        super().__init__(f"graph is not in the class ({verdict.step}: {verdict.reason})")
        self.verdict = verdict


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # colors[v] in 1..num_colors
    num_colors: int

    def to_json(self) -> dict[str, Any]:
        return {"num_colors": self.num_colors, "colors": {str(v): c for v, c in enumerate(self.colors)}}


def _color_triangle_free(h: Graph, trace: Optional[Trace]) -> list[int]:
    """Colour a connected triangle-free graph of the class with at most 3 colours."""
    if h.m == 0:
        return [1] * h.n
    tree = build_proper_tree(h)
    if isinstance(tree, NotInC):
        raise NotInCError(tree)
    sides = bipartition(h)
    if sides is not None:
        col = [0] * h.n
        for v in sides[0]:
            col[v] = 1
        for v in sides[1]:
            col[v] = 2
        return col
    pair = admissible_pairs(h, 0)[1]  # T = {}, R = N[0]
    S = set(third_color(tree.root, pair, trace).S)
    rest, remap = induced_subgraph(h, [v for v in range(h.n) if v not in S])
    sides = bipartition(rest)
    if sides is None:
        raise AssertionError("third colour left an odd cycle")
    col = [3] * h.n
    for c, side in ((1, sides[0]), (2, sides[1])):
        for i in side:
            col[remap[i]] = c
    return col


def _color_with_triangles(h: Graph, trace: Optional[Trace]) -> list[int]:
    """Colour each 2-connected piece and glue the pieces by permuting colours at cut nodes."""
    pieces = []
    for edges in biconnected_components(h):
        nodes = sorted({x for e in edges for x in e})
        sub, remap = induced_subgraph(h, nodes)
        if sub.is_clique():
            local = list(range(1, sub.n + 1))
        else:
            if contains_triangle(sub):
                raise NotInCError(
                    NotInC("triangle", "2-connected piece with a triangle that is not a clique", {"nodes": nodes})
                )
            local = _color_triangle_free(sub, trace)
        pieces.append(dict(zip(remap, local)))
    at: dict[int, list[int]] = {}
    for i, piece in enumerate(pieces):
        for v in piece:
            at.setdefault(v, []).append(i)
    col = [0] * h.n
    done = [False] * len(pieces)
    queue = deque([0])
    done[0] = True
    while queue:
        i = queue.popleft()
        piece = pieces[i]
        anchor = next((v for v in piece if col[v]), None)
        swap: dict[int, int] = {}
        if anchor is not None and piece[anchor] != col[anchor]:
            swap = {piece[anchor]: col[anchor], col[anchor]: piece[anchor]}
        for v, c in piece.items():
            c = swap.get(c, c)
            if col[v] == 0:
                col[v] = c
            for j in at[v]:
                if not done[j]:
                    done[j] = True
                    queue.append(j)
    return col


def optimal_coloring(g: Graph, trace: Optional[Trace] = None) -> Coloring:
    """Colour a graph of the class with the minimum number of colours.

    Components holding a triangle get exactly as many colours as their
    largest clique; triangle-free components get 1, 2 or 3 colours, the
    third colour coming from the decomposition tree.  ``trace`` sees every
    third colour computed on the way.

    Raises
    ------
    NotInCError
        If ``g`` has a cycle with a unique chord.
    """
    col = [0] * g.n
    for comp in connected_components(g):
        h, remap = induced_subgraph(g, comp)
        local = _color_with_triangles(h, trace) if contains_triangle(h) else _color_triangle_free(h, trace)
        for i, c in enumerate(local):
            col[remap[i]] = c
    return Coloring(tuple(col), max(col, default=0))


def max_clique(g: Graph) -> list[int]:
    """Maximum clique of a graph of the class, via its 2-connected components.

    In the class every 2-connected component is a clique or is
    triangle-free, so the answer is the largest component that is a
    clique, or any edge, or a single node when there is no edge.  On
    graphs outside the class the result is still a clique but may not be
    maximum.
    """
    if g.n == 0:
        return []
    if g.m == 0:
        return [0]
    best: list[int] = []
    # the scan allocates many short-lived frames and no cycles; on a large
    # heap the cyclic collector would otherwise dominate the run time
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for nodes, m in biconnected_blocks(g):
            k = len(nodes)
            if k > max(len(best), 2) and m == k * (k - 1) // 2:
                best = sorted(nodes)
    finally:
        if was_enabled:
            gc.enable()
    if best:
        return best
    u = next(v for v in range(g.n) if g.adj[v])
    return [u, min(g.adj[u])]
