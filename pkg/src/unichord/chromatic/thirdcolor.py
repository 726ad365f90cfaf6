"""Third colours of triangle-free graphs in the class.

A *third colour* is a stable set meeting every odd cycle (removing it
leaves a bipartite graph); a *strong* one meets every cycle (removing it
leaves a forest).  Both are computed by recursion over a proper
decomposition tree, always under an admissible pair ``(R, T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from ..decomp.basic import petersen_automorphisms
from ..decomp.tree import LEAF, TYPE2, DecompNode
from ..decomp.types import (
    BasicKind,
    Clique,
    HeawoodSub,
    LongHole,
    OneCutset,
    PetersenSub,
    PreconditionError,
    ProperTwoCutset,
    Strongly2Bipartite,
)
from ..graph import Graph, bipartition, contains_triangle
from .pairs import AdmissiblePair, classify_pair

__all__ = [
    "ThirdColor",
    "strong_third_color_basic",
    "third_color_petersen",
    "strong_third_color_type2",
    "third_color",
]

# Petersen labels: a1..a5 -> 0..4, b1..b5 -> 5..9
A1, A2, A3, A4, A5, B1, B2, B3, B4, B5 = range(10)

Trace = Callable[[Graph, AdmissiblePair, "ThirdColor"], None]


@dataclass(frozen=True)
class ThirdColor:
    S: tuple[int, ...]
    strong: bool

    def to_json(self) -> dict[str, Any]:
        return {"S": list(self.S), "strong": self.strong}


def _admissible(g: Graph, pair) -> AdmissiblePair:
    if isinstance(pair, AdmissiblePair):
        R, T = pair.R, pair.T
    else:
        R, T = pair
    found = classify_pair(g, R, T)
    if found is None:
        raise PreconditionError(f"pair R={sorted(R)} T={sorted(T)} is not admissible")
    return found


def _emit(trace: Optional[Trace], g: Graph, pair: AdmissiblePair, tc: ThirdColor) -> ThirdColor:
    if trace is not None:
        trace(g, pair, tc)
    return tc


# --- basic graphs --------------------------------------------------------------


def _automorphism(fixes: dict[int, int]) -> tuple[int, ...]:
    """First Petersen automorphism sending each key to its value."""
    for sigma in petersen_automorphisms():
        if all(sigma[x] == y for x, y in fixes.items()):
            return sigma
    raise AssertionError(f"no Petersen automorphism realises {fixes}")


def _petersen_q(emb: tuple[int, ...], pair: AdmissiblePair) -> tuple[dict[int, int], set[int]]:
    """Normalising map and the Q set for a proper induced subgraph of Petersen."""
    present = set(emb)
    v = emb[pair.center]
    if pair.case_tag == 1:
        sigma = _automorphism({v: A1})
        missing = {sigma[z] for z in range(10) if z not in present}
        q = {A2, A5, B1}
        if missing <= q:
            # every absent node is a neighbour of a1: rotate one of them onto a5
            z = next(z for z in range(10) if z not in present)
            sigma = _automorphism({v: A1, z: A5})
            q = q | {A4}
        return {sigma[x]: x for x in range(10)}, q
    if pair.case_tag == 2:
        sigma = _automorphism({v: A1})
        return {sigma[x]: x for x in range(10)}, {A3, B3, B5}
    sigma = _automorphism({v: A1, emb[pair.u]: A2, emb[pair.w]: A5})
    q = {3: {A2, B3}, 4: {A2, B2, B5}, 5: {B1, A3, B4}}[pair.case_tag]
    return {sigma[x]: x for x in range(10)}, q


def _bipartite_side(g: Graph, pair: AdmissiblePair) -> tuple[int, ...]:
    sides = bipartition(g)
    if sides is None:
        raise PreconditionError("graph is not bipartite")
    R, T = set(pair.R), set(pair.T)
    for side in sides:
        s = set(side)
        if T <= s and len(s & R) <= 2:
            return tuple(sorted(s - R))
    raise PreconditionError("no bipartition side fits the pair")


def strong_third_color_basic(
    g: Graph, pair, basic: BasicKind, trace: Optional[Trace] = None
) -> ThirdColor:
    """Strong third colour of a triangle-free basic graph other than Petersen.

    ``basic`` is the witness from :func:`classify_basic`.  Long holes take
    ``T`` itself (or any node outside ``R``); bipartite basics take one
    side minus ``R``; proper Petersen subgraphs use a fixed set ``Q``
    after relabelling the centre to ``a1``.

    Raises
    ------
    PreconditionError
        For the full Petersen graph, cliques with three or more nodes, or
        a pair that is not admissible.
    """
    p = _admissible(g, pair)
    if isinstance(basic, LongHole):
        S = p.T if p.T else (min(set(range(g.n)) - set(p.R)),)
    elif isinstance(basic, (Clique, Strongly2Bipartite, HeawoodSub)):
        if isinstance(basic, Clique) and basic.size > 2:
            raise PreconditionError("cliques with a triangle have no third colour lemma")
        S = _bipartite_side(g, p)
    elif isinstance(basic, PetersenSub):
        if basic.is_full:
            raise PreconditionError("the Petersen graph has no strong third colour in general")
        back, q = _petersen_q(basic.embedding, p)
        where = {x: i for i, x in enumerate(basic.embedding)}
        S = tuple(sorted(where[back[x]] for x in q if back[x] in where))
    else:
        raise PreconditionError(f"unknown basic kind {basic!r}")
    return _emit(trace, g, p, ThirdColor(tuple(S), True))


def third_color_petersen(g: Graph, pair, embedding: Optional[tuple[int, ...]] = None, trace: Optional[Trace] = None) -> ThirdColor:
    """Third colour of the full Petersen graph under an admissible pair.

    Case 1 (``T = N(v)``) returns ``S = T``, leaving a 6-cycle plus an
    isolated node; no strong choice exists there.  Case 2 maps ``v`` to
    ``a1`` and returns the preimage of ``{a3, b3, b5}``, leaving a tree.
    ``embedding`` maps ``g`` onto the standard labelling (identity when
    omitted).
    """
    emb = tuple(range(10)) if embedding is None else embedding
    if g.n != 10 or g.m != 15:
        raise PreconditionError("not the Petersen graph")
    p = _admissible(g, pair)
    if p.case_tag == 1:
        return _emit(trace, g, p, ThirdColor(p.T, False))
    if p.case_tag != 2:
        raise PreconditionError("degree-two cases cannot occur in the Petersen graph")
    sigma = _automorphism({emb[p.center]: A1})
    back = {sigma[x]: x for x in range(10)}
    where = {x: i for i, x in enumerate(emb)}
    S = tuple(sorted(where[back[x]] for x in (A3, B3, B5)))
    return _emit(trace, g, p, ThirdColor(S, True))


# --- recursion over the tree -----------------------------------------------------


def _inverse(child: DecompNode) -> dict[int, int]:
    return {p: i for i, p in enumerate(child.to_parent) if p is not None}


def _down(child: DecompNode, inv: dict[int, int], nodes: Iterable[int]) -> set[int]:
    return {inv[x] for x in nodes if x in inv}


def _up(child: DecompNode, S: Iterable[int]) -> set[int]:
    return {child.to_parent[i] for i in S if child.to_parent[i] is not None}


def _closed(g: Graph, v: int) -> set[int]:
    return set(g.adj[v]) | {v}


def _leaf_color(node: DecompNode, pair, strong: bool, trace: Optional[Trace]) -> ThirdColor:
    basic = node.basic
    if isinstance(basic, PetersenSub) and basic.is_full:
        if strong:
            raise PreconditionError("Petersen leaf below a proper 2-cutset")
        return third_color_petersen(node.graph, pair, basic.embedding, trace)
    return strong_third_color_basic(node.graph, pair, basic, trace)


def strong_third_color_type2(node: DecompNode, pair, trace: Optional[Trace] = None) -> ThirdColor:
    """Strong third colour of a Type-2 tree node (or a basic leaf below one).

    The node splits on a proper 2-cutset ``{a, b}`` with marker ``c``.
    Depending on where the pair sits:

    * both ``R`` and ``T`` inside one block: solve that block first, then
      constrain the other block at ``c`` (or at ``a`` when ``c`` is real
      and chosen) so the two answers agree on ``a``, ``b``, ``c``;
    * centre ``a``: solve both blocks under the same kind of pair at ``a``
      (``T = N(a)``) or at ``c`` with ``b`` forced in (``R = N[a]``);
    * centre of degree 2 next to ``a`` with ``N[a]`` inside ``R``: solve
      the centre's block, then the other block at ``c`` with ``b``
      following the first answer.
    """
    g = node.graph
    if node.kind == LEAF:
        return _leaf_color(node, pair, True, trace)
    if node.kind != TYPE2:
        raise PreconditionError("strong third colours are only built below proper 2-cutsets")
    p = _admissible(g, pair)
    split: ProperTwoCutset = node.split
    bx, by = node.children
    inv = {id(bx): _inverse(bx), id(by): _inverse(by)}
    real = bx.marker_is_real
    R, T = set(p.R), set(p.T)
    RT = R | T
    v = p.center

    def rec(child: DecompNode, Rc: Iterable[int], Tc: Iterable[int]) -> set[int]:
        return set(strong_third_color_type2(child, (tuple(Rc), tuple(Tc)), trace).S)

    S: set[int] = set()
    if RT.issubset(inv[id(bx)]) or RT.issubset(inv[id(by)]):
        first, second = (bx, by) if RT.issubset(inv[id(bx)]) else (by, bx)
        f_inv, s_inv = inv[id(first)], inv[id(second)]
        s_first = rec(first, _down(first, f_inv, R), _down(first, f_inv, T))
        up_first = _up(first, s_first)
        c_second = second.marker
        a2, b2 = s_inv[split.a], s_inv[split.b]
        if real and first.marker in s_first:
            s_second = rec(second, [a2], second.graph.adj[a2])
        else:
            chosen = {x for x in (split.a, split.b) if x in up_first}
            t_y = {s_inv[x] for x in chosen}
            r_y = {c_second} | ({a2, b2} - t_y)
            s_second = rec(second, r_y, t_y)
        S = up_first | _up(second, s_second)
    elif v in (split.a, split.b):
        a = v
        b = split.b if a == split.a else split.a
        for child in (bx, by):
            ci = inv[id(child)]
            ac, bc = ci[a], ci[b]
            if p.case_tag == 1:
                got = rec(child, [ac], child.graph.adj[ac])
            else:
                got = rec(child, _closed(child.graph, ac), [bc])
            S |= _up(child, got)
    elif p.case_tag in (4, 5) and p.w in (split.a, split.b):
        a = p.w
        b = split.b if a == split.a else split.a
        u = p.u
        holds_v = [ch for ch in (bx, by) if v in inv[id(ch)] and ch.to_parent[ch.marker] != v]
        first = holds_v[0] if holds_v else bx
        second = by if first is bx else bx
        f_inv, s_inv = inv[id(first)], inv[id(second)]
        a1, u1 = f_inv[a], f_inv[u]
        if u in T:
            s_first = rec(first, _closed(first.graph, a1), [u1])
        else:
            s_first = rec(first, _closed(first.graph, a1) | {u1}, [])
        up_first = _up(first, s_first)
        a2, b2 = s_inv[a], s_inv[b]
        if b in up_first:
            s_second = rec(second, _closed(second.graph, a2), [b2])
        else:
            s_second = rec(second, _closed(second.graph, a2) | {b2}, [])
        S = up_first | _up(second, s_second)
    else:
        raise PreconditionError("pair does not fit any case of the proper 2-cutset recursion")
    return _emit(trace, g, p, ThirdColor(tuple(sorted(S)), True))


def third_color(node: DecompNode, pair, trace: Optional[Trace] = None) -> ThirdColor:
    """Third colour of a triangle-free graph in the class, given its tree node.

    Type-2 nodes use :func:`strong_third_color_type2`; leaves use the
    basic lemmas (the full Petersen graph gives a possibly non-strong
    answer).  1-cutsets and proper 1-joins solve one block first and then
    pick the constraint for the other block from that answer.

    ``trace`` is called as ``trace(graph, pair, third_color)`` for every
    third colour produced, at every level of the recursion.
    """
    g = node.graph
    if node.kind == LEAF:
        if contains_triangle(g):
            raise PreconditionError("third colours need a triangle-free graph")
        return _leaf_color(node, pair, False, trace)
    if node.kind == TYPE2:
        return strong_third_color_type2(node, pair, trace)
    p = _admissible(g, pair)
    R, T = set(p.R), set(p.T)
    bx, by = node.children
    ix, iy = _inverse(bx), _inverse(by)
    split = node.split

    def rec(child: DecompNode, Rc: Iterable[int], Tc: Iterable[int]) -> ThirdColor:
        return third_color(child, (tuple(Rc), tuple(Tc)), trace)

    if isinstance(split, OneCutset):
        z = split.v
        RT = R | T
        hit_x, hit_y = bool(RT & set(split.X)), bool(RT & set(split.Y))
        if hit_x and hit_y:
            sx = rec(bx, _down(bx, ix, R), _down(bx, ix, T))
            sy = rec(by, _down(by, iy, R), _down(by, iy, T))
            S = _up(bx, sx.S) | _up(by, sy.S)
            strong = sx.strong and sy.strong
        else:
            first, second = (by, bx) if hit_y else (bx, by)
            fi, si = _inverse(first), _inverse(second)
            sf = rec(first, _down(first, fi, R), _down(first, fi, T))
            zs = si[z]
            if fi[z] in sf.S:
                y = min(second.graph.adj[zs])
                ss = rec(second, [y], second.graph.adj[y])
            else:
                ss = rec(second, _closed(second.graph, zs), [])
            S = _up(first, sf.S) | _up(second, ss.S)
            strong = sf.strong and ss.strong
        return _emit(trace, g, p, ThirdColor(tuple(sorted(S)), strong))

    # proper 1-join: orient so that the centre lives in the first block
    v = p.center
    X, Y, A, B = set(split.X), set(split.Y), set(split.A), set(split.B)
    if len(g.adj[v]) == 2:
        trio = set(g.adj[v]) | {v}
        if trio <= X:
            v_first = True
        elif trio <= Y:
            v_first = False
        else:
            v_first = v in B  # v stands in for the X-block marker when it lies in B
    else:
        v_first = v in X
    if v_first:
        first, second, side_f, side_o = bx, by, X, Y
    else:
        first, second, side_f, side_o = by, bx, Y, X
    fi = _inverse(first)
    y = first.marker
    t_f = {fi[x] for x in T & side_f} | ({y} if T & side_o else set())
    r_f = {fi[x] for x in R & side_f} | ({y} if R & side_o else set())
    sf = rec(first, r_f, t_f)
    xo = second.marker
    if y in sf.S:
        ss = rec(second, [xo], second.graph.adj[xo])
    else:
        ss = rec(second, _closed(second.graph, xo), [])
    S = {first.to_parent[i] for i in sf.S if i != y} | _up(second, ss.S)
    return _emit(trace, g, p, ThirdColor(tuple(sorted(S)), False))
