"""Admissible pairs ``(R, T)``: the colouring constraints around a centre node.

A third colour ``S`` respecting a pair must contain every node of ``T``
and no node of ``R``.  The five patterns, for a centre ``v``:

1. ``T = N(v)``, ``R = {v}``
2. ``T = {}``, ``R = N[v]``
3. ``v`` of degree 2, ``N(v) = {u, w}``: ``T = {u}``, ``R = {v, w}``
4. as 3 but ``R = N[w]``
5. ``v`` of degree 2: ``T = {}``, ``R = {u} | N[w]``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional

from ..graph import Graph

__all__ = ["AdmissiblePair", "admissible_pairs", "classify_pair"]


@dataclass(frozen=True)
class AdmissiblePair:
    center: int
    R: tuple[int, ...]
    T: tuple[int, ...]
    case_tag: int
    u: Optional[int] = None  # set for cases 3-5
    w: Optional[int] = None

    def to_json(self) -> dict[str, Any]:
        return {"center": self.center, "R": list(self.R), "T": list(self.T), "case": self.case_tag}


def _pair(v: int, R: Iterable[int], T: Iterable[int], tag: int, u=None, w=None) -> AdmissiblePair:
    return AdmissiblePair(v, tuple(sorted(set(R))), tuple(sorted(set(T))), tag, u, w)


def _candidates(g: Graph, v: int) -> list[AdmissiblePair]:
    nv = g.adj[v]
    out = [_pair(v, {v}, nv, 1), _pair(v, nv | {v}, (), 2)]
    if len(nv) == 2:
        p, q = sorted(nv)
        for tag in (3, 4, 5):
            for u, w in ((p, q), (q, p)):
                if tag == 3:
                    R, T = {v, w}, {u}
                elif tag == 4:
                    R, T = g.adj[w] | {w}, {u}
                else:
                    R, T = g.adj[w] | {w, u}, set()
                if not (R & T):
                    out.append(_pair(v, R, T, tag, u, w))
    return out


def admissible_pairs(g: Graph, v: int) -> list[AdmissiblePair]:
    """All admissible pairs centred at ``v``, by case then orientation.

    A node of degree other than 2 has the two pairs of cases 1 and 2; a
    node of degree 2 also gets cases 3 to 5 for both choices of ``u``
    (pairs where ``R`` and ``T`` would meet are dropped, which only
    happens next to a triangle).

    Examples
    --------
    >>> from unichord.compose import make_cycle
    >>> len(admissible_pairs(make_cycle(5), 0))
    8
    """
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} out of range for n={g.n}")
    return _candidates(g, v)


def classify_pair(g: Graph, R: Iterable[int], T: Iterable[int]) -> Optional[AdmissiblePair]:
    """Find a centre and case under which ``(R, T)`` is admissible, or ``None``.

    The centre always lies in ``R``, so only those nodes are tried, in
    increasing order.
    """
    Rs, Ts = frozenset(R), frozenset(T)
    if Rs & Ts:
        return None
    for v in sorted(Rs):
        if not 0 <= v < g.n:
            return None
        nv = g.adj[v]
        if Rs == {v} and Ts == nv:
            return _pair(v, Rs, Ts, 1)
        if not Ts and Rs == nv | {v}:
            return _pair(v, Rs, Ts, 2)
        if len(nv) != 2:
            continue
        p, q = sorted(nv)
        for u, w in ((p, q), (q, p)):
            nw = g.adj[w] | {w}
            if Ts == {u}:
                if Rs == {v, w}:
                    return _pair(v, Rs, Ts, 3, u, w)
                if Rs == nw:
                    return _pair(v, Rs, Ts, 4, u, w)
            elif not Ts and Rs == nw | {u}:
                return _pair(v, Rs, Ts, 5, u, w)
    return None
