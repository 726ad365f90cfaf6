"""Proper decomposition trees and recognition of the class."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from ..graph import Graph, connected_components, induced_subgraph, is_connected
from .basic import classify_connected
from .splits import blocks, check_proper_1join, find_1cutset_connected, find_1join, find_proper_2cutset
from .types import BasicKind, NotInC, OneCutset, OneJoin, PreconditionError, ProperTwoCutset, Split

__all__ = ["DecompNode", "DecompTree", "Recognition", "build_proper_tree", "recognize"]

LEAF, TYPE1, TYPE2 = "leaf", "type1", "type2"


@dataclass(eq=False)
class DecompNode:
    """One node of a proper decomposition tree.

    ``to_root[i]`` is the input-graph node that node ``i`` of ``graph``
    descends from, ``None`` for synthetic markers.  ``to_parent`` plays
    the same role relative to the parent node's graph.
    """

    id: int
    graph: Graph
    to_parent: tuple[Optional[int], ...]
    to_root: tuple[Optional[int], ...]
    marker: Optional[int] = None
    marker_is_real: bool = False
    kind: str = LEAF
    basic: Optional[BasicKind] = None
    split: Optional[Split] = None
    children: list["DecompNode"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind,
            "n": self.graph.n,
            "nodes": list(self.to_root),
            "split": None if self.split is None else self.split.to_json(),
            "marker": None if self.marker is None else {"node": self.marker, "is_real": self.marker_is_real},
            "children": [c.to_json() for c in self.children],
            "leaf_basic_kind": None if self.basic is None else self.basic.to_json(),
        }


@dataclass(eq=False)
class DecompTree:
    root: DecompNode
    nodes: list[DecompNode]  # preorder, ids 0..size-1

    @property
    def size(self) -> int:
        return len(self.nodes)

    def to_json(self) -> dict[str, Any]:
        return self.root.to_json()


def _decompose_one(g: Graph) -> Union[BasicKind, Split, NotInC]:
    """One step of the tree algorithm on a connected graph, in priority order."""
    basic = classify_connected(g)
    if basic is not None:
        return basic
    cut = find_1cutset_connected(g, balanced=True)
    if cut is not None:
        return cut
    join = find_1join(g)
    if join is not None:
        return check_proper_1join(g, join)
    return find_proper_2cutset(g, check_preconditions=False)


def build_proper_tree(g: Graph) -> Union[DecompTree, NotInC]:
    """Build a proper decomposition tree of the connected graph ``g``.

    Each graph is handled in the fixed order: basic graphs become leaves,
    then a 1-cutset, then a 1-join (rejecting ``g`` when it is not
    proper), then a proper 2-cutset (which may itself reject ``g``).
    Children are listed X-block first.  A rejection found anywhere is
    returned with its witness mapped back to ``g``.

    Raises
    ------
    PreconditionError
        If ``g`` is empty or disconnected.
    """
    if not is_connected(g):
        raise PreconditionError("build_proper_tree needs a connected graph")
    return _build(g)


def _build(g: Graph) -> Union[DecompTree, NotInC]:
    ident = tuple(range(g.n))
    root = DecompNode(0, g, ident, ident)
    stack = [root]
    while stack:
        node = stack.pop()
        step = _decompose_one(node.graph)
        if isinstance(step, NotInC):
            return NotInC(step.step, step.reason, step.witness, node.to_root)
        if not isinstance(step, (OneCutset, OneJoin, ProperTwoCutset)):
            node.basic = step
            continue
        node.split = step
        node.kind = TYPE2 if isinstance(step, ProperTwoCutset) else TYPE1
        for blk in blocks(node.graph, step, mode="proper"):
            child = DecompNode(
                -1,
                blk.graph,
                blk.to_parent,
                tuple(None if p is None else node.to_root[p] for p in blk.to_parent),
                blk.marker,
                blk.marker_is_real,
            )
            node.children.append(child)
        stack.extend(reversed(node.children))
    # assign preorder ids
    ordered: list[DecompNode] = []
    walk = [root]
    while walk:
        nd = walk.pop()
        nd.id = len(ordered)
        ordered.append(nd)
        walk.extend(reversed(nd.children))
    return DecompTree(root, ordered)


@dataclass
class Recognition:
    """Outcome of :func:`recognize`; truthy iff the graph is in the class.

    ``trees`` holds ``(component_nodes, tree)`` for every component when
    the graph is accepted.  ``verdict`` is the first rejection found,
    with its witness in input-graph ids, and ``component`` the nodes of
    the component that produced it.
    """

    in_c: bool
    trees: list[tuple[list[int], DecompTree]]
    verdict: Optional[NotInC] = None
    component: Optional[list[int]] = None

    def __bool__(self) -> bool:
        return self.in_c

    def to_json(self) -> dict[str, Any]:
        if not self.in_c:
            assert self.verdict is not None
            out = self.verdict.to_json()
            out["component"] = self.component
            return out
        return {"verdict": "IN_C", "components": [comp for comp, _ in self.trees]}


def recognize(g: Graph) -> Recognition:
    """Decide whether ``g`` has no cycle with a unique chord.

    Each connected component is decomposed separately; ``g`` is in the
    class iff all of its components are.

    Examples
    --------
    >>> from unichord.compose import make_heawood
    >>> bool(recognize(make_heawood()))
    True
    """
    trees = []
    for comp in connected_components(g):
        sub, remap = induced_subgraph(g, comp) if len(comp) < g.n else (g, tuple(range(g.n)))
        res = _build(sub)
        if isinstance(res, NotInC):
            lifted = NotInC(res.step, res.reason, res.witness, tuple(None if v is None else remap[v] for v in res.origin))
            return Recognition(False, [], lifted, comp)
        trees.append((comp, res))
    return Recognition(True, trees)
