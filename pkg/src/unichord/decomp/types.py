"""Witness types shared by the decomposition code and its consumers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, ClassVar, Optional, Union

Nodes = tuple[int, ...]


class PreconditionError(ValueError):
    """An operation was called on a graph outside its documented input contract."""


class CertificateError(ValueError):
    """A supplied split does not certify what it claims to."""


# --- splits ------------------------------------------------------------------


@dataclass(frozen=True)
class OneCutset:
    X: Nodes
    Y: Nodes
    v: int
    kind: ClassVar[str] = "1-cutset"

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind, "X": list(self.X), "Y": list(self.Y), "v": self.v}


@dataclass(frozen=True)
class OneJoin:
    """A 1-join ``(X, Y, A, B)``; all A-B edges present, no other X-Y edges."""

    X: Nodes
    Y: Nodes
    A: Nodes
    B: Nodes
    kind: ClassVar[str] = "1-join"

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind, "X": list(self.X), "Y": list(self.Y), "A": list(self.A), "B": list(self.B)}


@dataclass(frozen=True)
class ProperOneJoin(OneJoin):
    kind: ClassVar[str] = "proper-1-join"


@dataclass(frozen=True)
class ProperTwoCutset:
    X: Nodes
    Y: Nodes
    a: int
    b: int
    kind: ClassVar[str] = "proper-2-cutset"

    def to_json(self) -> dict[str, Any]:
        return {"type": self.kind, "X": list(self.X), "Y": list(self.Y), "a": self.a, "b": self.b}


Split = Union[OneCutset, ProperOneJoin, ProperTwoCutset]


# --- basic classes -------------------------------------------------------------


@dataclass(frozen=True)
class Clique:
    size: int
    name: ClassVar[str] = "clique"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.name, "size": self.size}


@dataclass(frozen=True)
class LongHole:
    cycle: Nodes  # nodes in cyclic order

    name: ClassVar[str] = "long-hole"

    @property
    def length(self) -> int:
        return len(self.cycle)

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.name, "length": self.length, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class Strongly2Bipartite:
    X: Nodes  # degree-2 side
    Y: Nodes  # degree >= 3 side
    name: ClassVar[str] = "strongly-2-bipartite"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.name, "X": list(self.X), "Y": list(self.Y)}


@dataclass(frozen=True)
class PetersenSub:
    embedding: Nodes  # embedding[v] = Petersen node (a1..a5 = 0..4, b1..b5 = 5..9)
    name: ClassVar[str] = "petersen-sub"

    @property
    def is_full(self) -> bool:
        return len(self.embedding) == 10

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.name, "embedding": list(self.embedding)}


@dataclass(frozen=True)
class HeawoodSub:
    embedding: Nodes  # embedding[v] = Heawood node (a1..a14 = 0..13)
    name: ClassVar[str] = "heawood-sub"

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.name, "embedding": list(self.embedding)}


BasicKind = Union[Clique, LongHole, Strongly2Bipartite, PetersenSub, HeawoodSub]


# --- verdicts ------------------------------------------------------------------


@dataclass(frozen=True)
class NotInC:
    """Proof-carrying rejection.

    ``step`` names the algorithm step that fired.  ``witness`` holds node
    ids of the graph the step ran on; ``origin`` maps those ids back to
    the input graph (``None`` for synthetic marker nodes).
    """

    step: str
    reason: str
    witness: dict[str, Any] = field(default_factory=dict)
    origin: Optional[tuple[Optional[int], ...]] = None

    def root_witness(self) -> dict[str, Any]:
        if self.origin is None:
            return dict(self.witness)

        def lift(x: Any) -> Any:
            if isinstance(x, int):
                return self.origin[x]
            if isinstance(x, (list, tuple)):
                return [lift(y) for y in x]
            return x

        return {k: lift(v) for k, v in self.witness.items()}

    def to_json(self) -> dict[str, Any]:
        return {"verdict": "NOT_IN_C", "step": self.step, "reason": self.reason, "witness": self.root_witness()}
