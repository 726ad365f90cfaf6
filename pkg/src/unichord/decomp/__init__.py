"""Basic-class detection, splits, decomposition trees and recognition."""

from .basic import classify_basic, is_induced_subgraph_of_fixed, long_hole_order, petersen_automorphisms
from .splits import (
    Block,
    blocks,
    check_proper_1join,
    find_1cutset,
    find_1join,
    find_2cutset,
    find_proper_2cutset,
    is_valid_1join,
)
from .tree import DecompNode, DecompTree, Recognition, build_proper_tree, recognize
from .types import (
    BasicKind,
    CertificateError,
    Clique,
    HeawoodSub,
    LongHole,
    NotInC,
    OneCutset,
    OneJoin,
    PetersenSub,
    PreconditionError,
    ProperOneJoin,
    ProperTwoCutset,
    Split,
    Strongly2Bipartite,
)
