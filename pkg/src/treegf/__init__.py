"""Subtree generating functions and subtree counts of weighted trees."""

from .errors import (
    BadParameters,
    BranchTooLarge,
    LegTooShort,
    MixedRings,
    NotATree,
    NotLive,
    NotNeighbor,
    NotPendant,
    NotPendantPath,
    ParseError,
    SameVertex,
    TooLarge,
    TreeGFError,
    VertexOutOfRange,
)
from .genfunc import (
    SubtreeProfile,
    WeightMode,
    apply_mode,
    closed_path_gf,
    closed_path_rooted_gf,
    closed_star_gf,
    contract_all,
    pair_count,
    pair_gf,
    pair_profile,
    path_count,
    rooted_count,
    rooted_gf,
    rooted_profile,
    size_profile,
    star_count,
    subtree_count,
    total_gf,
)
from .ring import X, Y, Poly2
from .tree import (
    ContractionState,
    WeightedTree,
    build_tree,
    contract_pendant,
    degree,
    diameter,
    max_degree,
    path_between,
    reduce_tree,
)

__version__ = "0.1.0"
