"""Decomposition trees of biconnected graphs by single 2-cutsets, and what they decide."""

from .connectivity import (
    Cutset,
    CutsetFamily,
    enumerate_cutsets,
    independent,
    is_biconnected,
    is_k_connected,
    separates,
    single_cutsets,
    splits,
    verify_family,
)
from .decomposition import (
    BLOCK,
    BlockCutTree,
    Cycle,
    DecompositionTree,
    Part,
    PartKind,
    augment,
    block_cut_tree,
    bt_tree,
    classify_part,
    decomposition_tree,
    nonsingle_from_cycles,
    parts,
    tree_separation,
)
from .errors import BudgetError, DomainError, InvariantViolation, ParseError
from .graph import Graph, add_edge, components, degree, delete, induced, neighborhood

__version__ = "0.1.0"
