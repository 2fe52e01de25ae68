"""Integer-magic spectra of finite trees.

Computes, for any tree, the closed-form set of moduli h admitting an edge
labeling into nonzero residues mod h with constant vertex sums, constructs
explicit labelings, and cross-checks everything against brute-force search.
"""

from .errors import (
    CycleDetectedError,
    DegenerateTreeError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyInputError,
    InternalError,
    LabelEdgeMismatchError,
    MalformedLineError,
    NotInSpectrumError,
    NTooLargeError,
    ParseError,
    SearchBudgetExceededError,
    SelfLoopError,
    TreeMagicError,
    UnknownVertexError,
)
from .layers import (
    Center,
    LayeredTree,
    check_partition_identity,
    diameter_and_center,
    diameter_and_center_double_bfs,
    layer_decomposition,
    layered_tree,
    partition_identity_violations,
)
from .oracle import (
    DEFAULT_CAP,
    MAGIC,
    NOT_MAGIC,
    UNKNOWN,
    OracleVerdict,
    VerifyResult,
    enumerate_magic_labelings,
    is_h_magic_bruteforce,
    verify_labeling,
)
from .spectrum import (
    CO_DIVISORS,
    EMPTY,
    TRIVIALLY_MAGIC,
    UNION_OF_MULTIPLES,
    ForcedLabeling,
    MagicLabeling,
    SpectrumDescription,
    construct_labeling,
    describe_spectrum,
    divides_some,
    find_witness,
    follows_forced_pattern,
    forced_labeling,
    sigma,
    spectrum,
    spectrum_contains,
    witness_table,
)
from .tree import Tree, format_edge_list, parse_tree, path_between
from .treegen import (
    MAX_EXHAUSTIVE_N,
    all_labeled_trees,
    code_from_tree,
    random_tree,
    tree_from_code,
)

__version__ = "0.1.0"

__all__ = [
    "Tree", "parse_tree", "path_between", "format_edge_list",
    "Center", "LayeredTree", "diameter_and_center", "diameter_and_center_double_bfs",
    "layer_decomposition", "layered_tree", "check_partition_identity",
    "partition_identity_violations",
    "ForcedLabeling", "MagicLabeling", "SpectrumDescription",
    "forced_labeling", "sigma", "divides_some", "spectrum", "describe_spectrum",
    "spectrum_contains", "find_witness", "witness_table", "construct_labeling",
    "follows_forced_pattern",
    "EMPTY", "CO_DIVISORS", "UNION_OF_MULTIPLES", "TRIVIALLY_MAGIC",
    "OracleVerdict", "VerifyResult", "verify_labeling", "is_h_magic_bruteforce",
    "enumerate_magic_labelings", "DEFAULT_CAP", "MAGIC", "NOT_MAGIC", "UNKNOWN",
    "random_tree", "all_labeled_trees", "tree_from_code", "code_from_tree",
    "MAX_EXHAUSTIVE_N",
    "TreeMagicError", "ParseError", "EmptyInputError", "MalformedLineError",
    "SelfLoopError", "DuplicateEdgeError", "CycleDetectedError", "DisconnectedError",
    "UnknownVertexError", "DegenerateTreeError", "NotInSpectrumError", "InternalError",
    "LabelEdgeMismatchError", "NTooLargeError", "SearchBudgetExceededError",
]
