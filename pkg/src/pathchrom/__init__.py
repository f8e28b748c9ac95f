"""Exact path-chromatic numbers, path/tree-decompositions, and the row-product
and Mycielski constructions, with certificate-producing claim checks."""

from .coloring import Coloring, ColorOracle, chromatic_decision, chromatic_number, greedy_bound
from .constructions import (
    LabeledGraph,
    MycielskiLabel,
    RmLabel,
    RProduct,
    block,
    embed_into_block,
    mu_enumeration,
    mycielski,
    mycielski_embedding,
    r_product,
    star_decomposition_rm_cycle,
)
from .decomposition import (
    PathDecomposition,
    TreeDecomposition,
    decomposition_chromatic_number,
    enumeration_chromatic_number,
    enumeration_from_path_decomposition,
    is_special_enumeration,
    path_decomposition_from_enumeration,
    validate_path_decomposition,
    validate_tree_decomposition,
)
from .dp import (
    DpReport,
    bag_of_prefix,
    brute_force_path_chromatic,
    exists_special_enumeration,
    path_chromatic_at_most,
    path_chromatic_number,
)
from .errors import (
    InvalidParameterError,
    InvalidStructureError,
    InvalidVertexError,
    ParseError,
    PathChromError,
    PreconditionError,
    SizeLimitError,
)
from .graph import (
    Graph,
    check_induced_embedding,
    closed_neighborhood,
    induced_subgraph,
    is_triangle_free,
    make_complete,
    make_cycle,
    vertex_connectivity,
)
from .io import parse_dimacs, write_dimacs

__version__ = "0.1.0"
