"""Toric vanishing ideals of tree-derived Gaussian models, over exact rationals."""

from .binomials import Binomial, coord_var, monomial, parse_binomial, var_name
from .classify import (
    NONE,
    THM_BLOCK_UNCOLORED,
    THM_COLORED_COMPLETE,
    THM_MAIN,
    ClassificationReport,
    classify,
    contract_internal_colors,
)
from .errors import (
    GraphError,
    NotApplicableError,
    SamplingError,
    SingularMatrixError,
    TreeError,
)
from .graphs import (
    ColoredGraph,
    completion,
    derive_graph,
    four_point_check,
    is_block_graph,
    is_vertex_regular,
    one_clique_separated_quadruples,
    star_decomposition,
    vertex_regular_via_parents,
)
from .ideals import (
    block_minor_binomials,
    cherry_binomials,
    combined_generators,
    completion_binomials,
    embed_to_p,
    embed_to_q,
)
from .laplacians import (
    CoordinateMap,
    g_derived_laplacian_map,
    gamma_graph,
    gamma_laplacian,
    reduced_laplacian_map,
)
from .matrices import (
    MatrixPattern,
    SymMatrix,
    det_exact,
    invert_exact,
    jordan_product,
    pattern_contains,
    pattern_from_graph,
    pattern_from_tree,
    sample_point,
)
from .monomials import MonomialMap, exponent_rank, path_map
from .pipeline import (
    VerificationReport,
    build_context,
    dimension_report,
    forward_vanishing,
    kernel_membership,
    roundtrip_parametrization,
    verify_tree,
)
from .trees import ColoredTree, load_tree, parse_tree

__all__ = [name for name in dir() if not name.startswith("_")]
