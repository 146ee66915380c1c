"""Boxicity of circular-arc graphs: exact for co-bipartite CA graphs,
``2k + 1`` for arbitrary CA models and ``k + 2`` for normal models."""

from .approx import (
    approx_box_rep,
    approx_box_rep_nca,
    approx_dimension,
    approx_dimension_nca,
    approx_with_point,
    double_representation,
)
from .arcs import (
    ArcModel,
    NumberedPartition,
    arcs_through_point,
    build_model_from_numbering,
    check_biconsecutive,
    cut_model_at_point,
    find_normal_point,
    find_two_point_cover,
    has_circle_cover_pair,
    is_normal,
    numbering_scheme,
)
from .arcs import derive_graph as derive_arc_graph
from .cobip import (
    ChainCover,
    NonEdgeColoring,
    boxicity_cobip,
    compute_next,
    extract_chain_cover,
    greedy_color_fast,
    greedy_color_naive,
    longest_chain_length,
    precedes,
)
from .errors import CaboxError, InvalidInputError, PreconditionError
from .graph import CliquePartition, Graph, complement, cross_non_edges, induced_subgraph, intersect_all
from .intervals import (
    BoxRepresentation,
    IntervalModel,
    chain_complement_model,
    extend_on,
    full_overlap_model,
    is_interval,
    recognize_interval,
)
from .intervals import derive_graph as derive_interval_graph
from .oracle import exact_boxicity_bruteforce, exact_chi_hstar_bruteforce, validate_box_rep

__version__ = "0.1.0"
