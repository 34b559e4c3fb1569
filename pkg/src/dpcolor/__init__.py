"""Exact DP-coloring (correspondence coloring) toolkit for small graphs."""

from .bounds import (
    BoundReport,
    SigmaTable,
    Theorem1Instance,
    bound_comparison,
    sigma_table,
    theorem1_check,
    zdp_exact_small,
    zdp_n_upper_bound,
    zdp_upper_bound,
)
from .cover import (
    Cover,
    NormalizedCover,
    ResourceLimitExceeded,
    cover_from_text,
    cover_to_text,
    enumerate_covers,
    find_coloring,
    h0_cover,
    normalize,
    validate_cover,
)
from .formats import ParseError, from_edge_list, from_graph6, parse_graph, to_edge_list, to_graph6
from .graph import (
    Graph,
    chordal_peo,
    chromatic_number,
    classify_chi_n_minus_2,
    coloring_number,
    delete_vertex,
    induced_subgraph,
    is_isomorphic,
    is_simplicial,
    join,
    make_complete,
    make_cycle,
    make_path,
)
from .solver import BadCoverCertificate, Caps, DpResult, all_covers_colorable, dp_chromatic, falsify

__version__ = "0.1.0"
