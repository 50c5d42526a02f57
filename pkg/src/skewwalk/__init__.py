"""Closed directed walks of exact length in oriented graphs.

Construction pipeline (winding, odd-cycle and bipartite branches), extremal
generators, and an independent matrix-power verification oracle.
"""

from . import errors
from ._kernels import backend_name
from .arith import (
    ComposerCertificate,
    DivisibilityProfile,
    bezout_compose,
    bezout_qp,
    is_prime_power,
    minimal_nondivisor,
    solve_nonneg,
)
from .generators import (
    GlueSpec,
    bipartite_chorded_cycle,
    blow_up_cycle,
    glued_tournaments,
    regime_instance,
    regular_tournament,
)
from .graph import (
    DegreeSummary,
    GirthResult,
    OrientedGraph,
    bipartition,
    corollary_shen_threshold,
    degree_summary,
    directed_girth,
    load_edge_list,
    save_edge_list,
    shen_girth_bound,
    underlying_odd_girth,
)
from .oracle import BoolMatrix, cycle_length_spectrum, has_closed_walk
from .pipeline import (
    PipelineReport,
    connectors_for,
    find_closed_walk_of_length,
    find_short_path,
)
from .skew_search import LayerSystem, build_layers, find_skew_walk
from .walks import (
    ConnectorSet,
    DirectedWalk,
    MixedWalk,
    SkewWalk,
    WalkExpression,
    build_base_walks,
    compose,
    expand,
    validate_directed_walk,
    validate_mixed_walk,
    wind,
)

__version__ = "0.1.0"

__all__ = [
    "BoolMatrix",
    "ComposerCertificate",
    "ConnectorSet",
    "DegreeSummary",
    "DirectedWalk",
    "DivisibilityProfile",
    "GirthResult",
    "GlueSpec",
    "LayerSystem",
    "MixedWalk",
    "OrientedGraph",
    "PipelineReport",
    "SkewWalk",
    "WalkExpression",
    "backend_name",
    "bezout_compose",
    "bezout_qp",
    "bipartite_chorded_cycle",
    "bipartition",
    "blow_up_cycle",
    "build_base_walks",
    "build_layers",
    "compose",
    "connectors_for",
    "corollary_shen_threshold",
    "cycle_length_spectrum",
    "degree_summary",
    "directed_girth",
    "errors",
    "expand",
    "find_closed_walk_of_length",
    "find_short_path",
    "find_skew_walk",
    "glued_tournaments",
    "has_closed_walk",
    "is_prime_power",
    "load_edge_list",
    "minimal_nondivisor",
    "regime_instance",
    "regular_tournament",
    "save_edge_list",
    "shen_girth_bound",
    "solve_nonneg",
    "underlying_odd_girth",
    "validate_directed_walk",
    "validate_mixed_walk",
    "wind",
]
