"""Exact boxicity machinery for small graphs.

Immutable graph values, interval/cointerval recognition with certificates,
exact boxicity through minimum cointerval edge coverings of the complement,
explicit cover constructions for Mycielski graphs, and calculators for the
related bounds (edge clique cover, chromatic number, focal-vertex bounds).
"""

from .errors import CapacityError, NotIntervalError, SelfCheckError
from .graphs import (
    INFINITY,
    MAX_VERTICES,
    Graph,
    complement,
    connected_components,
    disjoint_union,
    distance,
    focal_vertices,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent,
    join,
    subgraph_distance,
    to_dot,
)
from .generators import (
    MycielskiLayout,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    focalize,
    gen_family,
    mycielski,
    path_graph,
    star_graph,
)
from .intervals import (
    IntervalRep,
    RecognitionResult,
    chordal_at_free_oracle,
    interval_representation,
    is_cointerval,
    is_interval,
    maximal_cliques,
)
from .engine import (
    DEFAULT_COMPLEMENT_EDGE_CAP,
    BoxRep,
    BoxicityResult,
    CointervalCover,
    EdgeSet,
    Verdict,
    cover_to_box_representation,
    exact_boxicity,
    format_cover,
    matching_bound_detail,
    matching_lower_bound,
    maximal_cointerval_family,
    pair_lower_bound,
    parse_cover,
    verify_box_representation,
    verify_cointerval_cover,
)
from .bounds import (
    BoundsReport,
    ChromaticBoxicityCheck,
    CliqueCover,
    MultipartiteMycielskiBounds,
    chromatic_boxicity_check,
    chromatic_number,
    compute_bounds_report,
    edge_clique_cover,
    even_focal_surcharge,
    multipartite_mycielski_bounds,
    mycielski_kn_boxicity,
    mycielski_lower_bound,
    mycielski_upper_bound,
    verify_clique_cover,
)
from .constructions import (
    ConstructionPlan,
    complete_mycielski_cover,
    construction_plan,
    mycielski_cover,
)

__all__ = [
    "BoundsReport",
    "BoxRep",
    "BoxicityResult",
    "CapacityError",
    "ChromaticBoxicityCheck",
    "CliqueCover",
    "CointervalCover",
    "ConstructionPlan",
    "DEFAULT_COMPLEMENT_EDGE_CAP",
    "EdgeSet",
    "Graph",
    "INFINITY",
    "IntervalRep",
    "MAX_VERTICES",
    "MultipartiteMycielskiBounds",
    "MycielskiLayout",
    "NotIntervalError",
    "RecognitionResult",
    "SelfCheckError",
    "Verdict",
    "chordal_at_free_oracle",
    "chromatic_boxicity_check",
    "chromatic_number",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "complete_mycielski_cover",
    "compute_bounds_report",
    "connected_components",
    "construction_plan",
    "cover_to_box_representation",
    "cycle_graph",
    "disjoint_union",
    "distance",
    "edge_clique_cover",
    "empty_graph",
    "even_focal_surcharge",
    "exact_boxicity",
    "focal_vertices",
    "focalize",
    "format_cover",
    "gen_family",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "interval_representation",
    "is_clique",
    "is_cointerval",
    "is_connected",
    "is_independent",
    "is_interval",
    "join",
    "matching_bound_detail",
    "matching_lower_bound",
    "maximal_cliques",
    "maximal_cointerval_family",
    "multipartite_mycielski_bounds",
    "mycielski",
    "mycielski_cover",
    "mycielski_kn_boxicity",
    "mycielski_lower_bound",
    "mycielski_upper_bound",
    "pair_lower_bound",
    "parse_cover",
    "path_graph",
    "star_graph",
    "subgraph_distance",
    "to_dot",
    "verify_box_representation",
    "verify_clique_cover",
    "verify_cointerval_cover",
]
