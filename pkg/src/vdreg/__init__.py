"""Combinatorial commutative algebra of graphs and square-free monomial ideals.

Edge ideals, Stanley-Reisner duality, Betti tables over finite prime fields,
regularity, componentwise linearity, sequential Cohen-Macaulayness, shelling
orders, and vertex decomposability with replayable traces.
"""

__version__ = "0.1.0"

from .betti import (
    BettiTable,
    betti_table,
    has_linear_resolution,
    is_componentwise_linear,
    is_sequentially_cm,
    regularity,
)
from .complexes import (
    SimplicialComplex,
    complex_stats,
    from_facets,
    independence_complex,
)
from .decomp import (
    VdResult,
    cm_witness,
    is_cohen_macaulay,
    is_shedding_vertex,
    is_vertex_decomposable,
    is_vertex_decomposable_complex,
    refute_vd_counterexample26,
    replay_vd_trace,
)
from .fixtures import (
    circulant_core,
    counterexample8,
    counterexample26,
    counterexample26_shelling_order,
)
from .graphs import (
    Graph,
    circulant,
    from_edges,
    graph_stats,
    induced_matching_number,
    maximal_independent_sets,
)
from .homology import DEFAULT_CHARS, reduced_homology_dims
from .ideals import (
    SqFreeIdeal,
    alexander_dual,
    complex_of_ideal,
    edge_ideal,
    height,
    make_ideal,
    minimal_primes,
    stanley_reisner_ideal,
)
from .reports import (
    HuntConfig,
    Report,
    hunt,
    report_counterexample1,
    report_counterexample2,
)
from .serialize import (
    betti_to_json,
    complex_from_json,
    complex_to_json,
    dump_canonical,
    graph_from_json,
    graph_to_json,
    ideal_from_json,
    ideal_to_json,
    load_document,
    shelling_order_from_json,
    shelling_order_to_json,
)
from .shelling import ShellingSearch, find_shelling, verify_shelling

__all__ = [
    "__version__",
    "BettiTable",
    "DEFAULT_CHARS",
    "Graph",
    "HuntConfig",
    "Report",
    "ShellingSearch",
    "SimplicialComplex",
    "SqFreeIdeal",
    "VdResult",
    "alexander_dual",
    "betti_table",
    "betti_to_json",
    "circulant",
    "circulant_core",
    "cm_witness",
    "complex_from_json",
    "complex_of_ideal",
    "complex_stats",
    "complex_to_json",
    "counterexample8",
    "counterexample26",
    "counterexample26_shelling_order",
    "dump_canonical",
    "edge_ideal",
    "find_shelling",
    "from_edges",
    "from_facets",
    "graph_from_json",
    "graph_stats",
    "graph_to_json",
    "has_linear_resolution",
    "height",
    "hunt",
    "ideal_from_json",
    "ideal_to_json",
    "independence_complex",
    "induced_matching_number",
    "is_cohen_macaulay",
    "is_componentwise_linear",
    "is_sequentially_cm",
    "is_shedding_vertex",
    "is_vertex_decomposable",
    "is_vertex_decomposable_complex",
    "load_document",
    "make_ideal",
    "maximal_independent_sets",
    "minimal_primes",
    "reduced_homology_dims",
    "refute_vd_counterexample26",
    "regularity",
    "replay_vd_trace",
    "report_counterexample1",
    "report_counterexample2",
    "shelling_order_from_json",
    "shelling_order_to_json",
    "stanley_reisner_ideal",
    "verify_shelling",
]
