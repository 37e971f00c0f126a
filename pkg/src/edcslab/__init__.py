"""Edge-degree constrained subgraphs: construction, verification, and instance-level
checks of their 2/3-approximation guarantee for general graphs."""

from .edcs import EdcsCheck, EdcsParams, construct_edcs, edcs_quality, params_for_epsilon, verify_edcs
from .gallai_edmonds import GEDecomposition, decompose, mark_specials, verify_ge_properties
from .graph import GeneratorConfig, Graph, edge_degree, generate, induced_subgraph, load_graph, save_graph
from .matching import (
    AlternatingComponent,
    Matching,
    brute_force_maximum_matching,
    decompose_union,
    maximal_matching,
    maximum_matching,
)
from .prooflab import ProofTrace, verify_trace

__version__ = "0.1.0"
