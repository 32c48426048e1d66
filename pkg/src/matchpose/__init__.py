"""Factor-components, canonical partition and component order of graphs
with perfect matchings, with brute-force oracles for cross-certification."""

from .blossom import (
    MatchingResult,
    Sbt,
    allowed_edges_at,
    balanced_reachable,
    build_max_sbt,
    maximum_matching,
    saturated_reachable,
)
from .decomposition import (
    FactorDecomposition,
    components_of_edges,
    decompose,
    is_elementary,
    is_separating,
)
from .errors import (
    DifferentComponentsError,
    DuplicateEdgeError,
    EmptySetError,
    GraphError,
    InconsistentDecompositionError,
    MatchingError,
    MatchposeError,
    NotAPathError,
    NotFactorizableError,
    NotFoundError,
    NotNearPerfectError,
    NotPerfectError,
    ParseError,
    PreconditionViolatedError,
    RootNotExposedError,
    SelfLoopError,
    TooLargeError,
    VertexRangeError,
)
from .graph import (
    AltPath,
    AltPathKind,
    ContractedGraph,
    Graph,
    Matching,
    build_graph,
    build_matching,
    classify_alternating_path,
    contract,
    edge_key,
    induced_subgraph,
    neighbors_of_set,
)
from .partition import CanonicalPartition, generalized_partition, gsim
from .poset import (
    ComponentPoset,
    augment_to_order,
    build_poset,
    covering_pairs,
    is_leq,
    is_minimal,
    upper_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AltPath",
    "AltPathKind",
    "CanonicalPartition",
    "ComponentPoset",
    "ContractedGraph",
    "FactorDecomposition",
    "Graph",
    "Matching",
    "MatchingResult",
    "Sbt",
    "allowed_edges_at",
    "augment_to_order",
    "balanced_reachable",
    "build_graph",
    "build_matching",
    "build_max_sbt",
    "build_poset",
    "classify_alternating_path",
    "components_of_edges",
    "contract",
    "covering_pairs",
    "decompose",
    "edge_key",
    "generalized_partition",
    "gsim",
    "induced_subgraph",
    "is_elementary",
    "is_leq",
    "is_minimal",
    "is_separating",
    "maximum_matching",
    "neighbors_of_set",
    "saturated_reachable",
    "upper_bounds",
    "__version__",
]
