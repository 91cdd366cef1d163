"""Transitive path decompositions of Cartesian products of complete graphs.

The package builds decompositions of the rook's graph K_n box K_m whose
blocks form a single orbit under a group of automorphisms, and verifies
every structural claim by independent recomputation.
"""

from .decompose import (
    CompleteGraph,
    Decomposition,
    Fixture,
    LabelEdge,
    NecessaryConditions,
    NotOddPrime,
    PartitionCheck,
    PreconditionFailed,
    Subgraph,
    TransversalCheck,
    VerificationReport,
    build_orbit_decomposition,
    diagonal_fixture_n4,
    gallai_check,
    haggkvist_split,
    is_odd_prime,
    is_path_subgraph,
    k9_fixture,
    necessary_conditions,
    orbit_transversal_check,
    partition_witnesses,
    staircase_decomposition,
    subgraphs_isomorphic,
    verify_decomposition,
)
from .grid import (
    DimensionError,
    EdgeKind,
    GridEdge,
    GridGraph,
    GridVertex,
    Step,
    classify_edge,
    edge_difference,
    make_grid,
)
from .groups import (
    EdgeOrbit,
    FiniteGroup,
    GroupTooLarge,
    OrbitCensus,
    Permutation,
    automorphism_violation,
    diagonal_shift,
    edge_image,
    edge_orbits,
    explicit_permutation,
    fixed_edge_witness,
    generate_group,
    identity_permutation,
    is_semiregular_on_edges,
    orbit_census,
    permutation_from_cycles,
    row_shift,
    same_orbit_row_shift,
)
from .serialize import (
    SchemaError,
    blocks_to_text,
    decomposition_to_json,
    dot_for_blocks,
    edges_to_text,
    export_dot,
    parse_decomposition,
)
from .staircase import (
    ConstructionInvalid,
    Walk,
    build_staircase_path,
    first_orbit_conflict,
    first_repeated_vertex,
    is_path,
    one_edge_per_orbit,
    partial_stretch_sum,
    staircase_array,
    stretch,
    walk_from_array,
)

__version__ = "0.1.0"

__all__ = [
    "CompleteGraph",
    "ConstructionInvalid",
    "Decomposition",
    "DimensionError",
    "EdgeKind",
    "EdgeOrbit",
    "FiniteGroup",
    "Fixture",
    "GridEdge",
    "GridGraph",
    "GridVertex",
    "GroupTooLarge",
    "LabelEdge",
    "NecessaryConditions",
    "NotOddPrime",
    "OrbitCensus",
    "PartitionCheck",
    "Permutation",
    "PreconditionFailed",
    "SchemaError",
    "Step",
    "Subgraph",
    "TransversalCheck",
    "VerificationReport",
    "Walk",
    "automorphism_violation",
    "blocks_to_text",
    "build_orbit_decomposition",
    "build_staircase_path",
    "classify_edge",
    "decomposition_to_json",
    "diagonal_fixture_n4",
    "diagonal_shift",
    "dot_for_blocks",
    "edge_difference",
    "edge_image",
    "edge_orbits",
    "edges_to_text",
    "explicit_permutation",
    "export_dot",
    "first_orbit_conflict",
    "first_repeated_vertex",
    "fixed_edge_witness",
    "gallai_check",
    "generate_group",
    "haggkvist_split",
    "identity_permutation",
    "is_odd_prime",
    "is_path",
    "is_path_subgraph",
    "is_semiregular_on_edges",
    "k9_fixture",
    "make_grid",
    "necessary_conditions",
    "one_edge_per_orbit",
    "orbit_census",
    "orbit_transversal_check",
    "parse_decomposition",
    "partial_stretch_sum",
    "partition_witnesses",
    "permutation_from_cycles",
    "row_shift",
    "same_orbit_row_shift",
    "staircase_array",
    "staircase_decomposition",
    "stretch",
    "subgraphs_isomorphic",
    "verify_decomposition",
    "walk_from_array",
]
