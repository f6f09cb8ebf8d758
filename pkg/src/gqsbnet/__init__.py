"""Toolkit for undirected signed networks with a dominant group.

Classifies balance structure (structural, quasi, and generalized quasi
balance), builds the dominance-scaled Laplacian flow for a chosen dominant
subset, certifies whether the flow polarizes asymmetrically by a spectral
and effective-resistance test, and simulates or predicts the final opinion
profile.  A small CLI drives the same pipeline from edge-list files.
"""

__version__ = "0.1.0"

from .errors import (
    BadGamma,
    BadIndex,
    BadPartition,
    BadStep,
    DimensionMismatch,
    DuplicateEdge,
    GqsbError,
    MissingDataset,
    NoConvergence,
    NotGQSB,
    NotPolarizing,
    NotSymmetric,
    ParseError,
    SelfLoop,
    TooLarge,
    ZeroWeight,
)
from .signed_graph import (
    GQSB,
    QSB,
    SB,
    UNBALANCED,
    Bipartition,
    IncidenceMatrix,
    NeighborSets,
    SignDecomposition,
    SignedGraph,
    bipartition_from_dominant,
    chromatic_number,
    classify,
    condense_positive_components,
    connected_components,
    enumerate_gqsb_bipartitions,
    incidence_matrix,
    is_qsb,
    is_structurally_balanced,
    neighbor_sets,
    positive_components,
    spanning_forest,
    subgraph_by_sign,
    validate_gqsb,
)
from .operators import (
    OperatorBundle,
    gauge_matrices,
    generalized_adjacency,
    generalized_degree,
    generalized_laplacian,
    opposing_laplacian,
    repelling_laplacian,
    z_transform_network,
)
from .spectral import (
    EigenDecomposition,
    PolarizationCertificate,
    Verdict,
    certify,
    default_zero_tol,
    effective_resistance,
    pseudoinverse,
    psd_simple_zero,
    sym_eigen,
)
from .dynamics import (
    DIVERGENCE_LIMIT,
    OutcomeKind,
    OutcomeReport,
    Termination,
    Trajectory,
    assess,
    closed_form_state,
    default_step,
    integrate,
    predict_final,
)
from .fileio import (
    DATA_DIR_ENV,
    Report,
    ScenarioConfig,
    dump_network,
    highland_path,
    load_highland,
    load_network,
    load_state_file,
    loads_network,
    report_to_json,
    run_pipeline,
    trajectory_to_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
