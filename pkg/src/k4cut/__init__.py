"""k4cut: make K4-free graphs bipartite by deleting at most n^2/9 edges.

Constructive, certificate-producing implementations of a family of
max-cut lower bounds for K4-free graphs, exact brute-force oracles to
check them at desk scale, a regularity-partition pipeline, seeded graph
generators, and a property-suite harness.  All guarantee comparisons
use exact integer or rational arithmetic.
"""
from k4cut.cuts import (
    Bipartition,
    BoundReport,
    DeletionCertificate,
    FourPartition,
    best_codegree_triangle,
    bipartize,
    combined_lower_bound,
    cut_value,
    four_partite_cut,
    k4free_cut,
    kr_conjectured_constant,
    neighborhood_cut,
    technical_f,
    technical_g,
    technical_h,
    triangle_4partite_cut,
)
from k4cut.errors import (
    AssumptionError,
    CapacityError,
    InputError,
    K4FoundError,
    TheoremViolation,
)
from k4cut.generators import (
    GeneratorSpec,
    SplitMix64,
    blowup,
    complete_multipartite,
    random_k4free,
    random_k4free_process,
    random_tripartite,
)
from k4cut.graph import Graph, Triangle, VertexLocalStats, format_edge_list, parse_edge_list
from k4cut.oracle import OracleResult, SweepReport, exact_max_cut, exhaustive_theorem_sweep
from k4cut.regularity import (
    PairClassification,
    Partition,
    density,
    hfree_bipartize,
    is_epsilon_regular,
    reduced_graph,
)
from k4cut.suites import SuiteConfig, regular_split_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BoundReport",
    "DeletionCertificate",
    "FourPartition",
    "GeneratorSpec",
    "Graph",
    "InputError",
    "CapacityError",
    "K4FoundError",
    "AssumptionError",
    "TheoremViolation",
    "OracleResult",
    "PairClassification",
    "Partition",
    "SplitMix64",
    "SuiteConfig",
    "SweepReport",
    "Triangle",
    "VertexLocalStats",
    "best_codegree_triangle",
    "bipartize",
    "blowup",
    "combined_lower_bound",
    "complete_multipartite",
    "cut_value",
    "density",
    "exact_max_cut",
    "exhaustive_theorem_sweep",
    "format_edge_list",
    "four_partite_cut",
    "hfree_bipartize",
    "is_epsilon_regular",
    "k4free_cut",
    "kr_conjectured_constant",
    "neighborhood_cut",
    "parse_edge_list",
    "random_k4free",
    "random_k4free_process",
    "random_tripartite",
    "reduced_graph",
    "regular_split_check",
    "run_suite",
    "technical_f",
    "technical_g",
    "technical_h",
    "triangle_4partite_cut",
]
