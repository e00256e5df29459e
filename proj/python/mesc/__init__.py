"""Minimum entropy set cover toolkit.

Covering heuristics controlled by a light/heavy split parameter, an exact
branch-and-bound oracle, additive-bound certificates, minimum-entropy graph
coloring, and seeded instance generators. Everything is implemented in the
C++ extension module; this package re-exports it.
"""

from mesc._core import (
    Alpha3Stats,
    AlgorithmTrace,
    BestDelta,
    BoundCertificate,
    CapExceededError,
    Coloring,
    CoverAssignment,
    Distribution,
    EntropyDecomposition,
    ExactResult,
    GenSpec,
    Graph,
    ParseError,
    Phase,
    SetSystem,
    SplitReport,
    TheoremBound,
    TraceRecord,
    ValidationReport,
    __version__,
    approx_oracle_bound,
    avg_frequency,
    best_delta,
    biased,
    biased_coloring,
    biased_greedy,
    certify,
    coloring_entropy,
    complement,
    degree_corollary_bound,
    element_frequency,
    entropy_decomposition,
    entropy_of_cover,
    entropy_of_sizes,
    exact_min_entropy_cover,
    f_alpha3,
    greedy,
    has_independent_set,
    heuristic_largest_is_first,
    heuristic_merge_colors,
    is_fixture_id,
    is_proper,
    kl_divergence,
    light_count,
    load_fixture,
    maximal_independent_sets,
    paper_example_graph,
    random_graph,
    random_set_system,
    read_graph,
    read_set_system,
    split_light_heavy,
    theorem_bound,
    to_set_cover,
    validate,
    write_graph,
    write_set_system,
)

__all__ = [name for name in dir() if not name.startswith("_")]
