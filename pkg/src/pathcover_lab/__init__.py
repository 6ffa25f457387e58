"""Exact and constructive path/cycle covers of small graphs."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    Graph6ParseError,
    GraphInputError,
    components,
    from_graph6,
    induced_subgraph,
    is_connected,
    neighborhood,
    to_graph6,
)
from .families import FamilySpec, SpecError, generate, order_and_size, parse_spec, target_family
from .freeness import family_leq, find_induced, first_contained, is_family_free, is_free, matches_characterization
from .ramsey import RamseyBound, ramsey_upper, verify_ramsey_33
from .solvers import (
    CycleSystem,
    InvalidWitness,
    PathSystem,
    cycle_cover_number,
    cycle_partition_number,
    greedy_cycle_partition,
    greedy_path_partition,
    has_hamiltonian_path,
    independence_number,
    maximum_independent_set,
    path_cover_number,
    path_partition_number,
)
from .constructive import (
    CoverCertificate,
    HypothesisViolation,
    LayerDecomposition,
    alpha_sequence,
    bounded_path_cover,
    bounded_path_partition,
    decompose,
    longest_induced_path,
    spine_cover,
    spine_hamiltonian,
)
