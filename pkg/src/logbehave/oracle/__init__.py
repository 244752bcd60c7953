"""Brute-force counters built from object definitions."""

from .direct import (
    bell_triangle,
    catalan,
    central_delannoy,
    count_cycle_graphs,
    count_franel_direct,
    count_set_partitions,
    count_sym012_matrices,
    count_t2_matrices,
    set_partitions,
)
from .paths import DEFAULT_CAP, OracleCapError, PathCountSpec, count_paths
from .permutations import (
    ascents,
    count_permutations,
    cycle_lengths,
    derangements_inclusion_exclusion,
)
from .secondary import count_secondary_direct, is_secondary_structure, secondary_structures

__all__ = [
    "bell_triangle", "catalan", "central_delannoy", "count_cycle_graphs", "count_franel_direct",
    "count_set_partitions", "count_sym012_matrices", "count_t2_matrices", "set_partitions",
    "DEFAULT_CAP", "OracleCapError", "PathCountSpec", "count_paths",
    "ascents", "count_permutations", "cycle_lengths", "derangements_inclusion_exclusion",
    "count_secondary_direct", "is_secondary_structure", "secondary_structures",
]
