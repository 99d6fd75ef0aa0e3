from combinatorics.partitions import Partition, all_partitions
from combinatorics.permutations import PermutationW, all_permutations, class_representative
from combinatorics.assignments import (
    AssignmentMap,
    UnorderedAssignment,
    collapse,
    compose_assignment,
    enumerate_P,
    fiber_decomposition,
    x_count,
    x_recursive,
)
from combinatorics.induced import induced_trivial_value

__all__ = [
    "Partition", "all_partitions",
    "PermutationW", "all_permutations", "class_representative",
    "AssignmentMap", "UnorderedAssignment", "collapse", "compose_assignment",
    "enumerate_P", "fiber_decomposition", "x_count", "x_recursive",
    "induced_trivial_value",
]
