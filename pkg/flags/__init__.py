from flags.flag import Flag, permutation_matrix, relative_position
from flags.group_element import GroupElementSpec, all_specs, build_group_element
from flags.counting import count_Y, enumerate_flags, flag_count, position_histogram
from flags.hecke import hecke_operator, hecke_relations_check, trace_identity_check

__all__ = [
    "Flag", "permutation_matrix", "relative_position",
    "GroupElementSpec", "all_specs", "build_group_element",
    "count_Y", "enumerate_flags", "flag_count", "position_histogram",
    "hecke_operator", "hecke_relations_check", "trace_identity_check",
]
