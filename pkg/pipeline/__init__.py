from pipeline.series import PointCountSeries, admissible_sizes, count_series, default_degree_bound
from pipeline.interpolation import EulerResult, euler_characteristic, fit_polynomial, solve
from pipeline.checks import (
    conjugate_pairs,
    conjugation_check,
    coxeter_check,
    eigenvalue_variants,
    proposition_check,
    proposition_pairs,
    run_case,
    verify_main_theorem,
)
from pipeline.remark import RemarkValue, dl_remark, expected_limit
from pipeline.levi import dl_character_value, levi_classes

__all__ = [
    "PointCountSeries", "admissible_sizes", "count_series", "default_degree_bound",
    "EulerResult", "euler_characteristic", "fit_polynomial", "solve",
    "conjugate_pairs", "conjugation_check", "coxeter_check", "eigenvalue_variants",
    "proposition_check", "proposition_pairs", "run_case", "verify_main_theorem",
    "RemarkValue", "dl_remark", "expected_limit",
    "dl_character_value", "levi_classes",
]
