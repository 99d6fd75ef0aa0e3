from finite_field.field import (
    MAX_ORDER,
    FieldElement,
    FiniteField,
    field_of_order,
    is_prime_power,
    make_field,
    split_prime_power,
)
from finite_field.matrix import MatrixGF, intersection_dim, row_reduce

__all__ = [
    "MAX_ORDER", "FieldElement", "FiniteField", "field_of_order", "is_prime_power",
    "make_field", "split_prime_power", "MatrixGF", "intersection_dim", "row_reduce",
]
