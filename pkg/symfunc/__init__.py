from symfunc.expansion import (
    SymmetricFunction,
    complete_homogeneous,
    homogeneous_to_monomial,
    power_product_to_monomial,
    power_sum,
    power_to_monomial,
    scalar_product_ph,
)

__all__ = [
    "SymmetricFunction", "complete_homogeneous", "homogeneous_to_monomial",
    "power_product_to_monomial", "power_sum", "power_to_monomial", "scalar_product_ph",
]
