"""
Exact polynomial fits of point-count series, and the Euler characteristic as
the fitted polynomial's value at 1.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict
from sympy import Poly, QQ, ZZ, interpolate, symbols

from combinatorics.permutations import PermutationW
from core.errors import ConsistencyError, DegreeBoundError, ResourceError
from core.settings import echo
from flags.group_element import GroupElementSpec
from pipeline.series import Mode, PointCountSeries, count_series, default_degree_bound

x = symbols("x")


def fit_polynomial(series: PointCountSeries) -> Poly:
    """
    Lagrange interpolation over QQ through the first D + 1 samples; the rest must
    lie on the curve, and the coefficients must be integers.
    """
    bound = series.degree_bound
    if len(series.samples) < bound + 1:
        raise ResourceError(f"{len(series.samples)} samples cannot pin down degree {bound}")
    head = series.samples[:bound + 1]
    poly = Poly(interpolate([(size, count) for size, count in head], x), x, domain=QQ)
    for size, count in series.samples[bound + 1:]:
        if poly.eval(size) != count:
            raise DegreeBoundError(
                f"degree <= {bound} fit of {series.w} / {series.spec} predicts {poly.eval(size)} "
                f"at Q={size}, counted {count}", degree_bound=bound)
    if any(not c.is_integer for c in poly.all_coeffs()):
        raise ConsistencyError(f"point counts of {series.w} / {series.spec} fit {poly.as_expr()}, "
                               f"which has non-integer coefficients")
    return Poly(poly.as_expr(), x, domain=ZZ)


def poly_coefficients(poly: Poly) -> list[int]:
    """Integer coefficients, constant term first"""
    return [int(c) for c in reversed(poly.all_coeffs())]


class EulerResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    series: PointCountSeries
    poly: list[int]
    chi: int


def solve(w: PermutationW, spec: GroupElementSpec, mode: Mode = "cross-size",
          degree_bound: Optional[int] = None, q: Optional[int] = None,
          budget: Optional[int] = None) -> EulerResult:
    """
    Count, fit and evaluate at 1. A held-out mismatch raises the bound to
    max(2D, D + 1) and samples again, until the budget runs out.
    """
    bound = default_degree_bound(w, spec) if degree_bound is None else degree_bound
    while True:
        series = count_series(w, spec, mode, bound, q, budget)
        try:
            poly = fit_polynomial(series)
        except DegreeBoundError as e:
            echo("PIPELINE", f"{e.message}; retrying with a larger bound")
            bound = max(2 * bound, bound + 1)
            continue
        coeffs = poly_coefficients(poly)
        return EulerResult(series=series, poly=coeffs, chi=sum(coeffs))


def euler_characteristic(w: PermutationW, spec: GroupElementSpec, mode: Mode = "cross-size",
                         degree_bound: Optional[int] = None, q: Optional[int] = None,
                         budget: Optional[int] = None) -> int:
    """chi(Y_{w,g}) = phi(1)"""
    return solve(w, spec, mode, degree_bound, q, budget).chi
