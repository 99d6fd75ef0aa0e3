from math import factorial, prod

from pydantic import BaseModel, ConfigDict
from sympy import Expr, Integer, cancel

from combinatorics.partitions import Partition
from combinatorics.permutations import class_representative
from core.errors import UsageError
from green.polynomials import q


class RemarkValue(BaseModel):
    """
    chi(X(w)) = (-1)^{l(w)} |GL_n(q)|_{p'} / |T_w(q)| for w of cycle type rho, as a
    reduced rational function in q, and its limit at q = 1.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: Partition
    value: Expr
    limit: int


def dl_remark(n: int, rho: Partition) -> RemarkValue:
    if rho.weight != n:
        raise UsageError(f"{rho} is not a partition of {n}")
    sign = Integer(-1) ** class_representative(rho).length()
    value = cancel(sign * prod(q ** i - 1 for i in range(1, n + 1))
                   / prod(q ** part - 1 for part in rho.parts))
    limit = int(cancel(value).subs(q, 1))
    return RemarkValue(rho=rho, value=value, limit=limit)


def expected_limit(n: int, rho: Partition) -> int:
    """n! for the identity class, 0 for every other"""
    return factorial(n) if rho.parts == (1,) * n else 0
