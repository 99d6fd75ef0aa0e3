"""
The Hecke operators T_w on functions on the flags of GF(Q)^n,
(T_w f)(F) = sum of f(F') over F' with pos(F, F') = w, as 0/1 matrices.
"""

from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from combinatorics.permutations import PermutationW, all_permutations
from core.errors import UsageError
from core.settings import echo
from finite_field.field import FiniteField
from finite_field.matrix import MatrixGF
from flags.counting import count_Y, enumerate_flags
from flags.flag import Flag
from flags.kernel import bruhat_codes
from models.report_model import HeckeReport, RelationResult, TraceReport

MAX_N = 3
MAX_ORDER = 5


def _require_small(n: int, field: FiniteField) -> None:
    if n > MAX_N or field.order > MAX_ORDER:
        raise UsageError(f"Hecke operators are built for n <= {MAX_N} and Q <= {MAX_ORDER}, "
                         f"got n={n} over {field.name}")


@lru_cache(maxsize=16)
def position_matrix(n: int, field: FiniteField) -> tuple[list[Flag], np.ndarray]:
    """All flags, and the codes of pos(F_a, F_b) for every pair"""
    _require_small(n, field)
    flags = list(enumerate_flags(n, field))
    bases = np.stack([f.basis.entries for f in flags])
    inverses = np.stack([f.basis.inverse().entries for f in flags])
    size = len(flags)
    stack = field.matmul(inverses[:, None, :, :], bases[None, :, :, :]).reshape(size * size, n, n)
    codes = bruhat_codes(field, stack).reshape(size, size)
    codes.setflags(write=False)
    echo("HECKE", f"position matrix for {size} flags over {field.name}")
    return flags, codes


def hecke_operator(w: PermutationW, field: FiniteField) -> np.ndarray:
    _, codes = position_matrix(w.n, field)
    return (codes == w.code()).astype(np.int64)


def _relation(name: str, lhs: np.ndarray, rhs: np.ndarray) -> RelationResult:
    if np.array_equal(lhs, rhs):
        return RelationResult(relation=name, ok=True)
    bad = np.argwhere(lhs != rhs)[0]
    return RelationResult(relation=name, ok=False,
                          detail=f"entry {tuple(int(x) for x in bad)}: {int(lhs[tuple(bad)])} != {int(rhs[tuple(bad)])}")


def hecke_relations_check(n: int, field: FiniteField) -> HeckeReport:
    """
    Quadratic, braid and commutation relations of the T_{s_i} with q = Q, and
    T_u T_v = T_{uv} whenever l(uv) = l(u) + l(v).
    """
    flags, _ = position_matrix(n, field)
    q = field.order
    size = len(flags)
    eye = np.eye(size, dtype=np.int64)
    t = {w: hecke_operator(w, field) for w in all_permutations(n)}
    s = {i: t[PermutationW.simple(i, n)] for i in range(1, n)}
    results = [_relation("T_id = 1", t[PermutationW.identity(n)], eye)]
    for i, ti in s.items():
        results.append(_relation(f"T_{i}^2 = (q-1) T_{i} + q", ti @ ti, (q - 1) * ti + q * eye))
    for i in range(1, n - 1):
        results.append(_relation(f"T_{i} T_{i + 1} T_{i} = T_{i + 1} T_{i} T_{i + 1}",
                                 s[i] @ s[i + 1] @ s[i], s[i + 1] @ s[i] @ s[i + 1]))
    for i, j in product(range(1, n), repeat=2):
        if j >= i + 2:
            results.append(_relation(f"T_{i} T_{j} = T_{j} T_{i}", s[i] @ s[j], s[j] @ s[i]))
    for u, v in product(t, repeat=2):
        uv = u * v
        if uv.length() == u.length() + v.length() and u.length() and v.length():
            results.append(_relation(f"T_{u} T_{v} = T_{uv}", t[u] @ t[v], t[uv]))
    ok = all(r.ok for r in results)
    echo("HECKE", f"n={n} over {field.name}: {sum(r.ok for r in results)}/{len(results)} relations hold")
    return HeckeReport(n=n, field_order=q, flag_count=size, relations=results, ok=ok)


def trace_identity_check(w: PermutationW, g: MatrixGF, field: Optional[FiniteField] = None,
                         label: Optional[str] = None) -> TraceReport:
    """
    tr(g T_w) against count_Y(w, g), where (g f)(F) = f(g^-1 F). The composed
    operator has entry [a, b] = [pos(g^-1 F_a, F_b) = w].
    """
    field = field or g.field
    if g.field != field:
        raise UsageError(f"g lives over {g.field.name}, not {field.name}")
    flags, _ = position_matrix(w.n, field)
    index = {f.key(): i for i, f in enumerate(flags)}
    g_inv = g.inverse()
    moved = [index[Flag(g_inv @ f.basis).key()] for f in flags]
    shift = np.zeros((len(flags), len(flags)), dtype=np.int64)
    shift[np.arange(len(flags)), moved] = 1
    trace = int(np.trace(shift @ hecke_operator(w, field)))
    count = count_Y(w, g, field)
    return TraceReport(w=str(w), g=label or str(g.entries.tolist()), field_order=field.order,
                       trace=trace, count=count, ok=trace == count)
