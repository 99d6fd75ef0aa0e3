"""
Verification drivers. Each returns CaseReports; a mathematical disagreement
is a "mismatch" status, a case the budget or the field cannot hold is
"skipped", and nothing here raises for either.
"""

from typing import Iterable, Optional, Sequence

from combinatorics.assignments import x_count
from combinatorics.partitions import Partition, all_partitions
from combinatorics.permutations import PermutationW, all_permutations, class_representative
from core.errors import ConsistencyError, ResourceError, UsageError
from core.settings import echo
from flags.group_element import GroupElementSpec, all_specs
from models.report_model import CaseReport
from pipeline.interpolation import EulerResult, solve
from pipeline.series import Mode, admissible_sizes, count_series, default_degree_bound

# n = 4 cases small enough for the default budget: (w, lambda)
SPOT_CASES_N4 = [
    ("(12)", (2, 1, 1)),
    ("(12)(34)", (2, 2)),
    ("(123)", (4,)),
    ("(123)", (2, 2)),
    ("(1234)", (4,)),
    ("(1234)", (2, 1, 1)),
    ("(12)", (1, 1, 1, 1)),
]


def _case(check: str, case_id: str, w: PermutationW, spec: GroupElementSpec, **fields) -> CaseReport:
    return CaseReport(case_id=case_id, check=check, w=w.one_line(), rho=str(w.cycle_type()),
                      lam=str(spec.lam), lambda_prime=str(spec.lam_prime), spec=str(spec), **fields)


def _solve_or_report(check: str, case_id: str, w: PermutationW, spec: GroupElementSpec,
                     mode: Mode, q: Optional[int], budget: Optional[int]):
    """The solved case, or a finished CaseReport saying why there is none"""
    try:
        return solve(w, spec, mode, q=q, budget=budget)
    except (ResourceError, UsageError) as e:
        return _case(check, case_id, w, spec, status="skipped", detail=e.message)
    except ConsistencyError as e:
        return _case(check, case_id, w, spec, status="mismatch", detail=e.message)


def _result_fields(result: EulerResult) -> dict:
    return {"samples": [list(s) for s in result.series.samples], "poly": result.poly, "phi_at_1": result.chi}


def run_case(check: str, w: PermutationW, spec: GroupElementSpec, expected: int,
             mode: Mode = "cross-size", q: Optional[int] = None,
             budget: Optional[int] = None) -> CaseReport:
    case_id = f"{check}:{w.one_line()}:{spec}"
    result = _solve_or_report(check, case_id, w, spec, mode, q, budget)
    if isinstance(result, CaseReport):
        return result
    status = "pass" if result.chi == expected else "mismatch"
    return _case(check, case_id, w, spec, expected=expected, status=status, **_result_fields(result))


def main_theorem_scope(n: int) -> list[tuple[PermutationW, GroupElementSpec]]:
    """Every class against every spec for n <= 3; the spot cases for n = 4"""
    if n == 4:
        return [(PermutationW.parse(w, 4), GroupElementSpec.unipotent(Partition(parts=lam)))
                for w, lam in SPOT_CASES_N4]
    if n > 4:
        raise UsageError(f"point counts stop at n = 4, got n = {n}")
    return [(class_representative(rho), spec) for rho in all_partitions(n) for spec in all_specs(n)]


def verify_main_theorem(n: int, scope: Optional[Iterable[tuple[PermutationW, GroupElementSpec]]] = None,
                        mode: Mode = "cross-size", q: Optional[int] = None,
                        budget: Optional[int] = None) -> list[CaseReport]:
    """chi(Y_{w,g}) against X_rho^lambda with rho the cycle type of w and lambda the Jordan type of g_u"""
    cases = list(scope) if scope is not None else main_theorem_scope(n)
    reports = []
    for w, spec in cases:
        expected = x_count(w.cycle_type(), spec.lam)
        reports.append(run_case("main", w, spec, expected, mode, q, budget))
    echo("VERIFY", f"main theorem n={n}: {_tally(reports)}")
    return reports


def coxeter_check(n: int, specs: Optional[Sequence[GroupElementSpec]] = None,
                  mode: Mode = "cross-size", q: Optional[int] = None,
                  budget: Optional[int] = None) -> list[CaseReport]:
    """
    For w an n-cycle: chi = 1 when g_u is regular unipotent and 0 otherwise, and
    no points at all unless g has one Jordan block per eigenvalue.
    """
    w = class_representative(Partition(parts=[n]))
    regular = Partition(parts=[n])
    reports = []
    for spec in specs if specs is not None else all_specs(n):
        report = run_case("coxeter", w, spec, 1 if spec.lam == regular else 0, mode, q, budget)
        if report.status == "pass" and not spec.is_regular() and any(c for _, c in report.samples):
            report = report.model_copy(update={"status": "mismatch",
                                               "detail": "points found for a non-regular g"})
        reports.append(report)
    echo("VERIFY", f"coxeter n={n}: {_tally(reports)}")
    return reports


def _product(word: Sequence[int], n: int) -> PermutationW:
    w = PermutationW.identity(n)
    for i in word:
        w = w * PermutationW.simple(i, n)
    return w


def conjugate_pairs(n: int) -> list[tuple[PermutationW, PermutationW]]:
    """
    (w, s w s) for simple s, and the cyclic shifts (uv, vu) with
    l(u) + l(v) = l(uv) = l(vu), each unordered pair once
    """
    seen = set()
    pairs = []

    def add(a: PermutationW, b: PermutationW) -> None:
        key = frozenset((a.images, b.images))
        if a != b and key not in seen:
            seen.add(key)
            pairs.append((a, b))

    for w in all_permutations(n):
        for i in range(1, n):
            add(w, w.conjugate_by(PermutationW.simple(i, n)))
        word = w.reduced_word()
        for k in range(1, len(word)):
            u, v = _product(word[:k], n), _product(word[k:], n)
            shifted = v * u
            if shifted.length() == w.length():
                add(w, shifted)
    return pairs


def conjugation_check(n: int, specs: Optional[Sequence[GroupElementSpec]] = None,
                      mode: Mode = "cross-size", q: Optional[int] = None,
                      budget: Optional[int] = None) -> list[CaseReport]:
    """
    chi(Y_{w,g}) = chi(Y_{w',g}) for conjugate pairs. Raw counts are only
    recorded in the detail; they are not required to agree.
    """
    results: dict = {}
    reports = []
    for spec in specs if specs is not None else all_specs(n):
        for a, b in conjugate_pairs(n):
            case_id = f"conjugation:{a.one_line()}~{b.one_line()}:{spec}"
            solved = []
            for w in (a, b):
                key = (w, spec)
                if key not in results:
                    results[key] = _solve_or_report("conjugation", case_id, w, spec, mode, q, budget)
                solved.append(results[key])
            first, second = solved
            if isinstance(first, CaseReport) or isinstance(second, CaseReport):
                failed = first if isinstance(first, CaseReport) else second
                reports.append(failed.model_copy(update={"case_id": case_id}))
                continue
            same_counts = first.series.samples == second.series.samples
            reports.append(_case(
                "conjugation", case_id, a, spec, expected=first.chi,
                status="pass" if first.chi == second.chi else "mismatch",
                detail=f"{b.one_line()} gives {second.chi}; counts " + ("equal" if same_counts else "differ"),
                **{**_result_fields(first), "phi_at_1": second.chi}))
    echo("VERIFY", f"conjugation n={n}: {_tally(reports)}")
    return reports


def eigenvalue_variants(spec: GroupElementSpec) -> list[GroupElementSpec]:
    """Same Jordan data, other eigenvalues: 1, 3, 4, ... and the default order reversed"""
    r = len(spec.slots)
    if r < 2:
        return []
    shifted = (1,) + tuple(range(3, r + 2))
    return [spec.with_eigenvalues(shifted), spec.with_eigenvalues(tuple(range(r, 0, -1)))]


def proposition_check(n: int, spec1: GroupElementSpec, spec2: GroupElementSpec,
                      mode: Mode = "cross-size", q: Optional[int] = None,
                      budget: Optional[int] = None,
                      ws: Optional[Sequence[PermutationW]] = None) -> list[CaseReport]:
    """
    Two g with the same g_u and the same centraliser of g_s: their count series
    agree size by size, for every w.
    """
    if spec1.shape_key() != spec2.shape_key() or spec1.n != n:
        raise UsageError(f"{spec1} and {spec2} do not share lambda, lambda' and phi_g in GL_{n}")
    reports = []
    for w in ws if ws is not None else all_permutations(n):
        case_id = f"proposition:{w.one_line()}:{spec1}~{spec2}"
        bound = default_degree_bound(w, spec1)
        try:
            other = set(admissible_sizes(spec2, mode, q))
            sizes = [s for s in admissible_sizes(spec1, mode, q) if s in other]
            first = count_series(w, spec1, mode, bound, q, budget, sizes=sizes)
            second = count_series(w, spec2, mode, bound, q, budget, sizes=sizes)
        except (ResourceError, UsageError) as e:
            reports.append(_case("proposition", case_id, w, spec1, status="skipped", detail=e.message))
            continue
        same = first.samples == second.samples
        reports.append(_case(
            "proposition", case_id, w, spec1, samples=[list(s) for s in first.samples],
            status="pass" if same else "mismatch",
            detail=None if same else f"{spec2} counts {list(second.samples)}"))
    echo("VERIFY", f"proposition n={n} {spec1} vs {spec2}: {_tally(reports)}")
    return reports


def proposition_pairs(n: int) -> list[tuple[GroupElementSpec, GroupElementSpec]]:
    return [(spec, variant) for spec in all_specs(n) for variant in eigenvalue_variants(spec)]


def _tally(reports: Sequence[CaseReport]) -> str:
    counts = {status: sum(1 for r in reports if r.status == status) for status in ("pass", "mismatch", "skipped")}
    return ", ".join(f"{v} {k}" for k, v in counts.items())
