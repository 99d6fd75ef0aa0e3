"""`verify` and `hecke-check`: the batch drivers"""

import re
from itertools import product
from typing import Sequence

from combinatorics.partitions import Partition, all_partitions
from combinatorics.permutations import PermutationW, all_permutations, class_representative
from commands.output import render
from core.errors import UsageError
from core.settings import echo
from finite_field.field import field_of_order
from flags.group_element import GroupElementSpec, all_specs, build_group_element
from flags.hecke import hecke_relations_check, trace_identity_check
from models.report_model import HeckeReport, RunReport, TraceReport
from models.run_config_model import RunConfig
from pipeline.checks import (
    conjugation_check,
    coxeter_check,
    proposition_check,
    proposition_pairs,
    verify_main_theorem,
)

HECKE_ORDERS = (2, 3)
MAX_VERIFY_N = 4
_ONLY_KEYS = ("w", "rho", "lambda", "spec")
_ONLY_SPLIT = re.compile(r",(?=\s*(?:" + "|".join(_ONLY_KEYS) + r")=)")


def parse_only(text: str, n: int) -> list[tuple[PermutationW, GroupElementSpec]]:
    """
    "w=(12),lambda=(2,1,1)" and the like. w or rho picks the permutation,
    spec or lambda (unipotent) the group element; a missing side means all.
    """
    selectors = {}
    for item in _ONLY_SPLIT.split(text.strip()):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in _ONLY_KEYS:
            raise UsageError(f"cannot read case filter {item!r}; keys are {', '.join(_ONLY_KEYS)}")
        selectors[key] = value.strip()
    if "w" in selectors:
        ws = [PermutationW.parse(selectors["w"], n)]
    elif "rho" in selectors:
        ws = [class_representative(Partition.parse(selectors["rho"]))]
    else:
        ws = [class_representative(rho) for rho in all_partitions(n)]
    if "spec" in selectors:
        specs = [GroupElementSpec.parse(selectors["spec"])]
    elif "lambda" in selectors:
        specs = [GroupElementSpec.unipotent(Partition.parse(selectors["lambda"]))]
    else:
        specs = all_specs(n)
    for w, spec in product(ws, specs):
        if w.n != n or spec.n != n:
            raise UsageError(f"case filter {text!r} does not describe GL_{n}")
    return list(product(ws, specs))


def hecke_and_traces(n: int, orders: Sequence[int] = HECKE_ORDERS) -> tuple[list[HeckeReport], list[TraceReport]]:
    """Relations over each GF(Q), then the trace identity for every w and every g that fits"""
    hecke, traces = [], []
    for order in orders:
        field = field_of_order(order)
        hecke.append(hecke_relations_check(n, field))
        for spec in all_specs(n):
            if len(spec.slots) >= order:
                continue
            g = build_group_element(spec, field)
            for w in all_permutations(n):
                traces.append(trace_identity_check(w, g, field, label=str(spec)))
    return hecke, traces


def run_verify(config: RunConfig) -> RunReport:
    n = config.n
    if n is None or not 1 <= n <= MAX_VERIFY_N:
        raise UsageError(f"verify covers 1 <= n <= {MAX_VERIFY_N}, got {n}")
    opts = {"mode": config.mode, "q": config.q, "budget": config.budget}
    report = RunReport()
    if config.only:
        report.cases = verify_main_theorem(n, parse_only(config.only, n), **opts)
    else:
        cases = verify_main_theorem(n, **opts)
        if n <= 3:
            cases += coxeter_check(n, **opts)
            cases += conjugation_check(n, **opts)
            for spec1, spec2 in proposition_pairs(n):
                cases += proposition_check(n, spec1, spec2, **opts)
            report.hecke, report.traces = hecke_and_traces(n)
        else:
            specs = [GroupElementSpec.unipotent(Partition.of(4)), GroupElementSpec.unipotent(Partition.of(2, 1, 1))]
            cases += coxeter_check(n, specs, **opts)
        report.cases = cases
    report.ok = report.mismatches() == 0
    echo("VERIFY", f"n={n}: {len(report.cases)} cases, {report.mismatches()} mismatches")
    return report


def _case_rows(report: RunReport) -> list[tuple]:
    rows = []
    for c in report.cases:
        rows.append((c.case_id, c.check, c.w, c.rho, c.lam, c.lambda_prime, c.spec,
                     " ".join(f"{s}:{v}" for s, v in c.samples), " ".join(map(str, c.poly)),
                     "" if c.phi_at_1 is None else c.phi_at_1,
                     "" if c.expected is None else c.expected, c.status))
    return rows


CASE_HEADER = ["case_id", "check", "w", "rho", "lambda", "lambda_prime", "spec",
               "samples", "poly", "phi_at_1", "expected", "status"]


def _text(report: RunReport) -> str:
    lines = [f"{c.status:8} {c.case_id}  phi(1)={c.phi_at_1} expected={c.expected}"
             + (f"  ({c.detail})" if c.detail and c.status != "pass" else "")
             for c in report.cases]
    for h in report.hecke:
        lines.append(f"{'pass' if h.ok else 'mismatch':8} hecke n={h.n} Q={h.field_order}: "
                     f"{sum(r.ok for r in h.relations)}/{len(h.relations)} relations")
    if report.traces:
        good = sum(t.ok for t in report.traces)
        lines.append(f"{'pass' if good == len(report.traces) else 'mismatch':8} "
                     f"trace identity: {good}/{len(report.traces)}")
    lines.append(f"mismatches: {report.mismatches()}")
    return "\n".join(lines)


def cmd_verify(config: RunConfig) -> int:
    report = run_verify(config)
    render(config, report, CASE_HEADER, _case_rows(report), _text(report))
    return 0 if report.ok else 1


def cmd_hecke_check(config: RunConfig) -> int:
    n = config.n
    if n is None:
        raise UsageError("hecke-check needs --n")
    report = RunReport()
    report.hecke, report.traces = hecke_and_traces(n, (config.q,) if config.q else HECKE_ORDERS)
    report.ok = report.mismatches() == 0
    rows = [(f"hecke Q={h.field_order}", r.relation, r.ok) for h in report.hecke for r in h.relations]
    rows += [(f"trace Q={t.field_order}", f"{t.w} {t.g}", t.ok) for t in report.traces]
    render(config, report, ["check", "item", "ok"], rows, _text(report))
    return 0 if report.ok else 1


def register(subparsers, common) -> None:
    verify = subparsers.add_parser("verify", parents=[common], help="run the point-count verifications")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--mode", choices=["cross-size", "power-tower"], default="cross-size")
    verify.add_argument("--q", type=int, help="prime for power-tower mode (default 2)")
    verify.add_argument("--only", help='restrict to cases, e.g. "w=(12),lambda=(2,1,1)"')
    verify.set_defaults(handler=cmd_verify)

    hecke = subparsers.add_parser("hecke-check", parents=[common], help="Hecke relations and trace identities")
    hecke.add_argument("--n", type=int, required=True)
    hecke.add_argument("--q", type=int, help="a single field order (default: 2 and 3)")
    hecke.set_defaults(handler=cmd_hecke_check)
