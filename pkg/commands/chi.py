"""`chi`, `table` and `fibers`: X_rho^lambda by every route, the full table for one n, and its split along g"""

from typing import Callable

from characters.table import induced_from_characters
from combinatorics.assignments import enumerate_P, fiber_decomposition, x_count, x_recursive
from combinatorics.induced import induced_trivial_value
from combinatorics.partitions import Partition, all_partitions, require_same_weight
from commands.output import render
from core.errors import UsageError
from core.settings import echo
from flags.group_element import GroupElementSpec
from green.polynomials import ascending_coeffs, green_polynomial
from models.report_model import ChiReport, FiberEntry, FiberReport, LeviClass
from models.run_config_model import RunConfig
from pipeline.levi import dl_character_value, levi_classes
from symfunc.expansion import scalar_product_ph

MAX_TABLE_N = 10
MAX_YOUNG_N = 7

METHODS: dict[str, Callable[[Partition, Partition], int]] = {
    "enumeration": lambda rho, lam: len(enumerate_P(rho, lam)),
    "recursion": x_recursive,
    "scalar": scalar_product_ph,
    "induced": lambda rho, lam: induced_trivial_value(lam, rho),
    "green": lambda rho, lam: int(green_polynomial(rho, lam).eval(1)),
    "young": induced_from_characters,
}


def chi_report(rho: Partition, lam: Partition, methods: list[str]) -> ChiReport:
    require_same_weight(rho, lam)
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise UsageError(f"unknown methods {unknown}; choose from {sorted(METHODS)}")
    values = {m: METHODS[m](rho, lam) for m in methods}
    return ChiReport(rho=str(rho), lam=str(lam), values=values, agree=len(set(values.values())) <= 1)


def default_methods(n: int) -> list[str]:
    methods = ["enumeration", "recursion", "scalar", "induced", "green"]
    if n <= MAX_YOUNG_N:
        methods.append("young")
    return methods


def cmd_chi(config: RunConfig) -> int:
    if config.rho is None or config.lam is None:
        raise UsageError("chi needs --rho and --lambda")
    rho, lam = Partition.parse(config.rho), Partition.parse(config.lam)
    methods = config.methods or default_methods(rho.weight)
    report = chi_report(rho, lam, methods)
    echo("APP", f"X_{rho}^{lam}: {report.values}")
    text = "\n".join(f"{m}: {v}" for m, v in report.values.items())
    text += f"\nagree: {'yes' if report.agree else 'NO'}"
    render(config, report, ["method", "value"], list(report.values.items()), text)
    return 0 if report.agree else 1


def x_table(n: int) -> tuple[list[Partition], list[list[int]]]:
    """Rows rho and columns lambda, both ascending in reverse-lex order"""
    if not 0 <= n <= MAX_TABLE_N:
        raise UsageError(f"table covers 0 <= n <= {MAX_TABLE_N}, got {n}")
    labels = list(reversed(all_partitions(n)))
    return labels, [[x_count(rho, lam) for lam in labels] for rho in labels]


def cmd_table(config: RunConfig) -> int:
    if config.n is None:
        raise UsageError("table needs --n")
    labels, table = x_table(config.n)
    names = [str(p) for p in labels]
    body = {"n": config.n, "labels": names, "table": table}
    rows = [(names[i], names[j], table[i][j]) for i in range(len(labels)) for j in range(len(labels))]
    width = max([len(s) for s in names] + [len(str(v)) for row in table for v in row] + [3])
    lines = [" " * width + " " + " ".join(s.rjust(width) for s in names)]
    for name, row in zip(names, table):
        lines.append(name.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    render(config, body, ["rho", "lambda", "x"], rows, "\n".join(lines))
    return 0


def fiber_report(rho: Partition, spec: GroupElementSpec) -> FiberReport:
    require_same_weight(rho, spec.lam)
    fibres = fiber_decomposition(rho, spec.phi())
    total = sum(fibres.values())
    value = dl_character_value(rho, spec)
    at_one = int(value.eval(1))
    return FiberReport(
        rho=str(rho), spec=str(spec), lam=str(spec.lam), lambda_prime=str(spec.lam_prime),
        fibers=[FiberEntry(assignment=str(psi), size=size) for psi, size in fibres.items()],
        total=total,
        levi=[LeviClass(pieces=[str(p) for p in pieces], weight=weight)
              for pieces, weight in levi_classes(rho, spec)],
        dl_value=[int(c) for c in ascending_coeffs(value)],
        dl_value_at_1=at_one,
        agree=total == at_one == x_count(rho, spec.lam),
    )


def cmd_fibers(config: RunConfig) -> int:
    """X_rho^lambda grouped by phi_g o [zeta], and the Levi sum giving R_T(g)"""
    if config.rho is None or config.spec is None:
        raise UsageError("fibers needs --rho and --spec")
    report = fiber_report(Partition.parse(config.rho), GroupElementSpec.parse(config.spec))
    lines = [f"{e.assignment}: {e.size}" for e in report.fibers]
    lines.append(f"total: {report.total}")
    lines += [" x ".join(c.pieces) + f" (weight {c.weight})" for c in report.levi]
    lines.append(f"R_T(g) at q=1: {report.dl_value_at_1}")
    lines.append(f"agree: {'yes' if report.agree else 'NO'}")
    rows = [(e.assignment, e.size) for e in report.fibers]
    render(config, report, ["assignment", "size"], rows, "\n".join(lines))
    return 0 if report.agree else 1


def register(subparsers, common) -> None:
    chi = subparsers.add_parser("chi", parents=[common], help="X_rho^lambda by every method")
    chi.add_argument("--rho", required=True, help="cycle type, e.g. 3,2,2,2,1")
    chi.add_argument("--lambda", dest="lam", required=True, help="Jordan type, e.g. 7,3")
    chi.add_argument("--methods", help=f"comma-separated subset of {','.join(METHODS)}")
    chi.set_defaults(handler=cmd_chi)

    table = subparsers.add_parser("table", parents=[common], help="X_rho^lambda over all partitions of n")
    table.add_argument("--n", type=int, required=True)
    table.set_defaults(handler=cmd_table)

    fibers = subparsers.add_parser("fibers", parents=[common],
                                   help="X_rho^lambda split along the eigenvalue slots of g")
    fibers.add_argument("--rho", required=True, help="cycle type, e.g. 3,2,2,2,1")
    fibers.add_argument("--spec", required=True, help="Jordan data per eigenvalue, e.g. 7|3")
    fibers.set_defaults(handler=cmd_fibers)
