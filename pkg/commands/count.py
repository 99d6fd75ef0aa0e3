"""`count`: one point-count series, its fitted polynomial and phi(1)"""

from combinatorics.permutations import PermutationW
from commands.output import render
from core.errors import UsageError
from flags.group_element import GroupElementSpec
from models.run_config_model import RunConfig
from pipeline.interpolation import solve


def cmd_count(config: RunConfig) -> int:
    if config.spec is None and config.lam is None:
        raise UsageError("count needs --spec or --lambda")
    spec = GroupElementSpec.parse(config.spec) if config.spec else GroupElementSpec.parse(config.lam)
    if config.w is None:
        raise UsageError("count needs --w")
    w = PermutationW.parse(config.w, spec.n)
    result = solve(w, spec, config.mode, q=config.q, budget=config.budget)
    body = {
        "w": w.one_line(),
        "spec": str(spec),
        "lambda": str(spec.lam),
        "lambda_prime": str(spec.lam_prime),
        "mode": config.mode,
        "degree_bound": result.series.degree_bound,
        "samples": [list(s) for s in result.series.samples],
        "poly": result.poly,
        "phi_at_1": result.chi,
    }
    poly_text = " + ".join(f"{c}*x^{e}" for e, c in enumerate(result.poly) if c) or "0"
    text = "\n".join([f"w = {w} {w.one_line()}, g = {spec}",
                      *(f"Q={size}: {count}" for size, count in result.series.samples),
                      f"phi(x) = {poly_text}",
                      f"chi = {result.chi}"])
    rows = [(size, count) for size, count in result.series.samples]
    render(config, body, ["Q", "count"], rows, text)
    return 0


def register(subparsers, common) -> None:
    count = subparsers.add_parser("count", parents=[common], help="|Y_{w,g}(GF(Q))| over several Q")
    count.add_argument("--w", required=True, help="cycle notation, e.g. (12)(34)")
    count.add_argument("--spec", help="Jordan data per eigenvalue, e.g. 2,1|1 or 1|1@1,3")
    count.add_argument("--lambda", dest="lam", help="unipotent Jordan type, e.g. 2,1")
    count.add_argument("--mode", choices=["cross-size", "power-tower"], default="cross-size")
    count.add_argument("--q", type=int, help="prime for power-tower mode")
    count.set_defaults(handler=cmd_count)
