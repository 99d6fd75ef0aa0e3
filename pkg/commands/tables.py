"""`green` and `char-table`: Green polynomials, Kostka-Foulkes polynomials and S_n characters"""

from characters.table import character_table
from combinatorics.partitions import all_partitions
from commands.output import render
from core.errors import UsageError
from green.polynomials import ascending_coeffs, green_polynomial, kostka_foulkes
from models.run_config_model import RunConfig

MAX_GREEN_N = 7
MAX_CHARACTER_N = 10


def _require_n(config: RunConfig, top: int) -> int:
    if config.n is None:
        raise UsageError(f"{config.subcommand} needs --n")
    if not 1 <= config.n <= top:
        raise UsageError(f"{config.subcommand} covers 1 <= n <= {top}, got {config.n}")
    return config.n


def cmd_green(config: RunConfig) -> int:
    """Q_rho^lambda(q) for every pair, or K_{mu lambda}(t) with --kostka"""
    n = _require_n(config, MAX_GREEN_N)
    labels = list(reversed(all_partitions(n)))
    entries = []
    for first in labels:
        for lam in labels:
            poly = kostka_foulkes(first, lam) if config.kostka else green_polynomial(first, lam)
            entries.append({"row": str(first), "lambda": str(lam),
                            "coeffs": [int(c) for c in ascending_coeffs(poly)],
                            "poly": str(poly.as_expr())})
    row_name = "mu" if config.kostka else "rho"
    body = {"n": n, "kind": "kostka_foulkes" if config.kostka else "green", "entries": entries}
    rows = [(e["row"], e["lambda"], e["poly"]) for e in entries]
    symbol = "K" if config.kostka else "Q"
    text = "\n".join(f"{symbol}[{e['row']}, {e['lambda']}] = {e['poly']}" for e in entries)
    render(config, body, [row_name, "lambda", "poly"], rows, text)
    return 0


def cmd_char_table(config: RunConfig) -> int:
    n = _require_n(config, MAX_CHARACTER_N)
    table = character_table(n)
    labels = list(reversed(table.labels()))
    names = [str(p) for p in labels]
    values = [[table.value(mu, rho) for rho in labels] for mu in labels]
    body = {"n": n, "labels": names, "table": values}
    rows = [(names[i], names[j], values[i][j]) for i in range(len(labels)) for j in range(len(labels))]
    width = max([len(s) for s in names] + [len(str(v)) for row in values for v in row])
    lines = [" " * width + " " + " ".join(s.rjust(width) for s in names)]
    for name, row in zip(names, values):
        lines.append(name.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    render(config, body, ["mu", "rho", "chi"], rows, "\n".join(lines))
    return 0


def register(subparsers, common) -> None:
    green = subparsers.add_parser("green", parents=[common], help="Green polynomials Q_rho^lambda(q)")
    green.add_argument("--n", type=int, required=True)
    green.add_argument("--kostka", action="store_true", help="print K_{mu lambda}(t) instead")
    green.set_defaults(handler=cmd_green)

    chars = subparsers.add_parser("char-table", parents=[common], help="character table of S_n")
    chars.add_argument("--n", type=int, required=True)
    chars.set_defaults(handler=cmd_char_table)
