import argparse
import sys
from typing import Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from commands import chi, count, tables, verify
from core.errors import DlchiError
from core.settings import VERSION, echo, get_settings
from models.run_config_model import RunConfig

load_dotenv()

COMMANDS = (chi, tables, count, verify)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--out", help="write here instead of stdout")
    common.add_argument("--budget", type=int, help="largest flag variety to enumerate (default DLCHI_BUDGET)")

    parser = argparse.ArgumentParser(
        prog="dlchi",
        description="Euler characteristics of twisted Deligne-Lusztig varieties for GL_n",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for module in COMMANDS:
        module.register(subparsers, common)
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k != "handler" and v is not None}
    values.setdefault("budget", get_settings().budget)
    if "methods" in values:
        values["methods"] = [m.strip() for m in values["methods"].split(",") if m.strip()]
    if values.get("mode") == "power-tower" and "q" not in values:
        values["q"] = 2
    return RunConfig(**values)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        config = resolve_config(args)
        return args.handler(config)
    except DlchiError as e:
        echo("APP", f"error: {e.message}", force=True)
        return e.exit_code
    except ValidationError as e:
        echo("APP", f"error: {e.errors()[0]['msg']}", force=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
