"""
Writing results: JSON with stable key order, CSV with a header row and LF line
ends, or plain text, to --out or stdout.
"""

import csv
import io
import json
import sys
from typing import Any, Optional, Sequence

from pydantic import BaseModel

from core.settings import VERSION, echo
from models.run_config_model import RunConfig


def envelope(config: RunConfig, body: Any) -> dict:
    """Every JSON document carries the version and the resolved config"""
    if isinstance(body, BaseModel):
        body = body.model_dump(mode="json", by_alias=True)
    return {"version": VERSION, "config": config.model_dump(mode="json", by_alias=True), "result": body}


def to_json(config: RunConfig, body: Any) -> str:
    return json.dumps(envelope(config, body), indent=2) + "\n"


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        echo("APP", f"wrote {out}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def render(config: RunConfig, body: Any, header: Sequence[str], rows: Sequence[Sequence[Any]],
           text: str) -> None:
    """Pick the representation --format asks for and write it"""
    if config.format == "json":
        emit(to_json(config, body), config.out)
    elif config.format == "csv":
        emit(to_csv(header, rows), config.out)
    else:
        emit(text if text.endswith("\n") else text + "\n", config.out)
