from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from combinatorics.partitions import Partition


class RunConfig(BaseModel):
    """Resolved command line, embedded in every report"""

    model_config = ConfigDict(populate_by_name=True)

    subcommand: str
    n: Optional[int] = None
    rho: Optional[str] = None
    lam: Optional[str] = Field(default=None, alias="lambda")
    w: Optional[str] = None
    spec: Optional[str] = None
    mode: Literal["cross-size", "power-tower"] = "cross-size"
    q: Optional[int] = None
    budget: int
    format: Literal["json", "csv", "text"] = "text"
    out: Optional[str] = None
    only: Optional[str] = None
    methods: Optional[list[str]] = None
    kostka: bool = False

    @field_validator("budget")
    @classmethod
    def _positive_budget(cls, value):
        if value <= 0:
            raise ValueError(f"budget must be positive, got {value}")
        return value

    @field_validator("rho", "lam")
    @classmethod
    def _partition_selector(cls, value):
        if value is not None:
            Partition.parse(value)
        return value

    @field_validator("n")
    @classmethod
    def _non_negative(cls, value):
        if value is not None and value < 0:
            raise ValueError(f"n must be non-negative, got {value}")
        return value
