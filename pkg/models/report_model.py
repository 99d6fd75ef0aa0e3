from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "mismatch", "skipped"]


class RelationResult(BaseModel):
    relation: str
    ok: bool
    detail: Optional[str] = None


class HeckeReport(BaseModel):
    n: int
    field_order: int
    flag_count: int
    relations: list[RelationResult]
    ok: bool


class TraceReport(BaseModel):
    w: str
    g: str
    field_order: int
    trace: int
    count: int
    ok: bool


class CaseReport(BaseModel):
    """One verification case: a w, a group element type and what the pipeline found"""

    model_config = ConfigDict(populate_by_name=True)

    case_id: str
    check: str
    w: str
    rho: str
    lam: str = Field(alias="lambda")
    lambda_prime: str
    spec: str
    samples: list[tuple[int, int]] = []
    poly: list[int] = []
    phi_at_1: Optional[int] = None
    expected: Optional[int] = None
    status: Status
    detail: Optional[str] = None


class ChiReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    rho: str
    lam: str = Field(alias="lambda")
    values: dict[str, int]
    agree: bool


class RunReport(BaseModel):
    """Cases and algebra checks of one run; the output envelope adds version and config"""

    cases: list[CaseReport] = []
    hecke: list[HeckeReport] = []
    traces: list[TraceReport] = []
    ok: bool = True

    def mismatches(self) -> int:
        bad = sum(1 for c in self.cases if c.status == "mismatch")
        bad += sum(1 for h in self.hecke if not h.ok)
        bad += sum(1 for t in self.traces if not t.ok)
        return bad


class FiberEntry(BaseModel):
    assignment: str
    size: int


class LeviClass(BaseModel):
    pieces: list[str]
    weight: int


class FiberReport(BaseModel):
    """X_rho^lambda split along phi_g, next to the character value it specialises"""

    model_config = ConfigDict(populate_by_name=True)

    rho: str
    spec: str
    lam: str = Field(alias="lambda")
    lambda_prime: str
    fibers: list[FiberEntry]
    total: int
    levi: list[LeviClass]
    dl_value: list[int]
    dl_value_at_1: int
    agree: bool
