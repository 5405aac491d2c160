"""Pydantic request/response models for the HTTP API.

Numeric values travel as decimal strings (their precision exceeds a double);
error bounds and timings are plain floats.  Report models serialize the
pass flag under the key "pass".
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field


class ConfigModel(BaseModel):
    """Evaluator settings; all fields optional with library defaults."""

    prec_bits: int = 128
    trunc: int = 100_000
    tail_order: int = 2
    tolerance: float = 1e-9
    max_trunc: int | None = None


IndexInput = str | list[int]

RegFlavor = Literal["harm", "star-harm", "shuffle", "star-sh"]


class EvalRequest(BaseModel):
    kind: Literal["mzv", "mzsv", "zeta"]
    index: IndexInput
    config: ConfigModel | None = None


class EvalResponse(BaseModel):
    kind: str
    index: str
    value: str
    bound: float
    seconds: float
    config: ConfigModel


class RegRequest(BaseModel):
    flavor: RegFlavor
    index: IndexInput
    series_order: int | None = None
    config: ConfigModel | None = None


class RegCoefficient(BaseModel):
    power: int
    symbolic: str
    value: str
    bound: float


class RegResponse(BaseModel):
    flavor: str
    index: str
    symbolic: str
    coefficients: list[RegCoefficient]
    seconds: float
    config: ConfigModel


class VerifyRequest(BaseModel):
    identity: str
    params: dict[str, Any] = Field(default_factory=dict)
    config: ConfigModel | None = None


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    identity: str
    params: dict[str, Any]
    exact: bool
    max_deviation: float
    bound: float
    passed: bool = Field(alias="pass")
    seconds: float
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report) -> "ReportModel":
        return cls.model_validate(report.to_dict())


class TableRequest(BaseModel):
    k_values: list[int] = Field(default_factory=lambda: [2, 3, 4])
    l_values: list[int] = Field(default_factory=lambda: [2, 3])
    tolerance: float | None = None
    config: ConfigModel | None = None


class TableResponse(BaseModel):
    rows: list[ReportModel]
    passed: int
    failed: int
    seconds: float


class SuiteRequest(BaseModel):
    max_weight: int = 7
    max_depth: int = 4
    k_values: list[int] = Field(default_factory=lambda: [2, 3, 4])
    l_values: list[int] = Field(default_factory=lambda: [2, 3])
    jobs: int = 1
    config: ConfigModel | None = None


class SuiteResponse(BaseModel):
    passed: int
    failed: int
    seconds: float
    reports: list[ReportModel]


class PartitionsRequest(BaseModel):
    elements: list[int] | None = None
    size: int | None = None
    not_inside: list[int] | None = None


class PartitionEntry(BaseModel):
    blocks: list[list[int]]
    text: str


class PartitionsResponse(BaseModel):
    count: int
    partitions: list[PartitionEntry]


class BellRequest(BaseModel):
    kind: Literal["partial", "complete", "stirling1", "stirling2", "shape-count", "bell-number"]
    r: int
    k: int | None = None
    xs: list[str] | None = None
    shape: list[int] | None = None


class BellResponse(BaseModel):
    kind: str
    value: str


class CachePathRequest(BaseModel):
    path: str
    config: ConfigModel | None = None


class CacheResponse(BaseModel):
    entries: int
    path: str


class HealthResponse(BaseModel):
    status: str
    version: str


class IdentityListResponse(BaseModel):
    identities: list[str]
