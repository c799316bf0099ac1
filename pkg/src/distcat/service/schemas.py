"""Request and response models for the verification service."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..checks import SCHEMA_VERSION

CheckName = Literal["distrib", "curry", "adjunction", "mediator"]
InstanceName = Literal["finset", "heyting", "terms"]


class LatticeSpec(BaseModel):
    """One of: divisor lattice, down-set lattice of a poset, or an
    explicit order matrix."""

    kind: Literal["divisors", "downset", "explicit"]
    n: Optional[int] = Field(default=None, description="divisor bound (kind=divisors)")
    points: Optional[list[str]] = Field(default=None, description="poset points (kind=downset)")
    relation: Optional[list[tuple[str, str]]] = Field(
        default=None, description="poset pairs x ≤ y (kind=downset)"
    )
    elements: Optional[list[str]] = Field(default=None, description="labels (kind=explicit)")
    leq: Optional[list[list[bool]]] = Field(default=None, description="order matrix (kind=explicit)")

    @model_validator(mode="after")
    def _required_fields(self) -> "LatticeSpec":
        needed = {
            "divisors": ("n",),
            "downset": ("points",),
            "explicit": ("elements", "leq"),
        }[self.kind]
        missing = [name for name in needed if getattr(self, name) is None]
        if missing:
            raise ValueError(f"lattice kind {self.kind!r} needs {missing}")
        return self

    def to_spec(self) -> dict[str, Any]:
        return self.model_dump(exclude_none=True)


class VerifyRequest(BaseModel):
    check: CheckName
    instance: InstanceName = "finset"
    sizes: Optional[tuple[int, int, int]] = None
    lattice: Optional[LatticeSpec] = None
    objects: Optional[list[str]] = None
    trials: Optional[int] = Field(default=None, ge=1)
    max_base_size: int = Field(default=3, ge=0, le=3)
    seed: int = 0


class SweepRequest(BaseModel):
    instance: Literal["finset", "heyting"] = "finset"
    max_size: Optional[int] = Field(default=None, ge=0, le=3)
    max_poset: Optional[int] = Field(default=None, ge=0, le=4)
    trials: Optional[int] = Field(default=None, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _bound_given(self) -> "SweepRequest":
        if self.instance == "finset" and self.max_size is None:
            raise ValueError("finset sweeps need max_size")
        if self.instance == "heyting" and self.max_poset is None:
            raise ValueError("heyting sweeps need max_poset")
        return self


class DotRequest(BaseModel):
    diagram: Literal[1, 2, 3, 4, 5]
    instance: Literal["symbolic", "finset", "heyting"] = "symbolic"
    sizes: Optional[tuple[int, int, int]] = None
    lattice: Optional[LatticeSpec] = None
    objects: Optional[list[str]] = None


class TermEqRequest(BaseModel):
    left: str = Field(description="term document text")
    right: str = Field(description="term document text")
    trials: int = Field(default=10, ge=1)
    max_base_size: int = Field(default=3, ge=0, le=3)
    seed: int = 0


class CheckReportModel(BaseModel):
    check: str
    instance: str
    params: dict[str, Any]
    verdict: Literal["pass", "fail", "rejected-input"]
    seed: int
    encodings: str
    detail: Optional[str] = None
    counterexample: Optional[dict[str, Any]] = None
    elapsed_ms: float


class Summary(BaseModel):
    total: int
    passed: int
    failed: int
    rejected: int


class ReportResponse(BaseModel):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    reports: list[CheckReportModel]
    summary: Summary

    model_config = {"populate_by_name": True}


class HealthResponse(BaseModel):
    status: str
    version: str
