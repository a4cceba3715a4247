"""Request and response models for the HTTP API.

Rationals travel in their canonical JSON encoding (int, short decimal, or
"p/q" string); wherever a client is expected to render or position widgets,
float and two-decimal display mirrors are included so no index arithmetic
has to happen client-side.
"""

from __future__ import annotations

from typing import Any, Union

from pydantic import BaseModel, Field, model_validator

RationalScalar = Union[int, float, str]

WeightsPayload = dict[str, RationalScalar]


class Envelope(BaseModel):
    engine_version: str
    catalog_version: str


class ApiErrorModel(BaseModel):
    code: str
    message: str
    detail: dict[str, Any] = Field(default_factory=dict)


class ProfileRef(BaseModel):
    """Either the id of a stored profile or an inline profile document."""

    library_id: str | None = None
    profile: dict[str, Any] | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "ProfileRef":
        if (self.library_id is None) == (self.profile is None):
            raise ValueError("provide exactly one of 'library_id' or 'profile'")
        return self


class ScoreRequest(ProfileRef):
    weights: WeightsPayload


class RankRequest(BaseModel):
    library_ids: list[str] = Field(default_factory=list)
    profiles: list[dict[str, Any]] = Field(default_factory=list)
    weights: WeightsPayload

    @model_validator(mode="after")
    def _non_empty(self) -> "RankRequest":
        if not self.library_ids and not self.profiles:
            raise ValueError("provide at least one library id or inline profile")
        return self


class WhatIfRequest(BaseModel):
    a: ProfileRef
    b: ProfileRef
    attribute: int
    range: tuple[RationalScalar, RationalScalar] = (0, 3)
    weights: WeightsPayload | None = None


class RebalanceRequest(BaseModel):
    weights: WeightsPayload
    pinned: list[int] = Field(default_factory=list)


class RationalTriplet(BaseModel):
    exact: RationalScalar
    value: float
    display: str


class CatalogResponse(Envelope):
    catalog: dict[str, Any]


class LibrarySummaryModel(BaseModel):
    library_id: str
    name: str
    version: str
    language: str
    latest_revision: int
    content_hash: str
    assessment_count: int


class LibrariesResponse(Envelope):
    libraries: list[LibrarySummaryModel]


class RecordModel(BaseModel):
    revision: int
    content_hash: str
    previous_hash: str | None
    saved_at: str


class LibraryResponse(Envelope):
    library_id: str
    record: RecordModel
    profile: dict[str, Any]


class ReferenceWeightsResponse(Envelope):
    weights: WeightsPayload
    weights_value: dict[str, float]
    trace: dict[str, Any]


class ScoreResponse(Envelope):
    report: dict[str, Any]
    warnings: list[str] = Field(default_factory=list)


class RankResponse(Envelope):
    results: list[dict[str, Any]]


class CrossoverModel(BaseModel):
    weight: RationalTriplet
    leader_before: str
    leader_after: str


class WhatIfResponse(Envelope):
    attribute: int
    range: tuple[RationalScalar, RationalScalar]
    constraint_relaxed: bool
    crossovers: list[CrossoverModel]


class RebalanceResponse(Envelope):
    weights: WeightsPayload
    weights_value: dict[str, float]
    sum: RationalScalar
    sum_value: float
