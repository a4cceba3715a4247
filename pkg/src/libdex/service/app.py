"""HTTP API over the scoring engine.

All engine calls are pure, so requests can run concurrently; store writes
funnel through the store's single-writer lock. Every response embeds the
engine and catalog versions. Engine errors surface as ApiError bodies with
their stable code; malformed requests are 4xx, internal faults 5xx.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..builtin import builtin_catalog
from ..errors import EngineError
from ..rational import encode_rational, format_decimal
from ..reference import example_profiles, reference_weights
from ..render import report_to_dict
from ..scoring import LibraryProfile, compute_index, rank_libraries, weight_sensitivity
from ..store import ProfileStore, profile_from_dict, profile_to_dict
from ..weighting import WeightVector, rebalance_weights, weights_from_dict
from .schemas import (
    ApiErrorModel,
    CatalogResponse,
    LibrariesResponse,
    LibraryResponse,
    LibrarySummaryModel,
    RankRequest,
    RankResponse,
    RebalanceRequest,
    RebalanceResponse,
    RecordModel,
    ReferenceWeightsResponse,
    ScoreRequest,
    ScoreResponse,
    WhatIfRequest,
    WhatIfResponse,
    ProfileRef,
    WeightsPayload,
)

DEFAULT_ADDR = "127.0.0.1:8080"
DEFAULT_STORE = "./libdex-store"

_STATUS_BY_CODE = {
    "NOT_FOUND": 404,
    "CONFLICT": 409,
}


def _weights_from_payload(payload: WeightsPayload) -> WeightVector:
    return weights_from_dict({"weights": payload})


def create_app(
    store_path: str | os.PathLike | None = None,
    ui_dir: str | os.PathLike | None = None,
    *,
    seed_examples: bool = True,
) -> FastAPI:
    catalog = builtin_catalog()
    # derives from the shipped evidence and verifies the stored expectation;
    # a broken derivation pipeline refuses to serve
    ref_weights, ref_trace = reference_weights()

    store_path = store_path or os.environ.get("LIBDEX_STORE", DEFAULT_STORE)
    store = ProfileStore(store_path, catalog)
    if seed_examples:
        for profile in example_profiles():
            store.save(profile)

    app = FastAPI(title="libdex", version=__version__)

    def envelope() -> dict:
        return {"engine_version": __version__, "catalog_version": catalog.version}

    def resolve_profile(ref: ProfileRef) -> LibraryProfile:
        if ref.library_id is not None:
            return store.get(ref.library_id).profile
        profile, _ = profile_from_dict(ref.profile, catalog, source="<inline profile>")
        return profile

    @app.exception_handler(EngineError)
    async def engine_error_handler(request: Request, exc: EngineError) -> JSONResponse:
        status = _STATUS_BY_CODE.get(exc.code, 400)
        body = ApiErrorModel(code=exc.code, message=str(exc), detail=exc.detail)
        return JSONResponse(status_code=status, content=body.model_dump())

    @app.exception_handler(RequestValidationError)
    async def request_error_handler(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        errors = [
            {"loc": list(map(str, e.get("loc", ()))), "msg": e.get("msg", "")}
            for e in exc.errors()
        ]
        body = ApiErrorModel(
            code="PARSE",
            message="request body does not match the endpoint schema",
            detail={"errors": errors},
        )
        return JSONResponse(status_code=422, content=body.model_dump())

    @app.get("/api/catalog", response_model=CatalogResponse)
    def get_catalog() -> CatalogResponse:
        return CatalogResponse(**envelope(), catalog=catalog.to_dict())

    @app.get("/api/libraries", response_model=LibrariesResponse)
    def get_libraries() -> LibrariesResponse:
        summaries = [
            LibrarySummaryModel(
                library_id=s.library_id,
                name=s.name,
                version=s.version,
                language=s.language,
                latest_revision=s.latest_revision,
                content_hash=s.content_hash,
                assessment_count=s.assessment_count,
            )
            for s in store.list()
        ]
        return LibrariesResponse(**envelope(), libraries=summaries)

    @app.get("/api/libraries/{library_id}", response_model=LibraryResponse)
    def get_library(library_id: str, revision: int | None = None) -> LibraryResponse:
        record = store.get(library_id, revision)
        return LibraryResponse(
            **envelope(),
            library_id=library_id,
            record=RecordModel(
                revision=record.revision,
                content_hash=record.content_hash,
                previous_hash=record.previous_hash,
                saved_at=record.saved_at,
            ),
            profile=profile_to_dict(record.profile),
        )

    @app.get("/api/weights/reference", response_model=ReferenceWeightsResponse)
    def get_reference_weights() -> ReferenceWeightsResponse:
        return ReferenceWeightsResponse(
            **envelope(),
            weights={str(a): encode_rational(w) for a, w in ref_weights.weights.items()},
            weights_value={str(a): float(w) for a, w in ref_weights.weights.items()},
            trace=ref_trace.to_dict(),
        )

    @app.post("/api/score", response_model=ScoreResponse)
    def post_score(request: ScoreRequest) -> ScoreResponse:
        profile = resolve_profile(request)
        weights = _weights_from_payload(request.weights)
        warnings = profile.validate_against(catalog)
        report = compute_index(profile, weights, catalog)
        return ScoreResponse(
            **envelope(), report=report_to_dict(report), warnings=warnings
        )

    @app.post("/api/rank", response_model=RankResponse)
    def post_rank(request: RankRequest) -> RankResponse:
        profiles = [store.get(library_id).profile for library_id in request.library_ids]
        for index, document in enumerate(request.profiles):
            profile, _ = profile_from_dict(
                document, catalog, source=f"<inline profile {index}>"
            )
            profiles.append(profile)
        weights = _weights_from_payload(request.weights)
        ranked = rank_libraries(profiles, weights, catalog)
        return RankResponse(
            **envelope(), results=[report_to_dict(report) for _, report in ranked]
        )

    @app.post("/api/whatif", response_model=WhatIfResponse)
    def post_whatif(request: WhatIfRequest) -> WhatIfResponse:
        profile_a = resolve_profile(request.a)
        profile_b = resolve_profile(request.b)
        weights = (
            _weights_from_payload(request.weights)
            if request.weights is not None
            else ref_weights
        )
        crossovers = weight_sensitivity(
            profile_a, profile_b, weights, request.attribute, request.range, catalog
        )
        return WhatIfResponse(
            **envelope(),
            attribute=request.attribute,
            range=request.range,
            constraint_relaxed=True,
            crossovers=[
                {
                    "weight": {
                        "exact": encode_rational(point.weight_value),
                        "value": float(point.weight_value),
                        "display": format_decimal(point.weight_value),
                    },
                    "leader_before": point.leader_before,
                    "leader_after": point.leader_after,
                }
                for point in crossovers
            ],
        )

    @app.post("/api/weights/rebalance", response_model=RebalanceResponse)
    def post_rebalance(request: RebalanceRequest) -> RebalanceResponse:
        weights = _weights_from_payload(request.weights)
        rebalanced = rebalance_weights(weights, request.pinned)
        return RebalanceResponse(
            **envelope(),
            weights={str(a): encode_rational(w) for a, w in rebalanced.weights.items()},
            weights_value={str(a): float(w) for a, w in rebalanced.weights.items()},
            sum=encode_rational(rebalanced.total),
            sum_value=float(rebalanced.total),
        )

    ui_dir = ui_dir or os.environ.get("LIBDEX_UI")
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
