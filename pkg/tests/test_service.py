from __future__ import annotations

import random

import pytest
from fastapi.testclient import TestClient

from helpers import random_profile, random_weights
from libdex import __version__
from libdex.rational import encode_rational
from libdex.service.app import create_app
from libdex.store import profile_to_dict

REFERENCE_WEIGHTS_WIRE = {
    "1": 1.5, "2": 0.75, "3": 1.25, "4": 0.5, "5": 1, "6": 0.75, "7": 1.5,
    "8": 1, "9": 0.5, "10": 1.25, "11": 1, "12": 0.75, "13": 0.5,
    "14": 1.25, "15": 1.5,
}

BC_ID = "bouncy-castle-r1rv69"
TINK_ID = "tink-1.6.1"


@pytest.fixture()
def client(tmp_path):
    app = create_app(store_path=tmp_path / "store")
    with TestClient(app) as test_client:
        yield test_client


def test_envelope_on_every_response(client):
    for path in ("/api/catalog", "/api/libraries", "/api/weights/reference"):
        body = client.get(path).json()
        assert body["engine_version"] == __version__
        assert body["catalog_version"] == "builtin-1"


def test_catalog_endpoint(client):
    body = client.get("/api/catalog").json()
    assert len(body["catalog"]["attributes"]) == 15
    assert body["catalog"]["version"] == "builtin-1"


def test_libraries_seeded_with_examples(client):
    body = client.get("/api/libraries").json()
    ids = [entry["library_id"] for entry in body["libraries"]]
    assert ids == [BC_ID, TINK_ID]
    assert all(entry["latest_revision"] == 1 for entry in body["libraries"])


def test_get_single_library(client):
    body = client.get(f"/api/libraries/{TINK_ID}").json()
    assert body["record"]["revision"] == 1
    assert body["profile"]["library"]["name"] == "Tink"
    assert len(body["profile"]["assessments"]) == 28


def test_get_unknown_library_is_404(client):
    response = client.get("/api/libraries/ghost-1.0")
    assert response.status_code == 404
    assert response.json()["code"] == "NOT_FOUND"


def test_reference_weights_endpoint(client):
    body = client.get("/api/weights/reference").json()
    assert body["weights"] == REFERENCE_WEIGHTS_WIRE
    assert body["trace"]["sum_matches_attribute_count"] is True
    assert body["trace"]["total_ranks"]["1"] == 15
    assert body["trace"]["total_ranks"]["10"] == 10.5


def test_score_stored_profile(client):
    response = client.post(
        "/api/score",
        json={"library_id": TINK_ID, "weights": REFERENCE_WEIGHTS_WIRE},
    )
    assert response.status_code == 200
    report = response.json()["report"]
    assert report["total"]["display"] == "16.75"
    assert report["total"]["exact"] == 16.75


def test_score_inline_profile(client, bouncy_castle):
    response = client.post(
        "/api/score",
        json={
            "profile": profile_to_dict(bouncy_castle),
            "weights": REFERENCE_WEIGHTS_WIRE,
        },
    )
    report = response.json()["report"]
    assert report["total"]["exact"] == "85/12"
    assert report["total"]["display"] == "7.08"


def test_score_rejects_bad_weight_sum(client):
    bad = dict(REFERENCE_WEIGHTS_WIRE)
    bad["1"] = 0.5  # sum drops to 14
    response = client.post(
        "/api/score", json={"library_id": TINK_ID, "weights": bad}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "WEIGHT_SUM"


def test_score_requires_exactly_one_profile_source(client):
    response = client.post("/api/score", json={"weights": REFERENCE_WEIGHTS_WIRE})
    assert response.status_code == 422
    assert response.json()["code"] == "PARSE"


def test_rank_returns_published_order(client):
    response = client.post(
        "/api/rank",
        json={"library_ids": [BC_ID, TINK_ID], "weights": REFERENCE_WEIGHTS_WIRE},
    )
    results = response.json()["results"]
    assert [r["library"]["name"] for r in results] == ["Tink", "Bouncy Castle"]
    assert [r["total"]["display"] for r in results] == ["16.75", "7.08"]


def test_whatif_published_pair_has_no_crossover(client):
    response = client.post(
        "/api/whatif",
        json={
            "a": {"library_id": BC_ID},
            "b": {"library_id": TINK_ID},
            "attribute": 15,
            "range": [0, 3],
        },
    )
    body = response.json()
    assert body["crossovers"] == []
    assert body["constraint_relaxed"] is True


def test_whatif_synthetic_crossover(client, catalog):
    def inline(name, ratings):
        return {
            "catalog_version": catalog.version,
            "library": {"name": name, "version": "1"},
            "assessments": [
                {"criterion": cid, "rating": value, "note": "n"}
                for cid, value in ratings.items()
            ],
        }

    response = client.post(
        "/api/whatif",
        json={
            "a": {"profile": inline("Slow", {"2a": 0.5})},
            "b": {"profile": inline("Steady", {"2a": 0, "5a": 1})},
            "attribute": 2,
            "range": [0, 3],
        },
    )
    crossovers = response.json()["crossovers"]
    assert len(crossovers) == 1
    assert crossovers[0]["weight"]["exact"] == 2
    assert crossovers[0]["leader_before"] == "Steady"
    assert crossovers[0]["leader_after"] == "Slow"


def test_rebalance_endpoint(client):
    weights = {str(a): 1 for a in range(1, 16)}
    weights["15"] = 1.5
    response = client.post(
        "/api/weights/rebalance", json={"weights": weights, "pinned": [15]}
    )
    body = response.json()
    assert body["weights"]["15"] == 1.5
    assert body["sum"] == 15
    assert abs(body["sum_value"] - 15.0) < 1e-9
    assert body["weights"]["1"] == "27/28"
    assert abs(body["weights_value"]["1"] - 27 / 28) < 1e-12


def test_rebalance_infeasible_pins_rejected(client):
    weights = {str(a): 1 for a in range(1, 16)}
    weights["1"] = 20
    response = client.post(
        "/api/weights/rebalance", json={"weights": weights, "pinned": [1]}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "PIN_SET"


def test_responses_are_deterministic(client):
    payload = {"library_ids": [BC_ID, TINK_ID], "weights": REFERENCE_WEIGHTS_WIRE}
    first = client.post("/api/rank", json=payload)
    second = client.post("/api/rank", json=payload)
    assert first.content == second.content


def test_random_inline_profiles_score_like_the_engine(client, catalog):
    from libdex.scoring import compute_index

    rng = random.Random(21)
    for _ in range(10):
        profile = random_profile(rng, catalog)
        weights = random_weights(rng, catalog)
        wire = {str(a): encode_rational(w) for a, w in weights.weights.items()}
        response = client.post(
            "/api/score",
            json={"profile": profile_to_dict(profile), "weights": wire},
        )
        assert response.status_code == 200
        expected = compute_index(profile, weights, catalog).total
        assert response.json()["report"]["total"]["exact"] == encode_rational(expected)
