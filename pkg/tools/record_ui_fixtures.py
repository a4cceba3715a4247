"""Record real API responses into frontend test fixtures.

The web client's contract tests replay these instead of inventing payloads,
so every number they assert on originated from the actual service. Re-run
after any API change:

    python3 tools/record_ui_fixtures.py
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from libdex.service.app import create_app  # noqa: E402

FIXTURES = REPO / "frontend" / "test" / "fixtures"

BC_ID = "bouncy-castle-r1rv69"
TINK_ID = "tink-1.6.1"


def write(name: str, payload: dict) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(REPO)}")


def main() -> None:
    with tempfile.TemporaryDirectory() as store_dir:
        app = create_app(store_path=store_dir)
        with TestClient(app) as client:
            reference = client.get("/api/weights/reference").json()
            write("reference.json", {"response": reference})

            write("catalog.json", {"response": client.get("/api/catalog").json()})
            write("libraries.json", {"response": client.get("/api/libraries").json()})

            rank_request = {
                "library_ids": [BC_ID, TINK_ID],
                "weights": reference["weights"],
            }
            rank = client.post("/api/rank", json=rank_request)
            write("rank.json", {"request": rank_request, "response": rank.json()})

            score_request = {"library_id": TINK_ID, "weights": reference["weights"]}
            score = client.post("/api/score", json=score_request)
            write("score_tink.json", {"request": score_request, "response": score.json()})

            # the UI acceptance interaction: Documentation (15) pinned at its
            # reference value, Security (14) dragged to 2.0
            dragged = dict(reference["weights"])
            dragged["14"] = 2.0
            rebalance_request = {"weights": dragged, "pinned": [14, 15]}
            rebalance = client.post("/api/weights/rebalance", json=rebalance_request)
            write(
                "rebalance_pin15_drag14.json",
                {"request": rebalance_request, "response": rebalance.json()},
            )

            whatif_request = {
                "a": {"library_id": BC_ID},
                "b": {"library_id": TINK_ID},
                "attribute": 15,
                "range": [0, 3],
                "weights": reference["weights"],
            }
            whatif = client.post("/api/whatif", json=whatif_request)
            write("whatif.json", {"request": whatif_request, "response": whatif.json()})


if __name__ == "__main__":
    main()
