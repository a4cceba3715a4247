"""Regenerate the packaged reference data and the repo-level fixture copies.

Run from the repo root after an editable install:

    python tools/regen_fixtures.py

Everything flows through the engine's canonical serializer, so the emitted
bytes are exactly what the store and the exports would produce.
"""

from __future__ import annotations

import shutil
import sys
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from libdex.builtin import BUILTIN_CATALOG_VERSION, builtin_catalog  # noqa: E402
from libdex.canon import canonical_bytes  # noqa: E402
from libdex.scoring import Assessment, LibraryInfo, LibraryProfile  # noqa: E402
from libdex.store import profile_to_dict  # noqa: E402
from libdex.weighting import (  # noqa: E402
    EvidenceSource,
    derive_reference_weights,
    evidence_to_dict,
    weights_to_dict,
)

DATA = REPO / "src" / "libdex" / "data"
FIXTURES = REPO / "fixtures"

ASSESSED_AT = "2021-10-28"
ASSESSOR = "reference-evaluation"

LITERATURE_COUNTS = {
    1: 33, 2: 2, 3: 9, 4: 3, 5: 4, 6: 4, 7: 4, 8: 0,
    9: 0, 10: 8, 11: 0, 12: 0, 13: 2, 14: 1, 15: 4,
}

INTERVIEW_COUNTS = {
    1: 10, 2: 4, 3: 1, 4: 0, 5: 0, 6: 0, 7: 5, 8: 11,
    9: 4, 10: 3, 11: 8, 12: 26, 13: 0, 14: 4, 15: 19,
}

# the published per-source ranks this tally should reproduce
INTERVIEW_RANKS = {
    1: 12, 2: 8, 3: 5, 4: Fraction(5, 2), 5: Fraction(5, 2), 6: Fraction(5, 2),
    7: 10, 8: 13, 9: 8, 10: 6, 11: 11, 12: 15, 13: Fraction(5, 2), 14: 8, 15: 14,
}

QUESTIONNAIRE_RANKS = {
    1: 15, 2: 9, 3: 11, 4: 10, 5: 12, 6: 10, 7: 10, 8: 10,
    9: 8, 10: 9, 11: 13, 12: 6, 13: 11, 14: 15, 15: 14,
}

BOUNCY_CASTLE = LibraryInfo(
    name="Bouncy Castle",
    version="r1rv69",
    language="Java",
    source_url="https://github.com/bcgit/bc-java",
)

TINK = LibraryInfo(
    name="Tink",
    version="1.6.1",
    language="Java",
    source_url="https://github.com/google/tink",
)

# (criterion, rating, note)
BOUNCY_CASTLE_RATINGS = [
    ("1a", 0, "about half of the public calls stay at two parameters or fewer"),
    ("1b", 0, "flexible constructors admit obsolete algorithm choices, e.g. the AES key generator accepts any requested size"),
    ("1c", 1, "naming mostly follows the common Java conventions"),
    ("2a", 0, "parallel use possible by splitting workloads manually"),
    ("3a", 0, "test examples cover parts of the API"),
    ("3b", 2, "dedicated exception hierarchy with descriptive messages"),
    ("4a", 2, "extension-relevant classes are public and inheritable"),
    ("4b", 2, "user-facing functionality is exposed through interfaces"),
    ("5a", 1, "largely focused on cryptographic primitives, with some extras"),
    ("6a", 2, "operations report success through return values"),
    ("6b", 2, "parameter order is consistent across the API"),
    ("7a", 2, "static analysis grade A for bugs"),
    ("7b", -2, "static analysis grade E for vulnerabilities"),
    ("7c", -2, "static analysis grade E for code smells"),
    ("8a", 2, "free of charge"),
    ("8b", 2, "MIT-style license permits unrestricted commercial use"),
    ("9a", 1, "available via common package managers; optional pieces need manual setup"),
    ("10a", 1, "most settings are predefined and adjustable"),
    ("10b", 0, "the largest recurring code blocks are simplified"),
    ("11a", 1, "releases appear roughly every four months without a fixed schedule"),
    ("11b", -1, "security fixes ship, but often outside the 90-day window"),
    ("11c", 1, "free community support via mailing lists, no guaranteed turnaround"),
    ("12a", 1, "several independent field reports in trade media"),
    ("12b", 1, "popularity approaches the reference repository snapshot"),
    ("14a", -1, "some default procedures fall short of the whitelist"),
    ("14b", 0, "certified once"),
    ("15a", 1, "most functions carry documentation"),
    ("15b", -2, "usage examples are missing for nearly all functions"),
]

TINK_RATINGS = [
    ("1a", -1, "many calls need three or more parameters"),
    ("1b", 2, "safe default values are used for cryptographic procedures"),
    ("1c", 2, "naming follows the common Java style guides throughout"),
    ("2a", 0, "parallel use possible via workarounds"),
    ("3a", 0, "partial test support in the documentation"),
    ("3b", 1, "standard exceptions, often with helpful descriptions"),
    ("4a", 2, "extension points are declared public"),
    ("4b", 2, "interfaces cover the user-facing classes"),
    ("5a", 2, "strictly focused on its core mission"),
    ("6a", 2, "return values confirm successful execution"),
    ("6b", 2, "consistent parameter ordering"),
    ("7a", 1, "static analysis grade B for bugs"),
    ("7b", 2, "static analysis grade A for vulnerabilities"),
    ("7c", 2, "static analysis grade A for code smells"),
    ("8a", 2, "free of charge"),
    ("8b", 2, "permissive license allows unrestricted commercial use"),
    ("9a", 2, "all dependencies resolve automatically via the package manager"),
    ("10a", 0, "settings are predefined and cannot be changed"),
    ("10b", 2, "dedicated methods remove recurring code"),
    ("11a", 1, "quarterly releases without a formally fixed schedule"),
    ("11b", 0, "patch policy not clearly communicated"),
    ("11c", -1, "no official support channel beyond the issue tracker"),
    ("12a", -1, "few independent success stories so far"),
    ("12b", 2, "well above the reference repository snapshot in stars"),
    ("14a", 2, "algorithms meet or exceed the current state of the art"),
    ("14b", -2, "not certified"),
    ("15a", 2, "every function is documented"),
    ("15b", 2, "examples accompany each function"),
]

GRADE_REPORTS = {
    "bouncy-castle": {"bugs": "A", "vulnerability": "E", "code_smell": "E"},
    "tink": {"bugs": "B", "vulnerability": "A", "code_smell": "A"},
}


def build_profile(info: LibraryInfo, ratings: list[tuple[str, int, str]]) -> LibraryProfile:
    assessments = tuple(
        Assessment(
            criterion_id=cid,
            rating=Fraction(value),
            note=note,
            assessor=ASSESSOR,
            assessed_at=ASSESSED_AT,
        )
        for cid, value, note in ratings
    )
    return LibraryProfile(
        library=info,
        catalog_version=BUILTIN_CATALOG_VERSION,
        assessments=assessments,
    )


def write(path: Path, document: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(canonical_bytes(document))
    print(f"wrote {path.relative_to(REPO)}")


def main() -> None:
    catalog = builtin_catalog()

    literature = EvidenceSource.from_counts(
        "literature",
        LITERATURE_COUNTS,
        notes="Mention counts of each attribute across the surveyed publications.",
    )
    interviews = EvidenceSource.from_counts(
        "interviews",
        INTERVIEW_COUNTS,
        notes=(
            "Mention counts from the decision-maker interviews. Attribute 13 is "
            "stored with 0 mentions: the source tally prints 6 there, which is "
            "inconsistent with its own printed rank of 2.5 (0 mentions is)."
        ),
        expected_ranks=INTERVIEW_RANKS,
    )
    questionnaire = EvidenceSource.from_ranks(
        "questionnaire",
        {k: Fraction(v) for k, v in QUESTIONNAIRE_RANKS.items()},
        notes=(
            "Mean ranks from the relevance-sorting survey question; raw ballots "
            "were not published, so these ranks are taken as given. Attribute 6 "
            "is stored as rank 10: the printed per-source value (7) contradicts "
            "the printed average (7.67), the re-ranking, and the final weights, "
            "all of which require 10."
        ),
    )

    for name, source in (
        ("literature", literature),
        ("interviews", interviews),
        ("questionnaire", questionnaire),
    ):
        write(DATA / "evidence" / f"{name}.json", evidence_to_dict(source))

    assert not interviews.rank_discrepancies(), interviews.rank_discrepancies()

    vectors = [s.to_rank_vector() for s in (literature, interviews, questionnaire)]
    weights, trace = derive_reference_weights(
        vectors, ["literature", "interviews", "questionnaire"]
    )
    assert weights.total == 15, weights.total
    write(
        DATA / "weights.reference.json",
        weights_to_dict(weights, catalog_version=catalog.version, trace=trace),
    )

    bc = build_profile(BOUNCY_CASTLE, BOUNCY_CASTLE_RATINGS)
    tink = build_profile(TINK, TINK_RATINGS)
    for profile in (bc, tink):
        profile.validate_against(catalog)
    write(DATA / "profiles" / "bouncy-castle.profile.json", profile_to_dict(bc))
    write(DATA / "profiles" / "tink.profile.json", profile_to_dict(tink))

    # repo-level fixture copies for CLI use; byte-identical to package data
    if FIXTURES.exists():
        shutil.rmtree(FIXTURES)
    (FIXTURES / "evidence").mkdir(parents=True)
    for name in ("literature", "interviews", "questionnaire"):
        shutil.copy2(DATA / "evidence" / f"{name}.json", FIXTURES / "evidence" / f"{name}.json")
    shutil.copy2(DATA / "weights.reference.json", FIXTURES / "weights.reference.json")
    for name in ("bouncy-castle", "tink"):
        shutil.copy2(
            DATA / "profiles" / f"{name}.profile.json", FIXTURES / f"{name}.profile.json"
        )
    for name, report in GRADE_REPORTS.items():
        write(FIXTURES / f"{name}.grades.json", report)
    print("fixtures synced")


if __name__ == "__main__":
    main()
