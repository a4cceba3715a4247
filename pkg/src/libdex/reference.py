"""Packaged reference data: evidence sources, expected weights, example profiles.

The reference weighting is always re-derived from the shipped evidence and
checked against the stored expectation, so a regression in the derivation
pipeline surfaces immediately instead of hiding behind hard-coded numbers.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .builtin import builtin_catalog
from .errors import DocumentError
from .scoring import LibraryProfile
from .store import profile_from_dict
from .weighting import (
    DerivationTrace,
    EvidenceSource,
    WeightVector,
    derive_reference_weights,
    evidence_from_dict,
    weights_from_dict,
)

EVIDENCE_FILES = ("literature.json", "interviews.json", "questionnaire.json")
PROFILE_FILES = ("bouncy-castle.profile.json", "tink.profile.json")


def _load_data(relative: str) -> dict:
    path = resources.files("libdex").joinpath("data", *relative.split("/"))
    return json.loads(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def reference_evidence() -> tuple[EvidenceSource, ...]:
    return tuple(
        evidence_from_dict(_load_data(f"evidence/{name}")) for name in EVIDENCE_FILES
    )


@lru_cache(maxsize=1)
def expected_reference_weights() -> WeightVector:
    return weights_from_dict(_load_data("weights.reference.json"))


@lru_cache(maxsize=1)
def reference_weights() -> tuple[WeightVector, DerivationTrace]:
    """Derive the reference weighting from packaged evidence and verify it."""
    sources = reference_evidence()
    vectors = [source.to_rank_vector() for source in sources]
    labels = [source.label for source in sources]
    weights, trace = derive_reference_weights(vectors, labels)
    expected = expected_reference_weights()
    if weights.weights != expected.weights:
        raise DocumentError(
            "derived reference weights disagree with the stored expectation; "
            "the packaged evidence or the derivation pipeline changed"
        )
    return weights, trace


@lru_cache(maxsize=1)
def example_profiles() -> tuple[LibraryProfile, ...]:
    catalog = builtin_catalog()
    profiles = []
    for name in PROFILE_FILES:
        profile, _ = profile_from_dict(
            _load_data(f"profiles/{name}"), catalog, source=name
        )
        profiles.append(profile)
    return tuple(profiles)
