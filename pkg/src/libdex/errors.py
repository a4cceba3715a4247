"""Engine errors with stable machine codes.

Every failure the engine can raise maps to exactly one code; the CLI and the
HTTP API translate codes into exit statuses and ApiError payloads without
inspecting message text.
"""

from __future__ import annotations

from typing import Any


class EngineError(Exception):
    """Base class for all engine failures."""

    code = "ENGINE"
    retryable = False

    def __init__(self, message: str, *, detail: dict[str, Any] | None = None):
        super().__init__(message)
        self.detail = detail or {}


class RangeViolation(EngineError):
    """A numeric input falls outside its allowed interval."""

    code = "RANGE"


class OffAnchorRating(EngineError):
    """A rating is not reachable from the criterion's anchor set."""

    code = "OFF_ANCHOR"


class UnknownGrade(EngineError):
    code = "GRADE"


class UnknownCriterion(EngineError):
    code = "UNKNOWN_CRITERION"


class UnknownAttribute(EngineError):
    code = "UNKNOWN_ATTRIBUTE"


class DuplicateCriterion(EngineError):
    code = "DUPLICATE_CRITERION"


class CatalogMismatch(EngineError):
    """A document references a catalog version other than the loaded one."""

    code = "CATALOG_VERSION"


class WeightSumViolation(EngineError):
    """Weight total drifts from the attribute count beyond tolerance."""

    code = "WEIGHT_SUM"


class NegativeWeight(EngineError):
    code = "WEIGHT_NEGATIVE"


class WeightCoverageError(EngineError):
    """Weight vector does not cover exactly the catalog's attribute set."""

    code = "WEIGHT_COVERAGE"


class AttributeSetMismatch(EngineError):
    """Evidence sources disagree about which attributes exist."""

    code = "ATTRIBUTE_SET"


class MalformedBallot(EngineError):
    """A ballot is not a permutation of the attribute set."""

    code = "BALLOT"


class InfeasiblePins(EngineError):
    """Pinned weights leave no valid rebalance of the remaining ones."""

    code = "PIN_SET"


class DegenerateRange(EngineError):
    """An interval with lower bound above its upper bound."""

    code = "WHATIF_RANGE"


class DocumentError(EngineError):
    """A document fails to parse or violates its schema."""

    code = "PARSE"


class MissingEvidenceNote(EngineError):
    """An extreme rating (+2 or -2) arrived without an evidence note."""

    code = "EVIDENCE_NOTE"


class NotFoundError(EngineError):
    code = "NOT_FOUND"


class WriteConflict(EngineError):
    """A concurrent writer claimed the revision first; safe to retry."""

    code = "CONFLICT"
    retryable = True
