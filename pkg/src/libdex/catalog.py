"""Evaluation rubric: attributes, criteria, rating scales, and validation.

A catalog is an immutable list of attributes, each carrying zero or more
assessable criteria. Every rating lives on the scale [-2, +2]; how a value
is reached depends on the criterion's rubric kind:

* ``default_percentage``: the fraction of the criterion's condition that is
  met maps through fixed thresholds (>=90% -> +2, >=75% -> +1, >=50% -> 0,
  >=25% -> -1, else -2),
* ``enumerated_anchors``: the rubric names specific score points; values
  between the extreme anchors may be interpolated linearly when allowed,
* ``grade_scale``: five report grades A..E map linearly to +2..-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .canon import dumps_canonical
from .errors import (
    DocumentError,
    DuplicateCriterion,
    OffAnchorRating,
    RangeViolation,
    UnknownAttribute,
    UnknownCriterion,
    UnknownGrade,
)
from .rational import encode_rational, to_rational

Rating = Fraction

RATING_MIN = Fraction(-2)
RATING_MAX = Fraction(2)

GRADES = "ABCDE"

CATALOG_FORMAT_VERSION = 1


class RubricKind(str, Enum):
    DEFAULT_PERCENTAGE = "default_percentage"
    ENUMERATED_ANCHORS = "enumerated_anchors"
    GRADE_SCALE = "grade_scale"


@dataclass(frozen=True)
class RubricSpec:
    """How a criterion's rating is obtained and which values are admissible."""

    kind: RubricKind
    anchors: tuple[tuple[str, Rating], ...] = ()
    interpolation_allowed: bool = True

    def __post_init__(self) -> None:
        for label, value in self.anchors:
            if not RATING_MIN <= value <= RATING_MAX:
                raise RangeViolation(
                    f"anchor {label!r} has value {value} outside [-2, +2]"
                )
        if self.kind is RubricKind.DEFAULT_PERCENTAGE and self.anchors:
            raise DocumentError("default_percentage rubrics carry no anchors")
        if self.kind is RubricKind.GRADE_SCALE:
            expected = tuple(Fraction(2 - i) for i in range(5))
            if tuple(v for _, v in self.anchors) != expected:
                raise DocumentError("grade_scale rubrics map exactly A..E to +2..-2")

    @property
    def anchor_values(self) -> tuple[Rating, ...]:
        return tuple(value for _, value in self.anchors)


def grade_scale_anchors() -> tuple[tuple[str, Rating], ...]:
    return tuple((g, Fraction(2 - i)) for i, g in enumerate(GRADES))


@dataclass(frozen=True)
class CriterionDef:
    id: str
    name: str
    attribute_id: int
    rubric: RubricSpec
    guidance: str = ""


@dataclass(frozen=True)
class AttributeDef:
    id: int
    name: str
    description: str
    criteria: tuple[CriterionDef, ...] = ()


class Catalog:
    """Immutable rubric with id lookups. Safe to share across threads."""

    def __init__(self, version: str, attributes: Sequence[AttributeDef]):
        self.version = version
        self.attributes: tuple[AttributeDef, ...] = tuple(attributes)
        self._by_attribute: dict[int, AttributeDef] = {}
        self._by_criterion: dict[str, CriterionDef] = {}
        for attribute in self.attributes:
            if attribute.id in self._by_attribute:
                raise DocumentError(f"duplicate attribute id {attribute.id}")
            self._by_attribute[attribute.id] = attribute
            for criterion in attribute.criteria:
                if criterion.id in self._by_criterion:
                    raise DuplicateCriterion(f"duplicate criterion id {criterion.id!r}")
                if criterion.attribute_id != attribute.id:
                    raise DocumentError(
                        f"criterion {criterion.id!r} claims attribute "
                        f"{criterion.attribute_id}, listed under {attribute.id}"
                    )
                self._by_criterion[criterion.id] = criterion

    @property
    def n(self) -> int:
        return len(self.attributes)

    def attribute_ids(self) -> tuple[int, ...]:
        return tuple(a.id for a in self.attributes)

    def attribute(self, attribute_id: int) -> AttributeDef:
        try:
            return self._by_attribute[attribute_id]
        except KeyError:
            raise UnknownAttribute(f"unknown attribute id {attribute_id}") from None

    def criterion(self, criterion_id: str) -> CriterionDef:
        try:
            return self._by_criterion[criterion_id]
        except KeyError:
            raise UnknownCriterion(f"unknown criterion id {criterion_id!r}") from None

    def has_criterion(self, criterion_id: str) -> bool:
        return criterion_id in self._by_criterion

    def criteria(self) -> Iterator[CriterionDef]:
        for attribute in self.attributes:
            yield from attribute.criteria

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Catalog):
            return NotImplemented
        return self.version == other.version and self.attributes == other.attributes

    def __repr__(self) -> str:
        return f"Catalog(version={self.version!r}, attributes={self.n})"

    def to_dict(self) -> dict:
        return {
            "format_version": CATALOG_FORMAT_VERSION,
            "version": self.version,
            "attributes": [
                {
                    "id": attribute.id,
                    "name": attribute.name,
                    "description": attribute.description,
                    "criteria": [
                        {
                            "id": criterion.id,
                            "name": criterion.name,
                            "rubric": {
                                "kind": criterion.rubric.kind.value,
                                "anchors": {
                                    label: encode_rational(value)
                                    for label, value in criterion.rubric.anchors
                                },
                                "interpolation_allowed": criterion.rubric.interpolation_allowed,
                            },
                            "guidance": criterion.guidance,
                        }
                        for criterion in attribute.criteria
                    ],
                }
                for attribute in self.attributes
            ],
        }

    def to_canonical_json(self) -> str:
        return dumps_canonical(self.to_dict())

    @classmethod
    def from_dict(cls, document: dict) -> "Catalog":
        try:
            version = document["version"]
            raw_attributes = document["attributes"]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"catalog document missing field: {exc}") from exc
        attributes = []
        for raw_attribute in raw_attributes:
            criteria = []
            for raw_criterion in raw_attribute.get("criteria", []):
                raw_rubric = raw_criterion["rubric"]
                anchors = tuple(
                    sorted(
                        (
                            (label, to_rational(value, context=f"anchor {label!r}"))
                            for label, value in raw_rubric.get("anchors", {}).items()
                        ),
                        key=lambda pair: (-pair[1], pair[0]),
                    )
                )
                rubric = RubricSpec(
                    kind=RubricKind(raw_rubric["kind"]),
                    anchors=anchors,
                    interpolation_allowed=raw_rubric.get("interpolation_allowed", True),
                )
                criteria.append(
                    CriterionDef(
                        id=raw_criterion["id"],
                        name=raw_criterion["name"],
                        attribute_id=raw_attribute["id"],
                        rubric=rubric,
                        guidance=raw_criterion.get("guidance", ""),
                    )
                )
            attributes.append(
                AttributeDef(
                    id=raw_attribute["id"],
                    name=raw_attribute["name"],
                    description=raw_attribute.get("description", ""),
                    criteria=tuple(criteria),
                )
            )
        return cls(version=version, attributes=attributes)


def rate_default_percentage(fraction_met: int | float | str | Fraction) -> Rating:
    """Threshold mapping for criteria rated by how much of a condition holds.

    Thresholds are closed at the lower bound: exactly 25% already earns -1.
    """
    x = to_rational(fraction_met, context="fraction_met")
    if not 0 <= x <= 1:
        raise RangeViolation(f"fraction_met must lie in [0, 1], got {x}")
    for threshold, rating in (
        (Fraction(9, 10), 2),
        (Fraction(3, 4), 1),
        (Fraction(1, 2), 0),
        (Fraction(1, 4), -1),
    ):
        if x >= threshold:
            return Fraction(rating)
    return Fraction(-2)


def rate_grade(grade: str) -> Rating:
    """Map a report grade A..E (case-insensitive) onto +2..-2."""
    token = grade.strip().upper() if isinstance(grade, str) else grade
    if not isinstance(token, str) or token not in GRADES:
        raise UnknownGrade(f"unknown grade {grade!r}, expected one of A..E")
    return Fraction(2 - GRADES.index(token))


def validate_rating(criterion: CriterionDef, rating: int | float | str | Fraction) -> list[str]:
    """Check a rating against a criterion's rubric.

    Returns advisory warnings (e.g. an off-grade value on a grade-scale
    criterion); raises RangeViolation or OffAnchorRating on hard violations.
    """
    value = to_rational(rating, context=f"rating for {criterion.id}")
    if not RATING_MIN <= value <= RATING_MAX:
        raise RangeViolation(
            f"rating {value} for criterion {criterion.id} outside [-2, +2]",
            detail={"criterion": criterion.id, "rating": encode_rational(value)},
        )
    rubric = criterion.rubric
    warnings: list[str] = []
    if rubric.kind is RubricKind.ENUMERATED_ANCHORS:
        anchor_values = rubric.anchor_values
        if rubric.interpolation_allowed:
            low, high = min(anchor_values), max(anchor_values)
            if not low <= value <= high:
                raise OffAnchorRating(
                    f"rating {value} for criterion {criterion.id} outside the "
                    f"interpolable anchor span [{low}, {high}]",
                    detail=_nearest_anchor_detail(criterion, value),
                )
        elif value not in anchor_values:
            raise OffAnchorRating(
                f"rating {value} for criterion {criterion.id} does not match "
                f"any anchor (interpolation disabled)",
                detail=_nearest_anchor_detail(criterion, value),
            )
    elif rubric.kind is RubricKind.GRADE_SCALE and value not in rubric.anchor_values:
        warnings.append(
            f"criterion {criterion.id}: rating {encode_rational(value)} falls "
            f"between grade anchors; accepted but unusual for a grade scale"
        )
    return warnings


def _nearest_anchor_detail(criterion: CriterionDef, value: Rating) -> dict:
    ranked = sorted(criterion.rubric.anchors, key=lambda pair: abs(pair[1] - value))
    return {
        "criterion": criterion.id,
        "rating": encode_rational(value),
        "nearest_anchors": [
            {"label": label, "value": encode_rational(anchor)}
            for label, anchor in ranked[:2]
        ],
    }
