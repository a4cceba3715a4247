"""Index computation: attribute scores, totals, bounds, ranking, what-if.

The index of a library is the sum over assessed attributes of the mean of
that attribute's rated criteria times the attribute's weight. Unassessed
attributes contribute nothing and also shrink the achievable bounds, so a
profile that skips an attribute cannot be compared on it in either
direction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .builtin import builtin_catalog
from .catalog import Catalog, Rating, validate_rating
from .errors import (
    CatalogMismatch,
    DegenerateRange,
    DocumentError,
    DuplicateCriterion,
    WeightCoverageError,
)
from .rational import to_rational
from .weighting import WeightVector, validate_weights

_SLUG_RUN = re.compile(r"[^a-z0-9.]+")


def slugify(text: str) -> str:
    return _SLUG_RUN.sub("-", text.lower()).strip("-")


@dataclass(frozen=True)
class LibraryInfo:
    name: str
    version: str
    language: str = ""
    source_url: str = ""

    @property
    def library_id(self) -> str:
        return f"{slugify(self.name)}-{slugify(self.version)}"


@dataclass(frozen=True)
class Assessment:
    criterion_id: str
    rating: Rating
    note: str = ""
    assessor: str = ""
    assessed_at: str = ""


@dataclass(frozen=True)
class LibraryProfile:
    library: LibraryInfo
    catalog_version: str
    assessments: tuple[Assessment, ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for assessment in self.assessments:
            if assessment.criterion_id in seen:
                raise DuplicateCriterion(
                    f"criterion {assessment.criterion_id!r} assessed twice"
                )
            seen.add(assessment.criterion_id)

    def rating_by_criterion(self) -> dict[str, Rating]:
        return {a.criterion_id: a.rating for a in self.assessments}

    def validate_against(self, catalog: Catalog) -> list[str]:
        """Resolve every criterion and check each rating; returns warnings."""
        if self.catalog_version != catalog.version:
            raise CatalogMismatch(
                f"profile {self.library.library_id!r} references catalog "
                f"{self.catalog_version!r}, loaded catalog is {catalog.version!r}"
            )
        warnings: list[str] = []
        for assessment in self.assessments:
            criterion = catalog.criterion(assessment.criterion_id)
            warnings.extend(validate_rating(criterion, assessment.rating))
        return warnings


@dataclass(frozen=True)
class AttributeRow:
    attribute_id: int
    name: str
    ratings: tuple[tuple[str, Rating], ...]
    assessed_count: int
    mean: Rating | None
    weight: Fraction
    contribution: Fraction
    assessed: bool


@dataclass(frozen=True)
class IndexReport:
    library: LibraryInfo
    catalog_version: str
    rows: tuple[AttributeRow, ...]
    total: Fraction
    achievable_min: Fraction
    achievable_max: Fraction
    weights_used: WeightVector


def _check_weight_coverage(weights: WeightVector, catalog: Catalog) -> None:
    have = weights.attribute_ids()
    want = frozenset(catalog.attribute_ids())
    if have != want:
        missing = sorted(want - have)
        extra = sorted(have - want)
        raise WeightCoverageError(
            "weight vector must cover exactly the catalog's attributes",
            detail={"missing": missing, "unexpected": extra},
        )


def attribute_score(
    profile: LibraryProfile,
    attribute_id: int,
    catalog: Catalog | None = None,
) -> Rating | None:
    """Mean rating over the attribute's assessed criteria; None if nothing
    (or no criteria at all) is rated."""
    catalog = catalog or builtin_catalog()
    attribute = catalog.attribute(attribute_id)
    ratings = profile.rating_by_criterion()
    values = [ratings[c.id] for c in attribute.criteria if c.id in ratings]
    if not values:
        return None
    return Fraction(sum(values), len(values))


def compute_index(
    profile: LibraryProfile,
    weights: WeightVector,
    catalog: Catalog | None = None,
    *,
    validate: bool = True,
) -> IndexReport:
    """Score a profile under a weight vector, keeping every intermediate."""
    catalog = catalog or builtin_catalog()
    _check_weight_coverage(weights, catalog)
    if validate:
        validate_weights(weights)
        profile.validate_against(catalog)
    ratings = profile.rating_by_criterion()
    rows = []
    total = Fraction(0)
    achievable = Fraction(0)
    for attribute in catalog.attributes:
        attribute_ratings = tuple(
            (c.id, ratings[c.id]) for c in attribute.criteria if c.id in ratings
        )
        weight = weights.weights[attribute.id]
        if attribute_ratings:
            mean = Fraction(
                sum(value for _, value in attribute_ratings), len(attribute_ratings)
            )
            contribution = mean * weight
            total += contribution
            achievable += 2 * weight
        else:
            mean = None
            contribution = Fraction(0)
        rows.append(
            AttributeRow(
                attribute_id=attribute.id,
                name=attribute.name,
                ratings=attribute_ratings,
                assessed_count=len(attribute_ratings),
                mean=mean,
                weight=weight,
                contribution=contribution,
                assessed=bool(attribute_ratings),
            )
        )
    return IndexReport(
        library=profile.library,
        catalog_version=profile.catalog_version,
        rows=tuple(rows),
        total=total,
        achievable_min=-achievable,
        achievable_max=achievable,
        weights_used=weights,
    )


def achievable_bounds(
    profile: LibraryProfile,
    weights: WeightVector,
    catalog: Catalog | None = None,
) -> tuple[Fraction, Fraction]:
    """Extreme totals reachable given which attributes were actually rated."""
    report = compute_index(profile, weights, catalog)
    return report.achievable_min, report.achievable_max


def rank_libraries(
    profiles: Sequence[LibraryProfile],
    weights: WeightVector,
    catalog: Catalog | None = None,
) -> list[tuple[LibraryProfile, IndexReport]]:
    """Order profiles by descending total; exact ties break by name."""
    if not profiles:
        raise DocumentError("at least one profile is required")
    versions = {p.catalog_version for p in profiles}
    if len(versions) > 1:
        raise CatalogMismatch(
            f"profiles reference mixed catalog versions: {sorted(versions)}"
        )
    scored = [(profile, compute_index(profile, weights, catalog)) for profile in profiles]
    scored.sort(key=lambda pair: (-pair[1].total, pair[0].library.name, pair[0].library.version))
    return scored


@dataclass(frozen=True)
class CrossoverPoint:
    """Weight value at which the two libraries swap places."""

    weight_value: Fraction
    leader_before: str
    leader_after: str


def weight_sensitivity(
    profile_a: LibraryProfile,
    profile_b: LibraryProfile,
    weights: WeightVector,
    attribute_id: int,
    weight_range: tuple[Fraction | int | float | str, Fraction | int | float | str] = (0, 3),
    catalog: Catalog | None = None,
) -> list[CrossoverPoint]:
    """Sweep one attribute's weight and solve for the ranking crossover.

    The index difference is affine in the varied weight, so there is at most
    one crossover; the weight-sum constraint is deliberately relaxed during
    the sweep (callers should flag that in any rendered output).
    """
    catalog = catalog or builtin_catalog()
    low = to_rational(weight_range[0], context="range low")
    high = to_rational(weight_range[1], context="range high")
    if low > high:
        raise DegenerateRange(f"empty sweep range [{low}, {high}]")
    if low < 0:
        raise DegenerateRange(f"weights cannot be negative, range starts at {low}")
    catalog.attribute(attribute_id)

    def mean_or_zero(profile: LibraryProfile) -> Fraction:
        score = attribute_score(profile, attribute_id, catalog)
        return score if score is not None else Fraction(0)

    base = dict(weights.weights)
    base[attribute_id] = Fraction(0)
    zeroed = WeightVector(base)
    delta_at_zero = (
        compute_index(profile_a, zeroed, catalog, validate=False).total
        - compute_index(profile_b, zeroed, catalog, validate=False).total
    )
    slope = mean_or_zero(profile_a) - mean_or_zero(profile_b)
    if slope == 0:
        return []
    crossing = -delta_at_zero / slope
    if not low <= crossing <= high:
        return []
    name_a = profile_a.library.name
    name_b = profile_b.library.name
    # below the crossing the sign of delta is opposite to the slope
    before, after = (name_b, name_a) if slope > 0 else (name_a, name_b)
    return [
        CrossoverPoint(weight_value=crossing, leader_before=before, leader_after=after)
    ]
