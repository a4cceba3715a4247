"""Shared generators and independent oracles for the test suite.

The oracles deliberately take different routes than the engine: mean ranks
by counting smaller/tied elements instead of sorting position blocks,
totals by a direct float shortcut, crossovers by a grid sweep instead of
solving the affine equation.
"""

from __future__ import annotations

import random
from fractions import Fraction

from libdex.catalog import Catalog, CriterionDef, RubricKind
from libdex.scoring import Assessment, LibraryInfo, LibraryProfile
from libdex.weighting import WeightVector


def brute_force_mean_ranks(counts: dict[int, int]) -> dict[int, Fraction]:
    """rank = (#strictly smaller) + (1 + #tied including self) / 2."""
    ranks = {}
    values = list(counts.values())
    for key, count in counts.items():
        smaller = sum(1 for other in values if other < count)
        tied = sum(1 for other in values if other == count)
        ranks[key] = Fraction(smaller) + Fraction(tied + 1, 2)
    return ranks


def brute_force_ballot_ranks(ballots: list[list[int]]) -> dict[int, Fraction]:
    """Positional averaging: first listed gets rank n, last gets rank 1."""
    n = len(ballots[0])
    totals: dict[int, int] = {}
    for ballot in ballots:
        for position, attribute_id in enumerate(ballot):
            totals[attribute_id] = totals.get(attribute_id, 0) + (n - position)
    return {a: Fraction(total, len(ballots)) for a, total in totals.items()}


def valid_rating_choices(criterion: CriterionDef) -> list[Fraction]:
    """Ratings this criterion's rubric accepts without raising."""
    rubric = criterion.rubric
    if rubric.kind is RubricKind.ENUMERATED_ANCHORS:
        values = sorted(rubric.anchor_values)
        choices = set(values)
        if rubric.interpolation_allowed:
            low, high = values[0], values[-1]
            span = high - low
            for num, den in ((1, 2), (1, 3), (2, 3), (1, 4), (3, 4)):
                choices.add(low + span * Fraction(num, den))
        return sorted(choices)
    return [Fraction(v, 2) for v in range(-4, 5)]


def random_profile(
    rng: random.Random,
    catalog: Catalog,
    *,
    name: str | None = None,
    version: str = "1.0",
    p_assess: float = 0.7,
) -> LibraryProfile:
    while True:
        assessments = []
        for criterion in catalog.criteria():
            if rng.random() < p_assess:
                rating = rng.choice(valid_rating_choices(criterion))
                note = "generated evidence" if abs(rating) == 2 else ""
                assessments.append(
                    Assessment(
                        criterion_id=criterion.id,
                        rating=rating,
                        note=note,
                        assessor="generator",
                        assessed_at="2026-01-01",
                    )
                )
        if assessments:
            break
    return LibraryProfile(
        library=LibraryInfo(
            name=name or f"lib-{rng.randrange(10**9)}", version=version
        ),
        catalog_version=catalog.version,
        assessments=tuple(assessments),
    )


def random_weights(rng: random.Random, catalog: Catalog) -> WeightVector:
    """Positive rational weights scaled to sum exactly n."""
    attribute_ids = catalog.attribute_ids()
    raw = {
        a: Fraction(rng.randint(1, 32), rng.choice((1, 2, 3, 4)))
        for a in attribute_ids
    }
    scale = Fraction(len(attribute_ids)) / sum(raw.values())
    return WeightVector({a: value * scale for a, value in raw.items()})


def brute_force_total(
    profile: LibraryProfile, weights: WeightVector, catalog: Catalog
) -> Fraction:
    ratings = {a.criterion_id: a.rating for a in profile.assessments}
    total = Fraction(0)
    for attribute in catalog.attributes:
        values = [ratings[c.id] for c in attribute.criteria if c.id in ratings]
        if values:
            total += Fraction(sum(values), len(values)) * weights.weights[attribute.id]
    return total


def _attribute_means_float(
    profile: LibraryProfile, catalog: Catalog
) -> dict[int, float | None]:
    ratings = {a.criterion_id: float(a.rating) for a in profile.assessments}
    means: dict[int, float | None] = {}
    for attribute in catalog.attributes:
        values = [ratings[c.id] for c in attribute.criteria if c.id in ratings]
        means[attribute.id] = sum(values) / len(values) if values else None
    return means


def sweep_crossovers(
    profile_a: LibraryProfile,
    profile_b: LibraryProfile,
    weights: WeightVector,
    attribute_id: int,
    catalog: Catalog,
    low: float = 0.0,
    high: float = 3.0,
    step: float = 1e-3,
) -> list[float]:
    """Grid sweep of the index difference; returns crossover estimates."""
    means_a = _attribute_means_float(profile_a, catalog)
    means_b = _attribute_means_float(profile_b, catalog)
    base = {a: float(v) for a, v in weights.weights.items()}

    def delta(g: float) -> float:
        total = 0.0
        for a, weight in base.items():
            actual = g if a == attribute_id else weight
            if means_a[a] is not None:
                total += means_a[a] * actual
            if means_b[a] is not None:
                total -= means_b[a] * actual
        return total

    def sign(x: float) -> int:
        return (x > 0) - (x < 0)

    crossings: list[float] = []
    steps = int(round((high - low) / step))
    prev_g, prev_d = low, delta(low)
    for k in range(1, steps + 1):
        g = low + k * step
        d = delta(g)
        if sign(prev_d) != sign(d) and not (prev_d == 0 and d == 0):
            if prev_d == 0:
                estimate = prev_g
            elif d == 0:
                estimate = g
            else:
                estimate = prev_g + (prev_d / (prev_d - d)) * step
            crossings.append(estimate)
        prev_g, prev_d = g, d
    # the difference is affine, so collapse grid artifacts around one root
    merged: list[float] = []
    for crossing in crossings:
        if not merged or crossing - merged[-1] > 2 * step:
            merged.append(crossing)
    return merged
