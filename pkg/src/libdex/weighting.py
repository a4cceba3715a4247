"""Attribute weights from ranked evidence.

The pipeline: each evidence source (mention counts, ballots, or verbatim
ranks) becomes a rank vector over the attribute set via the tied mean-rank
method; the per-attribute averages of all sources are ranked again; the
final rank picks one of five weight bands (1.5, 1.25, 1.0, 0.75, 0.5 from
the top). With n attributes the bands are n/5 wide, so for band-balanced
outcomes the weights sum to n, the cap that keeps custom weightings from
drifting into excessive emphasis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Mapping, Sequence

from .errors import (
    AttributeSetMismatch,
    DocumentError,
    InfeasiblePins,
    MalformedBallot,
    NegativeWeight,
    RangeViolation,
    WeightSumViolation,
)
from .rational import encode_rational, to_rational

DEFAULT_TOLERANCE = Fraction(1, 10**9)

WEIGHT_BANDS = (Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(5, 4), Fraction(3, 2))


@dataclass(frozen=True)
class RankVector:
    """Per-attribute ranks; rank n marks the most relevant attribute.

    Tied attributes share the arithmetic mean of the positions they span,
    which is why half-integer ranks appear. Computed vectors always satisfy
    rank_sum == n(n+1)/2; verbatim vectors from external sources may not,
    so the identity is checked where vectors are produced, not stored.
    """

    entries: dict[int, Fraction]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise DocumentError("rank vector must not be empty")
        for attribute_id, rank in self.entries.items():
            if not 1 <= rank <= n:
                raise RangeViolation(
                    f"rank {rank} for attribute {attribute_id} outside [1, {n}]"
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def rank_sum(self) -> Fraction:
        return Fraction(sum(self.entries.values()))

    def sum_is_consistent(self) -> bool:
        n = self.n
        return self.rank_sum == Fraction(n * (n + 1), 2)

    def attribute_ids(self) -> frozenset[int]:
        return frozenset(self.entries)


@dataclass(frozen=True)
class WeightVector:
    """Per-attribute weights g_i. Validation is separate (validate_weights)
    because derivation can legitimately produce off-sum vectors when ties
    straddle a band boundary."""

    weights: dict[int, Fraction]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return Fraction(sum(self.weights.values()))

    def attribute_ids(self) -> frozenset[int]:
        return frozenset(self.weights)


@dataclass(frozen=True)
class DerivationTrace:
    """Every intermediate value of a weight derivation, for audit and display."""

    source_labels: tuple[str, ...]
    per_source_ranks: tuple[tuple[str, RankVector], ...]
    averages: dict[int, Fraction]
    total_ranks: dict[int, Fraction]
    buckets: dict[int, Fraction]
    sum_matches_attribute_count: bool

    def to_dict(self) -> dict:
        return {
            "sources": list(self.source_labels),
            "per_source_ranks": {
                label: {str(a): encode_rational(r) for a, r in vector.entries.items()}
                for label, vector in self.per_source_ranks
            },
            "averages": {str(a): encode_rational(v) for a, v in self.averages.items()},
            "total_ranks": {str(a): encode_rational(v) for a, v in self.total_ranks.items()},
            "buckets": {str(a): encode_rational(v) for a, v in self.buckets.items()},
            "sum_matches_attribute_count": self.sum_matches_attribute_count,
        }


EvidenceKind = Literal["counts", "ballots", "ranks"]


@dataclass(frozen=True)
class EvidenceSource:
    """One ranked evidence source for weight derivation."""

    label: str
    kind: EvidenceKind
    counts: dict[int, int] | None = None
    ballots: tuple[tuple[int, ...], ...] | None = None
    ranks: RankVector | None = None
    notes: str = ""
    # optional cross-check: the ranks this source is expected to produce
    expected_ranks: dict[int, Fraction] | None = None

    @classmethod
    def from_counts(
        cls,
        label: str,
        counts: Mapping[int, int],
        *,
        notes: str = "",
        expected_ranks: Mapping[int, Fraction] | None = None,
    ) -> "EvidenceSource":
        return cls(
            label=label,
            kind="counts",
            counts=dict(counts),
            notes=notes,
            expected_ranks=dict(expected_ranks) if expected_ranks else None,
        )

    @classmethod
    def from_ballots(cls, label: str, ballots: Iterable[Sequence[int]], *, notes: str = "") -> "EvidenceSource":
        return cls(label=label, kind="ballots", ballots=tuple(tuple(b) for b in ballots), notes=notes)

    @classmethod
    def from_ranks(cls, label: str, ranks: Mapping[int, Fraction], *, notes: str = "") -> "EvidenceSource":
        return cls(label=label, kind="ranks", ranks=RankVector(dict(ranks)), notes=notes)

    def to_rank_vector(self) -> RankVector:
        if self.kind == "counts":
            assert self.counts is not None
            return mean_ranks(self.counts)
        if self.kind == "ballots":
            assert self.ballots is not None
            return aggregate_ballots(self.ballots)
        assert self.ranks is not None
        return self.ranks

    def rank_discrepancies(self) -> list[str]:
        """Flag contradictions between given counts and expected ranks."""
        if self.kind != "counts" or not self.expected_ranks:
            return []
        computed = self.to_rank_vector()
        issues = []
        for attribute_id, expected in sorted(self.expected_ranks.items()):
            actual = computed.entries.get(attribute_id)
            if actual != expected:
                issues.append(
                    f"source {self.label!r}: counts give attribute {attribute_id} "
                    f"rank {encode_rational(actual)} but {encode_rational(expected)} "
                    f"was expected"
                )
        return issues


def _mean_rank_positions(values: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Rank values ascending (higher value, higher rank); tied groups share
    the mean of the positions they occupy."""
    ordered = sorted(values.items(), key=lambda item: item[1])
    ranks: dict[int, Fraction] = {}
    position = 1
    index = 0
    while index < len(ordered):
        block_end = index
        while block_end < len(ordered) and ordered[block_end][1] == ordered[index][1]:
            block_end += 1
        size = block_end - index
        shared = Fraction(sum(range(position, position + size)), size)
        for key, _ in ordered[index:block_end]:
            ranks[key] = shared
        position += size
        index = block_end
    return ranks


def mean_ranks(counts: Mapping[int, int]) -> RankVector:
    """Normalize mention counts into ranks 1..n, ties sharing mean positions."""
    if not counts:
        raise DocumentError("counts must not be empty")
    values: dict[int, Fraction] = {}
    for attribute_id, count in counts.items():
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise DocumentError(
                f"attribute {attribute_id}: count must be a nonnegative integer, got {count!r}"
            )
        values[attribute_id] = Fraction(count)
    vector = RankVector(_mean_rank_positions(values))
    assert vector.sum_is_consistent()
    return vector


def aggregate_ballots(ballots: Sequence[Sequence[int]]) -> RankVector:
    """Average positional ranks over full orderings.

    Ballots list attributes from most to least relevant: the first entry
    receives rank n, the last rank 1. Every ballot must be a permutation of
    the same attribute set.
    """
    if not ballots:
        raise DocumentError("at least one ballot is required")
    universe = frozenset(ballots[0])
    n = len(ballots[0])
    if len(universe) != n:
        raise MalformedBallot("ballot 0 contains duplicates", detail={"ballot": 0})
    totals: dict[int, Fraction] = {attribute_id: Fraction(0) for attribute_id in universe}
    for index, ballot in enumerate(ballots):
        if len(ballot) != n or frozenset(ballot) != universe:
            raise MalformedBallot(
                f"ballot {index} is not a permutation of the attribute set",
                detail={"ballot": index},
            )
        for position, attribute_id in enumerate(ballot):
            totals[attribute_id] += Fraction(n - position)
    count = len(ballots)
    vector = RankVector({a: total / count for a, total in totals.items()})
    assert vector.sum_is_consistent()
    return vector


def bucket_weight(total_rank: Fraction | int | float | str, n: int) -> Fraction:
    """Map a final rank onto one of five weight bands.

    Bands are n/5 wide counted from the top: for n=15 the ranks above 12 up
    to 15 give 1.5, above 9 up to 12 give 1.25, and so on down to 0.5.
    A rank exactly on a boundary belongs to the band it closes from above.
    """
    if n < 5:
        raise RangeViolation(f"band mapping needs at least 5 attributes, got {n}")
    rank = to_rational(total_rank, context="total_rank")
    if not 1 <= rank <= n:
        raise RangeViolation(f"total rank {rank} outside [1, {n}]")
    band = math.ceil(rank * 5 / n)
    band = min(max(band, 1), 5)
    return WEIGHT_BANDS[band - 1]


def derive_reference_weights(
    sources: Sequence[RankVector],
    labels: Sequence[str] | None = None,
) -> tuple[WeightVector, DerivationTrace]:
    """Average rank vectors, rank the averages, and bucket into weights."""
    if not sources:
        raise DocumentError("at least one rank source is required")
    if labels is None:
        labels = tuple(f"source-{i + 1}" for i in range(len(sources)))
    if len(labels) != len(sources):
        raise DocumentError("one label per source is required")
    universe = sources[0].attribute_ids()
    for label, source in zip(labels, sources):
        if source.attribute_ids() != universe:
            raise AttributeSetMismatch(
                f"source {label!r} covers a different attribute set"
            )
    count = len(sources)
    averages = {
        attribute_id: Fraction(sum(s.entries[attribute_id] for s in sources), count)
        for attribute_id in universe
    }
    total_ranks = _mean_rank_positions(averages)
    n = len(universe)
    buckets = {a: bucket_weight(rank, n) for a, rank in total_ranks.items()}
    weights = WeightVector(dict(buckets))
    trace = DerivationTrace(
        source_labels=tuple(labels),
        per_source_ranks=tuple(zip(labels, sources)),
        averages=averages,
        total_ranks=total_ranks,
        buckets=buckets,
        sum_matches_attribute_count=weights.total == n,
    )
    return weights, trace


def validate_weights(weights: WeightVector, tolerance: Fraction = DEFAULT_TOLERANCE) -> None:
    """Require nonnegative entries and a total within tolerance of n."""
    negatives = {a: w for a, w in weights.weights.items() if w < 0}
    if negatives:
        raise NegativeWeight(
            "weights must be nonnegative",
            detail={"attributes": sorted(negatives)},
        )
    n = weights.n
    drift = weights.total - n
    if abs(drift) > tolerance:
        direction = "excess" if drift > 0 else "deficit"
        raise WeightSumViolation(
            f"weight sum {encode_rational(weights.total)} differs from the "
            f"attribute count {n} ({direction} of {encode_rational(abs(drift))})",
            detail={
                "sum": encode_rational(weights.total),
                "expected": n,
                "drift": encode_rational(drift),
            },
        )


def rebalance_weights(weights: WeightVector, pinned: Iterable[int] = ()) -> WeightVector:
    """Scale unpinned weights by a common factor so the total equals n.

    Pinned entries stay untouched. If all unpinned weights are zero they are
    set equally instead (scaling cannot lift an all-zero block).
    """
    pinned_set = frozenset(pinned)
    unknown = pinned_set - weights.attribute_ids()
    if unknown:
        raise InfeasiblePins(f"pinned attributes not in the vector: {sorted(unknown)}")
    n = weights.n
    pinned_sum = Fraction(sum(weights.weights[a] for a in pinned_set))
    free = [a for a in weights.weights if a not in pinned_set]
    if not free:
        if weights.total != n:
            raise InfeasiblePins(
                f"all attributes pinned but the sum is "
                f"{encode_rational(weights.total)}, not {n}"
            )
        return WeightVector(dict(weights.weights))
    if pinned_sum >= n:
        raise InfeasiblePins(
            f"pinned weights already sum to {encode_rational(pinned_sum)}; "
            f"nothing is left for {len(free)} unpinned attributes"
        )
    remainder = n - pinned_sum
    free_sum = Fraction(sum(weights.weights[a] for a in free))
    rebalanced = dict(weights.weights)
    if free_sum == 0:
        share = remainder / len(free)
        for a in free:
            rebalanced[a] = share
    else:
        factor = remainder / free_sum
        for a in free:
            rebalanced[a] = weights.weights[a] * factor
    result = WeightVector(rebalanced)
    validate_weights(result)
    return result


# --- document formats -------------------------------------------------------

EVIDENCE_FORMAT_VERSION = 1
WEIGHTS_FORMAT_VERSION = 1


def _parse_attribute_key(key: str | int, *, context: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise DocumentError(f"{context}: attribute ids are integers, got {key!r}") from None


def evidence_from_dict(document: Mapping) -> EvidenceSource:
    try:
        label = document["label"]
        kind = document["kind"]
        data = document["data"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"evidence document missing field: {exc}") from exc
    notes = document.get("notes", "")
    if kind == "counts":
        counts = {
            _parse_attribute_key(k, context="counts"): v for k, v in data.items()
        }
        expected = document.get("expected_ranks")
        expected_ranks = (
            {
                _parse_attribute_key(k, context="expected_ranks"): to_rational(
                    v, context=f"expected rank for attribute {k}"
                )
                for k, v in expected.items()
            }
            if expected
            else None
        )
        return EvidenceSource.from_counts(
            label, counts, notes=notes, expected_ranks=expected_ranks
        )
    if kind == "ballots":
        return EvidenceSource.from_ballots(label, data, notes=notes)
    if kind == "ranks":
        ranks = {
            _parse_attribute_key(k, context="ranks"): to_rational(
                v, context=f"rank for attribute {k}"
            )
            for k, v in data.items()
        }
        return EvidenceSource.from_ranks(label, ranks, notes=notes)
    raise DocumentError(f"unknown evidence kind {kind!r}")


def evidence_to_dict(source: EvidenceSource) -> dict:
    document: dict = {
        "format_version": EVIDENCE_FORMAT_VERSION,
        "label": source.label,
        "kind": source.kind,
    }
    if source.kind == "counts":
        assert source.counts is not None
        document["data"] = {str(a): c for a, c in source.counts.items()}
        if source.expected_ranks:
            document["expected_ranks"] = {
                str(a): encode_rational(r) for a, r in source.expected_ranks.items()
            }
    elif source.kind == "ballots":
        assert source.ballots is not None
        document["data"] = [list(ballot) for ballot in source.ballots]
    else:
        assert source.ranks is not None
        document["data"] = {
            str(a): encode_rational(r) for a, r in source.ranks.entries.items()
        }
    if source.notes:
        document["notes"] = source.notes
    return document


def weights_from_dict(document: Mapping) -> WeightVector:
    if "weights" not in document:
        raise DocumentError("weights document missing 'weights' field")
    raw = document["weights"]
    if not isinstance(raw, Mapping) or not raw:
        raise DocumentError("'weights' must be a non-empty mapping")
    return WeightVector(
        {
            _parse_attribute_key(k, context="weights"): to_rational(
                v, context=f"weight for attribute {k}"
            )
            for k, v in raw.items()
        }
    )


def weights_to_dict(
    weights: WeightVector,
    *,
    catalog_version: str,
    trace: DerivationTrace | None = None,
) -> dict:
    document = {
        "format_version": WEIGHTS_FORMAT_VERSION,
        "catalog_version": catalog_version,
        "weights": {str(a): encode_rational(w) for a, w in weights.weights.items()},
    }
    if trace is not None:
        document["trace"] = trace.to_dict()
    return document
