"""libdex: a decision-support engine for comparing libraries.

Houses an attribute/criterion rubric, derives reference weights from ranked
evidence sources, scores assessed library profiles, ranks candidates under
custom weightings, and answers what-if questions about weight changes.
"""

from .builtin import BUILTIN_CATALOG_VERSION, builtin_catalog
from .catalog import (
    AttributeDef,
    Catalog,
    CriterionDef,
    Rating,
    RubricKind,
    RubricSpec,
    rate_default_percentage,
    rate_grade,
    validate_rating,
)
from .scoring import (
    Assessment,
    CrossoverPoint,
    IndexReport,
    LibraryInfo,
    LibraryProfile,
    achievable_bounds,
    attribute_score,
    compute_index,
    rank_libraries,
    weight_sensitivity,
)
from .weighting import (
    DerivationTrace,
    EvidenceSource,
    RankVector,
    WeightVector,
    aggregate_ballots,
    bucket_weight,
    derive_reference_weights,
    mean_ranks,
    rebalance_weights,
    validate_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_CATALOG_VERSION",
    "Assessment",
    "AttributeDef",
    "Catalog",
    "CriterionDef",
    "CrossoverPoint",
    "DerivationTrace",
    "EvidenceSource",
    "IndexReport",
    "LibraryInfo",
    "LibraryProfile",
    "RankVector",
    "Rating",
    "RubricKind",
    "RubricSpec",
    "WeightVector",
    "achievable_bounds",
    "aggregate_ballots",
    "attribute_score",
    "builtin_catalog",
    "bucket_weight",
    "compute_index",
    "derive_reference_weights",
    "mean_ranks",
    "rank_libraries",
    "rate_default_percentage",
    "rate_grade",
    "rebalance_weights",
    "validate_rating",
    "validate_weights",
    "weight_sensitivity",
]
