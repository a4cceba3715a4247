"""The built-in evaluation catalog: 15 attributes, 30 criteria.

Criterion ids follow the attribute number plus a letter ("1a", "1b", ...)
in rubric order. Attribute 13 (Performance Impact) ships without criteria:
no workable assessment criterion is known for it yet, so it only
participates in scoring once a custom catalog adds one.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .catalog import (
    AttributeDef,
    Catalog,
    CriterionDef,
    RubricKind,
    RubricSpec,
    grade_scale_anchors,
)

BUILTIN_CATALOG_VERSION = "builtin-1"


def _anchors(*pairs: tuple[str, int]) -> RubricSpec:
    return RubricSpec(
        kind=RubricKind.ENUMERATED_ANCHORS,
        anchors=tuple((label, Fraction(value)) for label, value in pairs),
        interpolation_allowed=True,
    )


_DEFAULT = RubricSpec(kind=RubricKind.DEFAULT_PERCENTAGE)
_GRADE = RubricSpec(kind=RubricKind.GRADE_SCALE, anchors=grade_scale_anchors())


def _criterion(cid: str, name: str, attribute_id: int, rubric: RubricSpec, guidance: str) -> CriterionDef:
    return CriterionDef(id=cid, name=name, attribute_id=attribute_id, rubric=rubric, guidance=guidance)


@lru_cache(maxsize=1)
def builtin_catalog() -> Catalog:
    """Return the built-in catalog (cached; deterministic across calls)."""
    attributes = (
        AttributeDef(
            id=1,
            name="Ease of Use",
            description="How much can be understood intuitively while using the library?",
            criteria=(
                _criterion(
                    "1a",
                    "Readability",
                    1,
                    _DEFAULT,
                    "Short call signatures read best. Rate the share of functions "
                    "taking at most two parameters; calls with more than three "
                    "parameters need strong justification.",
                ),
                _criterion(
                    "1b",
                    "Default Settings",
                    1,
                    _anchors(("secure defaults", 2), ("missing or weak defaults", -1)),
                    "Do cryptographic operations ship with defaults, and do those "
                    "defaults satisfy the current recommendations of the relevant "
                    "security authority (e.g. the BSI TR-02102 guideline)?",
                ),
                _criterion(
                    "1c",
                    "Naming Conventions",
                    1,
                    _DEFAULT,
                    "An established naming style (e.g. Google Java Style, Oracle "
                    "code conventions) is applied consistently. Rate the share of "
                    "the API that follows it.",
                ),
                _criterion(
                    "1d",
                    "Regularity",
                    1,
                    _anchors(
                        ("symmetric wherever possible", 2),
                        ("symmetric for central functions", 0),
                        ("no recognizable system", -2),
                    ),
                    "Names for paired functionality mirror each other, such as "
                    "connect()/disconnect().",
                ),
                _criterion(
                    "1e",
                    "Self-describing Function Names",
                    1,
                    _DEFAULT,
                    "Function names are understandable and intuitive and reflect "
                    "what the function does. Rate the share that do.",
                ),
            ),
        ),
        AttributeDef(
            id=2,
            name="Scalability",
            description="Can work run synchronously and in parallel, and which data sizes are handleable?",
            criteria=(
                _criterion(
                    "2a",
                    "Concurrency",
                    2,
                    _anchors(
                        ("supported", 2),
                        ("possible via workarounds", 0),
                        ("not possible", -2),
                    ),
                    "Library functions can execute in parallel (threads, clusters, "
                    "load balancers). Inherently sequential steps, e.g. encrypting "
                    "after signing, are excluded. A workaround example: splitting "
                    "data into parts and processing them in a distributed manner.",
                ),
            ),
        ),
        AttributeDef(
            id=3,
            name="Testability",
            description="Is the API easy to test and debug; are errors caught, shown, and logged?",
            criteria=(
                _criterion(
                    "3a",
                    "Testability",
                    3,
                    _anchors(("test support supplied", 2), ("no test support", -2)),
                    "Ready-made test classes, default tests, or test examples in "
                    "the documentation earn the top rating; none of these earns "
                    "the bottom one.",
                ),
                _criterion(
                    "3b",
                    "Exceptions",
                    3,
                    _anchors(
                        ("custom error handling with descriptions", 2),
                        ("standard error handling", 0),
                        ("no error handling", -2),
                    ),
                    "Error handling is performed actively by the library itself.",
                ),
            ),
        ),
        AttributeDef(
            id=4,
            name="Extendability",
            description="Can the functionality be extended, and how much effort do such changes take?",
            criteria=(
                _criterion(
                    "4a",
                    "Public",
                    4,
                    _anchors(
                        ("extension points public", 2),
                        ("partially public", 0),
                        ("little or nothing public", -2),
                    ),
                    "Classes and functions relevant for extended functionality are "
                    "declared public and can be inherited from.",
                ),
                _criterion(
                    "4b",
                    "Interfaces",
                    4,
                    _anchors(
                        ("interfaces on all user-facing classes", 2),
                        ("isolated interfaces", 0),
                        ("no interfaces", -2),
                    ),
                    "The library exposes its user-facing classes through interfaces.",
                ),
            ),
        ),
        AttributeDef(
            id=5,
            name="Functional Completeness",
            description="Does the API pack all needed features, and does it stay purposeful?",
            criteria=(
                _criterion(
                    "5a",
                    "Purposefulness",
                    5,
                    _anchors(
                        ("core mission only", 2),
                        ("useful extras", 0),
                        ("purpose obscured by extras", -2),
                    ),
                    "The library concentrates on its core mission. Additional "
                    "features that are unnecessary but useful rate neutral; "
                    "features that obscure the actual purpose rate negative.",
                ),
            ),
        ),
        AttributeDef(
            id=6,
            name="Data Types",
            description="Are data types intuitive, do parameters and return values fit, and is their order consistent?",
            criteria=(
                _criterion(
                    "6a",
                    "Return Values",
                    6,
                    _DEFAULT,
                    "Functions expose return values that confirm successful "
                    "execution. Rate the share of functions that do.",
                ),
                _criterion(
                    "6b",
                    "Ordering",
                    6,
                    _DEFAULT,
                    "Parameter order stays consistent across the API. Rate the "
                    "share of functions that follow the common order.",
                ),
            ),
        ),
        AttributeDef(
            id=7,
            name="Code Quality",
            description="Does the code stick to standards and conventions?",
            criteria=(
                _criterion(
                    "7a",
                    "Bugs",
                    7,
                    _GRADE,
                    "Automated static-analysis grade (e.g. a SonarQube instance) "
                    "for bugs; US school grades A through E map to +2 through -2.",
                ),
                _criterion(
                    "7b",
                    "Vulnerability",
                    7,
                    _GRADE,
                    "Automated static-analysis grade for vulnerabilities; "
                    "A through E map to +2 through -2.",
                ),
                _criterion(
                    "7c",
                    "Code Smell",
                    7,
                    _GRADE,
                    "Automated static-analysis grade for code smells; "
                    "A through E map to +2 through -2.",
                ),
            ),
        ),
        AttributeDef(
            id=8,
            name="Cost",
            description="What costs does the API cause, and which licenses are available?",
            criteria=(
                _criterion(
                    "8a",
                    "Cost",
                    8,
                    _anchors(("free of charge", 2), ("usage fees", -2)),
                    "The library is usable without fees.",
                ),
                _criterion(
                    "8b",
                    "Licence",
                    8,
                    _anchors(
                        ("unrestricted commercial use", 2),
                        ("non-commercial free or paid commercial", 0),
                        ("no commercial use and payment required", -2),
                    ),
                    "Under which license is the library offered?",
                ),
            ),
        ),
        AttributeDef(
            id=9,
            name="Requirements",
            description="What does the API require, and which dependencies must be resolved?",
            criteria=(
                _criterion(
                    "9a",
                    "Dependencies",
                    9,
                    _anchors(
                        ("dependencies install automatically", 2),
                        ("manual installation required", -2),
                    ),
                    "Dependencies, if any, are installed automatically (for "
                    "example via a package manager) rather than by hand.",
                ),
            ),
        ),
        AttributeDef(
            id=10,
            name="Complexity",
            description="How complex is the API, how flexibly can it be configured, and how much boilerplate does it demand?",
            criteria=(
                _criterion(
                    "10a",
                    "Atomic Setting",
                    10,
                    _anchors(
                        ("predefined and adjustable", 2),
                        ("predefined but fixed", 0),
                        ("everything manual", -2),
                    ),
                    "Precise or fine adjustments are possible: the API predefines "
                    "settings and lets users change them.",
                ),
                _criterion(
                    "10b",
                    "Boilerplatecode",
                    10,
                    _anchors(
                        ("dedicated methods replace recurring code", 2),
                        ("largest blocks simplified", 0),
                        ("same code again and again", -2),
                    ),
                    "How much recurring code overhead must developers write to "
                    "use the API's functionality?",
                ),
            ),
        ),
        AttributeDef(
            id=11,
            name="Maintained",
            description="Is the API developed further, and is support being provided?",
            criteria=(
                _criterion(
                    "11a",
                    "Release-frequency",
                    11,
                    _anchors(
                        ("fixed release schedule", 2),
                        ("releases keep coming", 0),
                        ("next release unclear", -2),
                    ),
                    "How often is a new version released? Judge over the last "
                    "three major versions.",
                ),
                _criterion(
                    "11b",
                    "Patch frequency",
                    11,
                    _anchors(
                        ("patches within 90 days", 2),
                        ("patches later than 90 days", 1),
                        ("patch delivery unclear", 0),
                        ("no patches", -2),
                    ),
                    "Security gaps are fixed quickly. The 90-day window follows "
                    "the widely used responsible-disclosure deadline.",
                ),
                _criterion(
                    "11c",
                    "Support",
                    11,
                    _anchors(
                        ("free official support", 2),
                        ("paid official support", 0),
                        ("no official channels", -2),
                    ),
                    "The project has an official support channel such as a forum, "
                    "wiki, or mailing list.",
                ),
            ),
        ),
        AttributeDef(
            id=12,
            name="Spread",
            description="How widespread is the API, how big is the community, and what is its reputation?",
            criteria=(
                _criterion(
                    "12a",
                    "Successful Stories",
                    12,
                    _anchors(
                        ("several reputable field reports", 2),
                        ("no significant mentions", 0),
                        ("paid placements only", -2),
                    ),
                    "Articles, contributions, or papers reporting successful use "
                    "in other projects. Reputable trade journals count; purchased "
                    "blog posts count against.",
                ),
                _criterion(
                    "12b",
                    "Repositories",
                    12,
                    _DEFAULT,
                    "Popularity on code-hosting platforms, read off stars/likes. "
                    "Rate relative to the reference repository: the most popular "
                    "English-language Java project on GitHub as of December 2020 "
                    "(Mindustry, 7557 stars).",
                ),
            ),
        ),
        AttributeDef(
            id=13,
            name="Performance Impact",
            description="How does the API impact performance and latency?",
            criteria=(),
        ),
        AttributeDef(
            id=14,
            name="Security",
            description="Are the API and the procedures it uses secure?",
            criteria=(
                _criterion(
                    "14a",
                    "Standards",
                    14,
                    _anchors(
                        ("exceeds state of the art", 2),
                        ("meets the whitelist exactly", 0),
                        ("sub-aspect obsolete or weak", -2),
                    ),
                    "Only algorithms on the applicable whitelist (e.g. the BSI "
                    "TR-02102 guideline) are used. The whitelist itself is "
                    "supplied externally by the assessor.",
                ),
                _criterion(
                    "14b",
                    "Certificated",
                    14,
                    _anchors(
                        ("multiple certifications", 2),
                        ("certified", 0),
                        ("not certified", -2),
                    ),
                    "Has the library been certified?",
                ),
            ),
        ),
        AttributeDef(
            id=15,
            name="Documentation",
            description="Is the API documented thoroughly, with best practices and examples?",
            criteria=(
                _criterion(
                    "15a",
                    "Function documentation",
                    15,
                    _DEFAULT,
                    "Every method or function is documented. Rate the documented "
                    "share.",
                ),
                _criterion(
                    "15b",
                    "Examples",
                    15,
                    _DEFAULT,
                    "A usage example exists for each method or function. Rate the "
                    "covered share.",
                ),
            ),
        ),
    )
    return Catalog(version=BUILTIN_CATALOG_VERSION, attributes=attributes)
