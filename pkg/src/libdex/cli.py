"""Command-line interface.

Thin layer over the engine: parse arguments, load documents, call the same
functions the HTTP API uses, print deterministic output. Exit codes: 0 on
success, 1 when the engine rejects an input, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .builtin import builtin_catalog
from .canon import dumps_canonical
from .errors import AttributeSetMismatch, DocumentError, EngineError
from .rational import format_decimal, to_rational
from .reference import reference_weights
from .render import catalog_to_text, report_to_csv, report_to_dict, reports_to_markdown
from .scoring import compute_index, rank_libraries, weight_sensitivity
from .service.app import DEFAULT_ADDR, DEFAULT_STORE
from .store import (
    ProfileStore,
    import_grade_report,
    load_profile,
    merge_assessments,
    profile_to_dict,
)
from .weighting import (
    WeightVector,
    derive_reference_weights,
    evidence_from_dict,
    rebalance_weights,
    validate_weights,
    weights_from_dict,
    weights_to_dict,
)


def _load_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _emit(document: dict, out: str | None) -> None:
    text = dumps_canonical(document)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _weights_arg(path: str | None) -> WeightVector:
    if path is None:
        return reference_weights()[0]
    return weights_from_dict(_load_json(path))


def _store_arg(args: argparse.Namespace) -> ProfileStore:
    root = args.store or os.environ.get("LIBDEX_STORE", DEFAULT_STORE)
    return ProfileStore(root, builtin_catalog())


def _warn(lines: list[str]) -> None:
    for line in lines:
        print(f"warning: {line}", file=sys.stderr)


# --- subcommands -------------------------------------------------------------

def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = builtin_catalog()
    if args.catalog_command == "show":
        sys.stdout.write(catalog_to_text(catalog))
    else:
        _emit(catalog.to_dict(), args.out)
    return 0


def cmd_score(args: argparse.Namespace) -> int:
    catalog = builtin_catalog()
    profile, warnings = load_profile(args.profile, catalog)
    _warn(warnings)
    report = compute_index(profile, _weights_arg(args.weights), catalog)
    if args.format == "json":
        _emit(report_to_dict(report), args.out)
    elif args.format == "csv":
        text = report_to_csv(report)
        Path(args.out).write_text(text, encoding="utf-8") if args.out else sys.stdout.write(text)
    else:
        text = reports_to_markdown([report], catalog)
        Path(args.out).write_text(text, encoding="utf-8") if args.out else sys.stdout.write(text)
    return 0


def cmd_rank(args: argparse.Namespace) -> int:
    catalog = builtin_catalog()
    profiles = []
    for path in args.profiles:
        profile, warnings = load_profile(path, catalog)
        _warn(warnings)
        profiles.append(profile)
    ranked = rank_libraries(profiles, _weights_arg(args.weights), catalog)
    if args.format == "json":
        _emit({"results": [report_to_dict(r) for _, r in ranked]}, None)
    elif args.format == "md":
        sys.stdout.write(reports_to_markdown([r for _, r in ranked], catalog))
    else:
        for position, (profile, report) in enumerate(ranked, start=1):
            label = f"{profile.library.name} {profile.library.version}".strip()
            print(f"{position}. {label}  {format_decimal(report.total)}")
    return 0


def cmd_weights(args: argparse.Namespace) -> int:
    catalog = builtin_catalog()
    if args.weights_command == "derive":
        sources = [evidence_from_dict(_load_json(path)) for path in args.evidence]
        for source in sources:
            _warn(source.rank_discrepancies())
        vectors = [source.to_rank_vector() for source in sources]
        if vectors[0].attribute_ids() != frozenset(catalog.attribute_ids()):
            raise AttributeSetMismatch(
                "evidence does not cover the catalog's attribute set"
            )
        weights, trace = derive_reference_weights(vectors, [s.label for s in sources])
        if not trace.sum_matches_attribute_count:
            _warn(["derived weights do not sum to the attribute count (tie straddles a band boundary)"])
        _emit(weights_to_dict(weights, catalog_version=catalog.version, trace=trace), args.out)
        return 0
    if args.weights_command == "validate":
        weights = weights_from_dict(_load_json(args.file))
        validate_weights(weights, to_rational(args.tolerance, context="tolerance"))
        print(f"ok: {weights.n} weights, sum {format_decimal(weights.total)}")
        return 0
    # rebalance
    weights = _weights_arg(args.weights)
    pinned = []
    adjusted = dict(weights.weights)
    for pin in args.pin:
        if "=" not in pin:
            raise DocumentError(f"--pin expects ATTR=VALUE, got {pin!r}")
        key, _, raw_value = pin.partition("=")
        try:
            attribute_id = int(key)
        except ValueError:
            raise DocumentError(f"--pin attribute id must be an integer, got {key!r}") from None
        adjusted[attribute_id] = to_rational(raw_value, context=f"pin for attribute {key}")
        pinned.append(attribute_id)
    rebalanced = rebalance_weights(WeightVector(adjusted), pinned)
    _emit(weights_to_dict(rebalanced, catalog_version=catalog.version), args.out)
    return 0


def cmd_whatif(args: argparse.Namespace) -> int:
    catalog = builtin_catalog()
    profile_a, _ = load_profile(args.a, catalog)
    profile_b, _ = load_profile(args.b, catalog)
    if ":" not in args.range:
        raise DocumentError(f"--range expects LO:HI, got {args.range!r}")
    low_text, _, high_text = args.range.partition(":")
    low = to_rational(low_text, context="range low")
    high = to_rational(high_text, context="range high")
    crossovers = weight_sensitivity(
        profile_a, profile_b, _weights_arg(args.weights), args.attr, (low, high), catalog
    )
    _emit(
        {
            "attribute": args.attr,
            "range": [str(low), str(high)],
            "constraint_relaxed": True,
            "crossovers": [
                {
                    "weight": format_decimal(point.weight_value, 6),
                    "weight_exact": str(point.weight_value),
                    "leader_before": point.leader_before,
                    "leader_after": point.leader_after,
                }
                for point in crossovers
            ],
        },
        None,
    )
    return 0


def cmd_store(args: argparse.Namespace) -> int:
    store = _store_arg(args)
    if args.store_command == "list":
        for summary in store.list():
            print(
                f"{summary.library_id}  {summary.name} {summary.version}  "
                f"rev {summary.latest_revision}  {summary.assessment_count} assessments"
            )
        return 0
    if args.store_command == "get":
        record = store.get(args.library_id, args.revision)
        _emit(
            {
                "record": {
                    "revision": record.revision,
                    "content_hash": record.content_hash,
                    "previous_hash": record.previous_hash,
                    "saved_at": record.saved_at,
                },
                "profile": profile_to_dict(record.profile),
            },
            None,
        )
        return 0
    if args.store_command == "put":
        profile, warnings = load_profile(args.profile, store.catalog)
        _warn(warnings)
        record = store.save(profile, force=args.force)
        print(
            f"saved {profile.library.library_id} revision {record.revision} "
            f"({record.content_hash})"
        )
        return 0
    # import-grades
    assessments = import_grade_report(_load_json(args.grades))
    if args.library:
        record = store.get(args.library)
        merged = merge_assessments(record.profile, assessments)
        new_record = store.save(merged)
        print(
            f"saved {args.library} revision {new_record.revision} "
            f"({new_record.content_hash})"
        )
    else:
        profile, warnings = load_profile(args.profile, store.catalog)
        _warn(warnings)
        merged = merge_assessments(profile, assessments)
        _emit(profile_to_dict(merged), args.out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    addr = args.addr or os.environ.get("LIBDEX_ADDR", DEFAULT_ADDR)
    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise DocumentError(f"--addr expects HOST:PORT, got {addr!r}")
    app = create_app(
        store_path=args.store, ui_dir=args.ui, seed_examples=not args.no_seed
    )
    uvicorn.run(app, host=host, port=int(port_text))
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="libdex",
        description="Compare libraries with a weighted attribute index.",
    )
    parser.add_argument("--version", action="version", version=f"libdex {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    catalog = commands.add_parser("catalog", help="inspect or export the rubric")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True)
    catalog_sub.add_parser("show", help="human-readable rubric listing")
    catalog_export = catalog_sub.add_parser("export", help="canonical catalog JSON")
    catalog_export.add_argument("--out")
    catalog.set_defaults(handler=cmd_catalog)

    score = commands.add_parser("score", help="score one profile")
    score.add_argument("profile")
    score.add_argument("--weights", help="weights file (default: reference weighting)")
    score.add_argument("--format", choices=("json", "csv", "md"), default="json")
    score.add_argument("--out")
    score.set_defaults(handler=cmd_score)

    rank = commands.add_parser("rank", help="rank two or more profiles")
    rank.add_argument("profiles", nargs="+")
    rank.add_argument("--weights")
    rank.add_argument("--format", choices=("text", "json", "md"), default="text")
    rank.set_defaults(handler=cmd_rank)

    weights = commands.add_parser("weights", help="derive, validate, or rebalance weights")
    weights_sub = weights.add_subparsers(dest="weights_command", required=True)
    derive = weights_sub.add_parser("derive", help="derive weights from evidence files")
    derive.add_argument("--evidence", nargs="+", required=True)
    derive.add_argument("--out")
    validate = weights_sub.add_parser("validate", help="check a weights file")
    validate.add_argument("file")
    validate.add_argument("--tolerance", default="1/1000000000")
    rebalance = weights_sub.add_parser("rebalance", help="pin some weights, rescale the rest")
    rebalance.add_argument("--pin", nargs="+", required=True, metavar="ATTR=VALUE")
    rebalance.add_argument("--weights", help="weights file (default: reference weighting)")
    rebalance.add_argument("--out")
    weights.set_defaults(handler=cmd_weights)

    whatif = commands.add_parser("whatif", help="find the ranking crossover for one attribute")
    whatif.add_argument("--a", required=True, metavar="PROFILE")
    whatif.add_argument("--b", required=True, metavar="PROFILE")
    whatif.add_argument("--attr", required=True, type=int)
    whatif.add_argument("--range", default="0:3", metavar="LO:HI")
    whatif.add_argument("--weights")
    whatif.set_defaults(handler=cmd_whatif)

    store = commands.add_parser("store", help="profile store operations")
    store.add_argument("--store", help=f"store directory (default: $LIBDEX_STORE or {DEFAULT_STORE})")
    store_sub = store.add_subparsers(dest="store_command", required=True)
    store_sub.add_parser("list", help="list stored profiles")
    get = store_sub.add_parser("get", help="fetch a stored profile")
    get.add_argument("library_id")
    get.add_argument("--revision", type=int)
    put = store_sub.add_parser("put", help="save a profile file")
    put.add_argument("profile")
    put.add_argument("--force", action="store_true", help="save a new revision even if unchanged")
    grades = store_sub.add_parser(
        "import-grades", help="turn a static-analysis grade report into code-quality ratings"
    )
    grades.add_argument("--grades", required=True)
    target = grades.add_mutually_exclusive_group(required=True)
    target.add_argument("--library", help="stored library id to update")
    target.add_argument("--profile", help="profile file to merge into")
    grades.add_argument("--out")
    store.set_defaults(handler=cmd_store)

    serve = commands.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--addr", help=f"bind address (default: $LIBDEX_ADDR or {DEFAULT_ADDR})")
    serve.add_argument("--store", help="store directory")
    serve.add_argument("--ui", help="static UI directory to serve at /")
    serve.add_argument("--no-seed", action="store_true", help="do not seed the example profiles")
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EngineError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
