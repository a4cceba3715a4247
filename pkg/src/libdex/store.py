"""Profile persistence: documents, content hashing, append-only revisions.

The store is a directory of JSON documents plus an index file; no external
database. Revisions per library only grow, each new one chaining to the
previous content hash, so the history of an assessment stays auditable.
Writes are single-writer (serialized by a lock in-process, atomic renames
on disk); readers always see complete documents.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Mapping

from .builtin import builtin_catalog
from .canon import canonical_bytes, content_digest
from .catalog import Catalog, rate_grade
from .errors import (
    DocumentError,
    MissingEvidenceNote,
    NotFoundError,
    WriteConflict,
)
from .rational import encode_rational, to_rational
from .scoring import Assessment, LibraryInfo, LibraryProfile

PROFILE_FORMAT_VERSION = 1

_CRITERION_ID = re.compile(r"^(\d+)([a-z])$")

GRADE_REPORT_CRITERIA = {"bugs": "7a", "vulnerability": "7b", "code_smell": "7c"}


def criterion_sort_key(criterion_id: str) -> tuple[int, str]:
    match = _CRITERION_ID.match(criterion_id)
    if match:
        return int(match.group(1)), match.group(2)
    return (10**9, criterion_id)


def profile_to_dict(profile: LibraryProfile) -> dict:
    """Canonical profile document; assessments ordered by criterion id."""
    ordered = sorted(profile.assessments, key=lambda a: criterion_sort_key(a.criterion_id))
    return {
        "format_version": PROFILE_FORMAT_VERSION,
        "catalog_version": profile.catalog_version,
        "library": {
            "name": profile.library.name,
            "version": profile.library.version,
            "language": profile.library.language,
            "source_url": profile.library.source_url,
        },
        "assessments": [
            {
                "criterion": a.criterion_id,
                "rating": encode_rational(a.rating),
                "note": a.note,
                "assessor": a.assessor,
                "assessed_at": a.assessed_at,
            }
            for a in ordered
        ],
    }


def profile_from_dict(
    document: Mapping,
    catalog: Catalog | None = None,
    *,
    source: str = "<document>",
) -> tuple[LibraryProfile, list[str]]:
    """Validate and build a profile; returns (profile, warnings).

    Hard failures: unresolvable criteria, out-of-range or off-anchor
    ratings, duplicate criteria, catalog version mismatch, and extreme
    ratings (+2/-2) without an evidence note.
    """
    catalog = catalog or builtin_catalog()
    if not isinstance(document, Mapping):
        raise DocumentError(f"{source}: profile document must be an object")
    try:
        raw_library = document["library"]
        catalog_version = document["catalog_version"]
        raw_assessments = document["assessments"]
    except KeyError as exc:
        raise DocumentError(f"{source}: missing field {exc}") from exc
    if not isinstance(raw_library, Mapping) or "name" not in raw_library:
        raise DocumentError(f"{source}: 'library' needs at least a name")
    library = LibraryInfo(
        name=raw_library["name"],
        version=raw_library.get("version", ""),
        language=raw_library.get("language", ""),
        source_url=raw_library.get("source_url", ""),
    )
    warnings: list[str] = []
    assessments = []
    for position, raw in enumerate(raw_assessments):
        where = f"{source}: assessments[{position}]"
        try:
            criterion_id = raw["criterion"]
            raw_rating = raw["rating"]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"{where}: missing field {exc}") from exc
        rating = to_rational(raw_rating, context=f"{where} rating")
        note = raw.get("note", "")
        if abs(rating) == 2 and not note:
            raise MissingEvidenceNote(
                f"{where}: rating {encode_rational(rating)} for "
                f"{criterion_id} requires an evidence note",
                detail={"criterion": criterion_id},
            )
        if not note:
            warnings.append(f"{where}: no evidence note for {criterion_id}")
        assessments.append(
            Assessment(
                criterion_id=criterion_id,
                rating=rating,
                note=note,
                assessor=raw.get("assessor", ""),
                assessed_at=raw.get("assessed_at", ""),
            )
        )
    profile = LibraryProfile(
        library=library,
        catalog_version=catalog_version,
        assessments=tuple(assessments),
    )
    warnings.extend(profile.validate_against(catalog))
    return profile, warnings


def load_profile(path: str | Path, catalog: Catalog | None = None) -> tuple[LibraryProfile, list[str]]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return profile_from_dict(document, catalog, source=str(path))


def profile_digest(profile: LibraryProfile) -> str:
    return content_digest(profile_to_dict(profile))


def import_grade_report(document: Mapping) -> list[Assessment]:
    """Turn a static-analysis grade report into code-quality assessments."""
    assessments = []
    for key, criterion_id in GRADE_REPORT_CRITERIA.items():
        if key not in document:
            raise DocumentError(f"grade report missing key {key!r}")
        grade = document[key]
        assessments.append(
            Assessment(
                criterion_id=criterion_id,
                rating=rate_grade(grade),
                note=f"static analysis grade {str(grade).strip().upper()}",
                assessor=document.get("assessor", "grade-report"),
                assessed_at=document.get("assessed_at", ""),
            )
        )
    return assessments


def merge_assessments(
    profile: LibraryProfile, new_assessments: list[Assessment]
) -> LibraryProfile:
    """Replace or add assessments per criterion (last write wins)."""
    merged = {a.criterion_id: a for a in profile.assessments}
    for assessment in new_assessments:
        merged[assessment.criterion_id] = assessment
    ordered = sorted(merged.values(), key=lambda a: criterion_sort_key(a.criterion_id))
    return LibraryProfile(
        library=profile.library,
        catalog_version=profile.catalog_version,
        assessments=tuple(ordered),
    )


@dataclass(frozen=True)
class ProfileRecord:
    profile: LibraryProfile
    content_hash: str
    revision: int
    previous_hash: str | None
    saved_at: str


@dataclass(frozen=True)
class ProfileSummary:
    library_id: str
    name: str
    version: str
    language: str
    latest_revision: int
    content_hash: str
    assessment_count: int


def _atomic_write(path: Path, data: bytes) -> None:
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(temp_name, path)
    except BaseException:
        try:
            os.unlink(temp_name)
        except OSError:
            pass
        raise


class ProfileStore:
    """Directory-backed profile store with append-only revisions."""

    def __init__(self, root: str | Path, catalog: Catalog | None = None):
        self.root = Path(root)
        self.catalog = catalog or builtin_catalog()
        self._lock = threading.Lock()
        (self.root / "profiles").mkdir(parents=True, exist_ok=True)

    # -- paths ---------------------------------------------------------

    def _library_dir(self, library_id: str) -> Path:
        return self.root / "profiles" / library_id

    def _revision_path(self, library_id: str, revision: int) -> Path:
        return self._library_dir(library_id) / f"r{revision:06d}.json"

    def _index_path(self) -> Path:
        return self.root / "index.json"

    # -- reading ---------------------------------------------------------

    def _revisions(self, library_id: str) -> list[int]:
        directory = self._library_dir(library_id)
        if not directory.is_dir():
            return []
        revisions = []
        for entry in directory.iterdir():
            match = re.fullmatch(r"r(\d{6})\.json", entry.name)
            if match:
                revisions.append(int(match.group(1)))
        return sorted(revisions)

    def get(self, library_id: str, revision: int | None = None) -> ProfileRecord:
        revisions = self._revisions(library_id)
        if not revisions:
            raise NotFoundError(f"no profile stored under id {library_id!r}")
        if revision is None:
            revision = revisions[-1]
        elif revision not in revisions:
            raise NotFoundError(
                f"profile {library_id!r} has no revision {revision}",
                detail={"known_revisions": revisions},
            )
        path = self._revision_path(library_id, revision)
        document = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(document, dict) or "record" not in document or "profile" not in document:
            raise DocumentError(f"{path}: not a profile record document")
        profile, _ = profile_from_dict(document["profile"], self.catalog, source=str(path))
        record = document["record"]
        return ProfileRecord(
            profile=profile,
            content_hash=record["content_hash"],
            revision=record["revision"],
            previous_hash=record.get("previous_hash"),
            saved_at=record.get("saved_at", ""),
        )

    def list(self) -> list[ProfileSummary]:
        """Summaries of the latest revision per library, sorted by name."""
        summaries = []
        profiles_dir = self.root / "profiles"
        for entry in sorted(profiles_dir.iterdir()) if profiles_dir.is_dir() else []:
            if not entry.is_dir():
                continue
            record = self.get(entry.name)
            summaries.append(
                ProfileSummary(
                    library_id=entry.name,
                    name=record.profile.library.name,
                    version=record.profile.library.version,
                    language=record.profile.library.language,
                    latest_revision=record.revision,
                    content_hash=record.content_hash,
                    assessment_count=len(record.profile.assessments),
                )
            )
        summaries.sort(key=lambda s: (s.name, s.version))
        return summaries

    # -- writing ---------------------------------------------------------

    def save(self, profile: LibraryProfile, *, force: bool = False) -> ProfileRecord:
        """Persist a new revision; unchanged content is a no-op unless forced."""
        profile.validate_against(self.catalog)
        library_id = profile.library.library_id
        document = profile_to_dict(profile)
        digest = content_digest(document)
        with self._lock:
            revisions = self._revisions(library_id)
            previous_hash = None
            if revisions:
                latest = self.get(library_id, revisions[-1])
                if latest.content_hash == digest and not force:
                    return latest
                previous_hash = latest.content_hash
            revision = (revisions[-1] + 1) if revisions else 1
            path = self._revision_path(library_id, revision)
            if path.exists():
                raise WriteConflict(
                    f"revision {revision} of {library_id!r} already exists; retry",
                    detail={"library_id": library_id, "revision": revision},
                )
            record = ProfileRecord(
                profile=profile,
                content_hash=digest,
                revision=revision,
                previous_hash=previous_hash,
                saved_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            )
            payload = {
                "record": {
                    "revision": record.revision,
                    "content_hash": record.content_hash,
                    "previous_hash": record.previous_hash,
                    "saved_at": record.saved_at,
                },
                "profile": document,
            }
            self._library_dir(library_id).mkdir(parents=True, exist_ok=True)
            _atomic_write(path, canonical_bytes(payload))
            self._write_index()
            return record

    def _write_index(self) -> None:
        index = {
            "format_version": 1,
            "libraries": {
                summary.library_id: {
                    "name": summary.name,
                    "version": summary.version,
                    "language": summary.language,
                    "latest_revision": summary.latest_revision,
                    "content_hash": summary.content_hash,
                    "assessment_count": summary.assessment_count,
                }
                for summary in self.list()
            },
        }
        _atomic_write(self._index_path(), canonical_bytes(index))
