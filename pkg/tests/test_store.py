from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from helpers import random_profile
from libdex.errors import (
    CatalogMismatch,
    DocumentError,
    DuplicateCriterion,
    MissingEvidenceNote,
    NotFoundError,
    RangeViolation,
    UnknownCriterion,
    UnknownGrade,
    WriteConflict,
)
from libdex.reference import example_profiles
from libdex.scoring import compute_index
from libdex.store import (
    ProfileStore,
    import_grade_report,
    load_profile,
    merge_assessments,
    profile_digest,
    profile_from_dict,
    profile_to_dict,
)

REPO_ROOT = Path(__file__).resolve().parent.parent


def _document(**overrides) -> dict:
    base = {
        "format_version": 1,
        "catalog_version": "builtin-1",
        "library": {"name": "Sample", "version": "1.0"},
        "assessments": [
            {"criterion": "1a", "rating": 1, "note": "n"},
            {"criterion": "2a", "rating": 0, "note": "n"},
        ],
    }
    base.update(overrides)
    return base


class TestProfileDocuments:
    def test_shipped_profiles_cover_fourteen_attributes(self, catalog):
        for profile in example_profiles():
            assert len(profile.assessments) == 28
            attribute_ids = {
                catalog.criterion(a.criterion_id).attribute_id
                for a in profile.assessments
            }
            assert len(attribute_ids) == 14
            assert 13 not in attribute_ids

    def test_empty_assessments_valid(self, catalog, ref_weights):
        profile, warnings = profile_from_dict(_document(assessments=[]), catalog)
        assert warnings == []
        report = compute_index(profile, ref_weights, catalog)
        assert report.total == 0
        assert (report.achievable_min, report.achievable_max) == (0, 0)

    def test_out_of_range_rating_names_criterion(self, catalog):
        document = _document(
            assessments=[{"criterion": "1a", "rating": 7, "note": "n"}]
        )
        with pytest.raises(RangeViolation, match="1a"):
            profile_from_dict(document, catalog)

    def test_unknown_criterion(self, catalog):
        document = _document(
            assessments=[{"criterion": "99z", "rating": 0, "note": "n"}]
        )
        with pytest.raises(UnknownCriterion):
            profile_from_dict(document, catalog)

    def test_duplicate_criterion(self, catalog):
        document = _document(
            assessments=[
                {"criterion": "1a", "rating": 0, "note": "n"},
                {"criterion": "1a", "rating": 1, "note": "n"},
            ]
        )
        with pytest.raises(DuplicateCriterion):
            profile_from_dict(document, catalog)

    def test_catalog_version_mismatch(self, catalog):
        with pytest.raises(CatalogMismatch):
            profile_from_dict(_document(catalog_version="elsewhere-2"), catalog)

    def test_extreme_rating_requires_note(self, catalog):
        document = _document(assessments=[{"criterion": "1a", "rating": 2}])
        with pytest.raises(MissingEvidenceNote):
            profile_from_dict(document, catalog)

    def test_missing_note_warns_for_moderate_ratings(self, catalog):
        document = _document(assessments=[{"criterion": "1a", "rating": 1}])
        profile, warnings = profile_from_dict(document, catalog)
        assert len(warnings) == 1

    def test_parse_error_is_position_annotated(self, tmp_path, catalog):
        path = tmp_path / "broken.profile.json"
        path.write_text('{"library": \n oops', encoding="utf-8")
        with pytest.raises(DocumentError, match=r"line 2"):
            load_profile(path, catalog)

    def test_round_trip_generated_profiles(self, catalog):
        rng = random.Random(12)
        for _ in range(50):
            profile = random_profile(rng, catalog)
            rebuilt, _ = profile_from_dict(profile_to_dict(profile), catalog)
            assert rebuilt == profile

    def test_canonical_serialization_is_injective(self, catalog):
        rng = random.Random(13)
        digests = {}
        for _ in range(80):
            profile = random_profile(rng, catalog)
            digest = profile_digest(profile)
            if digest in digests:
                assert digests[digest] == profile
            digests[digest] = profile
        assert len(digests) > 70

    def test_fractional_rating_survives_round_trip(self, catalog):
        document = _document(
            assessments=[{"criterion": "2a", "rating": "1/3", "note": "n"}]
        )
        profile, _ = profile_from_dict(document, catalog)
        assert profile.assessments[0].rating == Fraction(1, 3)
        again, _ = profile_from_dict(profile_to_dict(profile), catalog)
        assert again == profile


class TestProfileStore:
    @pytest.fixture
    def store(self, tmp_path, catalog):
        return ProfileStore(tmp_path / "store", catalog)

    def test_save_then_get_round_trips(self, store, bouncy_castle):
        record = store.save(bouncy_castle)
        fetched = store.get(bouncy_castle.library.library_id)
        assert fetched.profile == bouncy_castle
        assert fetched.content_hash == record.content_hash
        assert fetched.revision == 1
        assert fetched.previous_hash is None

    def test_save_unchanged_is_a_no_op(self, store, tink):
        first = store.save(tink)
        second = store.save(tink)
        assert second.revision == first.revision
        assert second.content_hash == first.content_hash

    def test_force_creates_new_revision_with_hash_chain(self, store, tink):
        first = store.save(tink)
        forced = store.save(tink, force=True)
        assert forced.revision == first.revision + 1
        assert forced.previous_hash == first.content_hash
        assert forced.content_hash == first.content_hash

    def test_get_specific_revision(self, store, tink):
        store.save(tink)
        store.save(tink, force=True)
        assert store.get(tink.library.library_id, revision=1).revision == 1
        assert store.get(tink.library.library_id).revision == 2

    def test_list_sorted_by_name(self, store, bouncy_castle, tink):
        store.save(tink)
        store.save(bouncy_castle)
        summaries = store.list()
        assert [s.name for s in summaries] == ["Bouncy Castle", "Tink"]
        assert [s.assessment_count for s in summaries] == [28, 28]

    def test_listing_independent_of_insertion_order(self, tmp_path, catalog):
        rng = random.Random(14)
        profiles = [random_profile(rng, catalog, name=f"lib {i}") for i in range(6)]
        forward = ProfileStore(tmp_path / "fwd", catalog)
        backward = ProfileStore(tmp_path / "bwd", catalog)
        for profile in profiles:
            forward.save(profile)
        for profile in reversed(profiles):
            backward.save(profile)
        strip = lambda summaries: [
            (s.library_id, s.name, s.latest_revision, s.content_hash)
            for s in summaries
        ]
        assert strip(forward.list()) == strip(backward.list())

    def test_unknown_library(self, store):
        with pytest.raises(NotFoundError):
            store.get("nobody-0.0")

    def test_unknown_revision_lists_known(self, store, tink):
        store.save(tink)
        with pytest.raises(NotFoundError) as excinfo:
            store.get(tink.library.library_id, revision=9)
        assert excinfo.value.detail["known_revisions"] == [1]

    def test_raced_revision_surfaces_retryable_conflict(self, store, tink, monkeypatch):
        store.save(tink)
        # another writer claims revision 2 after this store scanned revisions
        blocker = store._revision_path(tink.library.library_id, 2)
        blocker.write_text("{}", encoding="utf-8")
        monkeypatch.setattr(store, "_revisions", lambda library_id: [1])
        with pytest.raises(WriteConflict) as excinfo:
            store.save(tink, force=True)
        assert excinfo.value.retryable

    def test_index_file_written(self, store, tink):
        store.save(tink)
        index = json.loads((store.root / "index.json").read_text(encoding="utf-8"))
        assert tink.library.library_id in index["libraries"]


class TestGradeReportImport:
    def test_grades_a_e_e(self):
        assessments = import_grade_report(
            {"bugs": "A", "vulnerability": "E", "code_smell": "E"}
        )
        assert {a.criterion_id: a.rating for a in assessments} == {
            "7a": Fraction(2),
            "7b": Fraction(-2),
            "7c": Fraction(-2),
        }

    def test_grades_b_a_a(self):
        assessments = import_grade_report(
            {"bugs": "B", "vulnerability": "A", "code_smell": "A"}
        )
        assert {a.criterion_id: a.rating for a in assessments} == {
            "7a": Fraction(1),
            "7b": Fraction(2),
            "7c": Fraction(2),
        }

    def test_all_c_is_all_zero(self):
        assessments = import_grade_report(
            {"bugs": "C", "vulnerability": "C", "code_smell": "C"}
        )
        assert all(a.rating == 0 for a in assessments)

    def test_missing_key(self):
        with pytest.raises(DocumentError, match="vulnerability"):
            import_grade_report({"bugs": "A", "code_smell": "B"})

    def test_unknown_grade(self):
        with pytest.raises(UnknownGrade):
            import_grade_report({"bugs": "A", "vulnerability": "Z", "code_smell": "B"})

    def test_merge_replaces_existing_assessments(self, bouncy_castle):
        new = import_grade_report(
            {"bugs": "C", "vulnerability": "C", "code_smell": "C"}
        )
        merged = merge_assessments(bouncy_castle, new)
        ratings = merged.rating_by_criterion()
        assert ratings["7a"] == 0 and ratings["7b"] == 0 and ratings["7c"] == 0
        assert len(merged.assessments) == len(bouncy_castle.assessments)


class TestFixtureSync:
    """Repo-level fixtures must stay byte-identical to the package data."""

    @pytest.mark.parametrize(
        "fixture, packaged",
        [
            ("fixtures/bouncy-castle.profile.json", "src/libdex/data/profiles/bouncy-castle.profile.json"),
            ("fixtures/tink.profile.json", "src/libdex/data/profiles/tink.profile.json"),
            ("fixtures/weights.reference.json", "src/libdex/data/weights.reference.json"),
            ("fixtures/evidence/literature.json", "src/libdex/data/evidence/literature.json"),
            ("fixtures/evidence/interviews.json", "src/libdex/data/evidence/interviews.json"),
            ("fixtures/evidence/questionnaire.json", "src/libdex/data/evidence/questionnaire.json"),
        ],
    )
    def test_copies_in_sync(self, fixture, packaged):
        assert (REPO_ROOT / fixture).read_bytes() == (REPO_ROOT / packaged).read_bytes()
