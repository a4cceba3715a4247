"""Canonical JSON serialization shared by exports, the store, and the API.

One byte layout per value: UTF-8, sorted object keys, two-space indent,
LF line endings, trailing newline. Content hashes are computed over exactly
these bytes, so equal documents hash equally regardless of who wrote them.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any


def dumps_canonical(document: Any) -> str:
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def canonical_bytes(document: Any) -> bytes:
    return dumps_canonical(document).encode("utf-8")


def content_digest(document: Any) -> str:
    return "sha256:" + hashlib.sha256(canonical_bytes(document)).hexdigest()
