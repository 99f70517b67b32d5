"""On-disk cache of enumerated Weyl groups, one JSON file per type."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .lie import LieType
from .weyl import (
    DEFAULT_MAX_ELEMENTS,
    EnumerationCapError,
    WeylGroup,
    WeylWord,
    enumerate_group,
    group_from_words,
    group_order,
)

__all__ = ["CACHE_SCHEMA_VERSION", "GroupCache"]

log = logging.getLogger(__name__)

CACHE_SCHEMA_VERSION = 1


class GroupCache:
    """Stores ShortLex element lists as ``<dir>/<type>.json``.

    Files with another ``schema_version``, a wrong order or unreadable content
    are treated as misses and rewritten.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, t: LieType) -> Path:
        return self.directory / f"{t.name}.json"

    def load(self, t: LieType) -> WeylGroup | None:
        p = self.path(t)
        try:
            data = json.loads(p.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", p, exc)
            return None
        if data.get("schema_version") != CACHE_SCHEMA_VERSION or data.get("lie_type") != t.name:
            return None
        words = [WeylWord(tuple(w)) for w in data.get("words", [])]
        if len(words) != data.get("order") or len(words) != group_order(t):
            log.warning("ignoring inconsistent cache file %s", p)
            return None
        try:
            return group_from_words(t, words)
        except ValueError as exc:
            log.warning("ignoring corrupt cache file %s: %s", p, exc)
            return None

    def store(self, group: WeylGroup) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        p = self.path(group.lie_type)
        payload = {
            "schema_version": CACHE_SCHEMA_VERSION,
            "lie_type": group.lie_type.name,
            "order": group.order,
            "words": [list(w.letters) for w in group.elements],
        }
        fd, tmp = tempfile.mkstemp(prefix=p.name, suffix=".tmp", dir=self.directory)
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh, separators=(",", ":"))
                fh.write("\n")
            os.replace(tmp, p)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        return p

    def group(self, t: LieType, max_elements: int = DEFAULT_MAX_ELEMENTS) -> WeylGroup:
        """Cached group if present, otherwise enumerate and store."""
        required = group_order(t)
        if required > max_elements:
            raise EnumerationCapError(f"W({t.name})", required, max_elements)
        cached = self.load(t)
        if cached is not None:
            return cached
        group = enumerate_group(t, max_elements)
        self.store(group)
        return group
