"""Content-addressed on-disk cache of reduced Groebner bases."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from . import ENGINE_VERSION
from .textio import ParseError, parse_polynomial, render_polynomial

log = logging.getLogger(__name__)


def cache_key(ring, order, gens, engine: str = ENGINE_VERSION) -> str:
    material = {
        "engine": engine,
        "field": ring.field.spec,
        "vars": list(ring.variables),
        "order": repr(order),
        "generators": [render_polynomial(g) for g in gens],
    }
    blob = json.dumps(material, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


class GBCache:
    """Reduced bases stored as ``<digest>.json`` under ``directory``.

    I/O failures never fail a computation: a corrupt or foreign entry is a
    miss, and an unwritable directory disables storing with one warning."""

    def __init__(self, directory, engine: str = ENGINE_VERSION):
        self.directory = Path(directory)
        self.engine = engine
        self.hits = 0
        self.misses = 0
        self.writable = True
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            self._disable(exc)

    def _disable(self, exc):
        if self.writable:
            log.warning("basis cache at %s unavailable (%s); continuing without storing", self.directory, exc)
        self.writable = False

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def lookup(self, key: str, ring):
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                obj = json.load(fh)
            if obj.get("engine") != self.engine or obj.get("key") != key:
                return None
            return [parse_polynomial(s, ring) for s in obj["basis"]]
        except (OSError, ValueError, KeyError, TypeError, ParseError):
            return None

    def store(self, key: str, basis) -> None:
        if not self.writable:
            return
        payload = {"engine": self.engine, "key": key, "basis": [render_polynomial(g) for g in basis]}
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self._path(key))
        except OSError as exc:
            self._disable(exc)

    def get_or_compute(self, ring, order, gens, producer):
        """Cached basis for (ring, order, gens), else ``producer()`` stored."""
        key = cache_key(ring, order, gens, self.engine)
        found = self.lookup(key, ring)
        if found is not None:
            self.hits += 1
            from .groebner import current_stats

            st = current_stats()
            if st is not None:
                st.cache_hits += 1
            return found
        self.misses += 1
        basis = producer()
        self.store(key, basis)
        return basis


def cache_lookup_store(cache: GBCache, ring, order, gens, producer):
    return cache.get_or_compute(ring, order, gens, producer)
