"""On-disk report cache keyed by unimodular equivalence class.

Unimodularly equivalent polygons share Betti data, so keys hash the
canonical form rather than the raw input. Writes are atomic
(temp file + rename) and payloads are reproduced byte for byte.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Optional

from .geometry import LatticePolygon, canonical_form

CACHE_VERSION = 1
ENV_VAR = "SYZLAB_CACHE_DIR"


def cache_key(delta: LatticePolygon, tag: str, primes, extra: dict) -> str:
    canon = canonical_form(delta)
    blob = json.dumps({
        "version": CACHE_VERSION,
        "polygon": list(map(list, canon.vertices)),
        "tag": tag,
        "primes": sorted(primes),
        "extra": {k: extra[k] for k in sorted(extra)},
    }, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ReportCache:
    def __init__(self, directory: Optional[str] = None):
        if directory is None:
            directory = os.environ.get(ENV_VAR)
        self.directory = Path(directory) if directory else None

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> Optional[bytes]:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            return path.read_bytes()
        except FileNotFoundError:
            return None

    def put(self, key: str, payload: bytes):
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
