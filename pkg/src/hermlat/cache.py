"""On-disk resume cache: one record per reduced Gram, keyed by its canonical text."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Optional

ENV_VAR = "HERMLAT_CACHE"
DEFAULT_PATH = Path.home() / ".cache" / "hermlat" / "nodes.json"


def cache_path(explicit: Optional[str] = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else DEFAULT_PATH


class ResumeCache(dict):
    """Maps "m=<m> rank=<r> <rows>" to {"status": ..., "truant": ...}."""

    def __init__(self, path: Path, records: Optional[dict] = None):
        super().__init__(records or {})
        self.path = path

    @classmethod
    def open(cls, explicit: Optional[str] = None) -> ResumeCache:
        path = cache_path(explicit)
        if path.exists():
            with open(path) as fh:
                doc = json.load(fh)
            return cls(path, doc.get("records", {}))
        return cls(path)

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".hermlat-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump({"format": 1, "records": dict(sorted(self.items()))}, fh, indent=1)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
