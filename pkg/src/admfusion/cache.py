"""Versioned on-disk JSON cache for Weyl groups and weight lists.

The directory comes from :func:`set_cache_dir` (the CLI flag) or from the
``ADMFUSION_CACHE_DIR`` environment variable. Without either, nothing is
written and every lookup misses.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from pathlib import Path
from typing import Any

FORMAT_VERSION = 1
ENV_VAR = "ADMFUSION_CACHE_DIR"

_lock = threading.Lock()
_explicit_dir: Path | None = None


def set_cache_dir(path: str | os.PathLike | None) -> None:
    global _explicit_dir
    _explicit_dir = Path(path) if path is not None else None


def cache_dir() -> Path | None:
    if _explicit_dir is not None:
        return _explicit_dir
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _path(kind: str, key: str) -> Path | None:
    root = cache_dir()
    if root is None:
        return None
    return root / f"{kind}-{key}-v{FORMAT_VERSION}.json"


def load(kind: str, key: str) -> Any | None:
    path = _path(kind, key)
    if path is None or not path.exists():
        return None
    try:
        with path.open() as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if payload.get("version") != FORMAT_VERSION or payload.get("key") != key:
        return None
    return payload["data"]


def store(kind: str, key: str, data: Any) -> None:
    path = _path(kind, key)
    if path is None:
        return
    with _lock:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump({"version": FORMAT_VERSION, "key": key, "data": data}, fh, sort_keys=True)
        os.replace(tmp, path)
