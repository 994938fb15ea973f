"""On-disk JSON cache keyed by (command, n, weight), tagged with the engine version."""

from __future__ import annotations

import json
import logging
import os
import tempfile

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "BRAIDED_CASIMIR_CACHE"


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV) or None


def cache_key(command: str, n: int, weight) -> str:
    return f"{command}|n={n}|lambda={','.join(str(int(c)) for c in weight)}"


class CacheStore:
    def __init__(self, path: str, version: str = __version__):
        self.path = path
        self.version = version

    def _load(self) -> dict:
        try:
            with open(self.path, encoding="utf-8") as fh:
                data = json.load(fh)
        except FileNotFoundError:
            return {}
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            log.warning("ignoring corrupt cache file %s: %s", self.path, exc)
            return {}
        if not isinstance(data, dict):
            log.warning("ignoring malformed cache file %s", self.path)
            return {}
        return data

    def get(self, key: str):
        entry = self._load().get(key)
        if not isinstance(entry, dict) or "value" not in entry:
            return None
        if entry.get("version") != self.version:
            return None
        return entry["value"]

    def put(self, key: str, value) -> None:
        data = self._load()
        data[key] = {"version": self.version, "value": value}
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=".cache-", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
