"""Append-only JSON-lines store of result records, keyed by config hash."""

from __future__ import annotations

import json
import logging
import threading
from pathlib import Path

from .records import ResultRecord

logger = logging.getLogger(__name__)


class ResultStore:
    """One JSON object per line; hashes already in the file are remembered on open."""

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._hashes: set[str] = set()
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open("r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    self._hashes.add(json.loads(line)["config_hash"])
                except (json.JSONDecodeError, KeyError, TypeError):
                    logger.warning(f"{self.path}:{lineno}: skipping unreadable record")
        logger.info(f"{self.path}: {len(self._hashes)} recorded config(s)")

    def __contains__(self, config_hash: str) -> bool:
        with self._lock:
            return config_hash in self._hashes

    def __len__(self) -> int:
        with self._lock:
            return len(self._hashes)

    def append(self, record: ResultRecord) -> bool:
        """Write ``record`` unless its hash is already stored; True if written."""
        with self._lock:
            if record.config_hash in self._hashes:
                return False
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as f:
                f.write(record.to_json_line() + "\n")
            self._hashes.add(record.config_hash)
            return True
