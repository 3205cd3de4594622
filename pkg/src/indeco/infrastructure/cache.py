"""
On-disk cache of enumerated poset levels.

Each level lives in its own text file: a versioned header line followed by
one hex-encoded canonical form per line, sorted. Unreadable or mismatched
files are treated as cache misses.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from pathlib import Path

import structlog

from indeco.config import settings

logger = structlog.get_logger(__name__)

FORMAT_VERSION = "v1"


def _header(n: int, count: int) -> str:
    return f"indeco-levels {FORMAT_VERSION} n={n} count={count}"


class LevelCache:
    """
    File-per-level cache of canonical forms.

    Example:
        cache = LevelCache(Path(".cache"))
        cache.store(5, forms)
        assert cache.load(5) == forms
    """

    def __init__(self, directory: Path, prefix: str = "indeco") -> None:
        """
        Initialize cache.

        Args:
            directory: Cache directory, created on first store
            prefix: File name prefix
        """
        self.directory = directory
        self.prefix = prefix

    def path_for(self, n: int) -> Path:
        """File holding level n."""
        return self.directory / f"{self.prefix}-levels-{n}.txt"

    def load(self, n: int) -> list[bytes] | None:
        """
        Read level n.

        Returns:
            Canonical forms in stored order, or None on a miss
        """
        path = self.path_for(n)
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except OSError:
            return None

        if not lines:
            return None
        parts = lines[0].split()
        if len(parts) != 4 or parts[:3] != ["indeco-levels", FORMAT_VERSION, f"n={n}"]:
            logger.warning("Cache header mismatch", path=str(path), header=lines[0])
            return None

        try:
            count = int(parts[3].removeprefix("count="))
            forms = [bytes.fromhex(line) for line in lines[1:] if line]
        except ValueError as e:
            logger.warning("Cache file corrupt", path=str(path), error=str(e))
            return None

        if len(forms) != count:
            logger.warning("Cache count mismatch", path=str(path), expected=count, found=len(forms))
            return None

        logger.debug("Cache hit", n=n, count=count)
        return forms

    def store(self, n: int, forms: Sequence[bytes]) -> bool:
        """
        Write level n atomically.

        Returns:
            True if written
        """
        path = self.path_for(n)
        body = "\n".join([_header(n, len(forms)), *(f.hex() for f in forms)]) + "\n"
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            scratch = path.with_suffix(f".{os.getpid()}.tmp")
            scratch.write_text(body, encoding="utf-8")
            scratch.replace(path)
        except OSError as e:
            logger.warning("Cache store error", path=str(path), error=str(e))
            return False
        logger.debug("Cache stored", n=n, count=len(forms))
        return True


def get_level_cache() -> LevelCache | None:
    """The configured cache, or None when ``cache_dir`` is unset."""
    if settings.cache_dir is None:
        return None
    return LevelCache(settings.cache_dir)
