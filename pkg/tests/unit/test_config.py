"""
Tests for application settings.
"""

from pathlib import Path

import pytest
from pydantic import ValidationError

from indeco.config import LogFormat, Settings


class TestSettings:
    """Tests for Settings."""

    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test values without any environment."""
        for name in ("INDECO_MAX_N", "INDECO_JOBS", "INDECO_CACHE_DIR", "INDECO_LOG_FORMAT"):
            monkeypatch.delenv(name, raising=False)
        s = Settings(_env_file=None)  # type: ignore[call-arg]
        assert s.max_n == 8
        assert s.jobs == 1
        assert s.cache_dir is None
        assert s.log_format == LogFormat.CONSOLE

    def test_environment(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
        """Test the INDECO_ prefix."""
        monkeypatch.setenv("INDECO_MAX_N", "6")
        monkeypatch.setenv("INDECO_JOBS", "4")
        monkeypatch.setenv("INDECO_CACHE_DIR", str(tmp_path))
        s = Settings(_env_file=None)  # type: ignore[call-arg]
        assert (s.max_n, s.jobs, s.cache_dir) == (6, 4, tmp_path)

    def test_empty_cache_dir(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that an empty value disables the cache."""
        monkeypatch.setenv("INDECO_CACHE_DIR", "  ")
        assert Settings(_env_file=None).cache_dir is None  # type: ignore[call-arg]

    @pytest.mark.parametrize("value", ["0", "10"])
    def test_max_n_range(self, monkeypatch: pytest.MonkeyPatch, value: str) -> None:
        """Test the hard cap on max_n."""
        monkeypatch.setenv("INDECO_MAX_N", value)
        with pytest.raises(ValidationError):
            Settings(_env_file=None)  # type: ignore[call-arg]
