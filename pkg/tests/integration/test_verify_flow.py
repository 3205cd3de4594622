"""
Integration tests running the CLI end to end.
"""

from pathlib import Path

import orjson
import pytest
from click.testing import CliRunner

from indeco.cli import cli
from indeco.config import settings
from indeco.core import enumeration
from indeco.infrastructure.cache import LevelCache


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _verify(runner: CliRunner, claim: str, max_n: int, jobs: int = 1) -> dict:
    result = runner.invoke(
        cli,
        [
            "verify",
            "--claim",
            claim,
            "--max-n",
            str(max_n),
            "--format",
            "json",
            "--jobs",
            str(jobs),
        ],
    )
    assert result.exit_code == 0, result.output
    return orjson.loads(result.stdout)


class TestEnumerateThenInspect:
    """Enumerated files feed back into the single-poset commands."""

    def test_indecomposable_five(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that every listed 5-element poset checks as indecomposable."""
        result = runner.invoke(cli, ["enumerate", "--n", "5", "--indecomposable"])
        assert result.exit_code == 0
        chunks = [c for c in result.stdout.split("\n\n") if c.strip()]
        assert chunks

        for index, chunk in enumerate(chunks):
            path = tmp_path / f"p{index}.txt"
            path.write_text(chunk, encoding="utf-8")
            checked = runner.invoke(cli, ["check", str(path)])
            assert checked.exit_code == 0
            assert checked.stdout.startswith("indecomposable")


class TestLevelCacheFlow:
    """Enumeration through a configured cache directory."""

    def test_cache_written_and_reused(
        self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        """Test that a second run reads the stored levels."""
        monkeypatch.setattr(settings, "cache_dir", tmp_path)
        monkeypatch.setattr(enumeration, "_levels", {})
        first = enumeration.all_canonical_forms(5)
        assert LevelCache(tmp_path).load(5) == first

        monkeypatch.setattr(enumeration, "_levels", {})
        assert enumeration.all_canonical_forms(5) == first


class TestVerifyFlow:
    """Claims through the CLI."""

    @pytest.mark.parametrize("claim", ["2chfinal", "2aclem", "adjacent", "nonadjacent"])
    def test_quick(self, runner: CliRunner, claim: str) -> None:
        """Test passing reports at six elements."""
        report = _verify(runner, claim, 6)
        assert report["violations"] == []

    def test_all(self, runner: CliRunner) -> None:
        """Test the list form of verify --claim all."""
        result = runner.invoke(
            cli, ["verify", "--claim", "all", "--max-n", "5", "--format", "json"]
        )
        assert result.exit_code == 0, result.output
        reports = orjson.loads(result.stdout)
        assert len(reports) == 9

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "claim", ["2chfinal", "2aclem", "corollary", "st-growth", "nonadjacent", "adjacent"]
    )
    def test_seven(self, runner: CliRunner, claim: str) -> None:
        """Test every swept claim at seven elements."""
        assert _verify(runner, claim, 7, jobs=2)["violations"] == []

    @pytest.mark.slow
    def test_eight(self, runner: CliRunner) -> None:
        """Test upper covers of 2-chains at eight elements."""
        report = _verify(runner, "2chfinal", 8, jobs=4)
        assert report["violations"] == []
        assert report["max_n"] == 8

    @pytest.mark.slow
    def test_x_equiv(self, runner: CliRunner) -> None:
        """Test family X agreement at eight elements."""
        assert _verify(runner, "x-equiv", 8, jobs=4)["violations"] == []
