"""
CLI commands for indeco.

Exit codes: 0 success or pass, 1 a claim violation was found, 2 usage,
parse or domain errors. Command output goes to stdout; diagnostics and
logs go to stderr.
"""

from __future__ import annotations

import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any, TypeVar

import click
import orjson
from rich.console import Console
from rich.table import Table

from indeco import __version__
from indeco.catalog import (
    catalog_entries,
    fence_recognize,
    figure2_matches,
    render_catalog_markdown,
    v_cover_recognize,
    x_recognize,
)
from indeco.cli.formats import PosetFile, parse_poset_file, serialize_poset_file
from indeco.config import settings
from indeco.core.covers import CoverResult, smallest_supersets, upper_covers
from indeco.core.decomposition import decompose, is_indecomposable
from indeco.core.enumeration import all_posets
from indeco.core.poset import PinnedTriple, Poset, SubsetSelection
from indeco.exceptions import (
    IndecoError,
    KindMismatch,
    NoSuperset,
    SizeBound,
    UnreadableFile,
)
from indeco.infrastructure.logging import setup_logging
from indeco.schemas.base import JSON_OPTIONS
from indeco.schemas.report import ClaimId, VerificationReport
from indeco.verification import (
    verify_2aclem,
    verify_2chfinal,
    verify_adjacent,
    verify_all,
    verify_corollary,
    verify_nonadjacent,
    verify_rigidity,
    verify_st_growth,
    verify_vcover,
    verify_x_equiv,
)
from indeco.verification.checkers import pinned_subtriple

console = Console()
err_console = Console(stderr=True)

EXIT_VIOLATION = 1
EXIT_USAGE = 2

F = TypeVar("F", bound=Callable[..., Any])

CLAIMS: dict[str, Callable[[int, int], VerificationReport]] = {
    ClaimId.TWO_CHAIN_COVERS.cli_name: verify_2chfinal,
    ClaimId.TWO_ANTICHAIN_COVERS.cli_name: verify_2aclem,
    ClaimId.COROLLARY.cli_name: verify_corollary,
    ClaimId.ST_GROWTH.cli_name: verify_st_growth,
    ClaimId.RIGIDITY.cli_name: lambda max_n, jobs: verify_rigidity(),
    ClaimId.X_EQUIV.cli_name: verify_x_equiv,
    ClaimId.NONADJACENT.cli_name: verify_nonadjacent,
    ClaimId.ADJACENT.cli_name: verify_adjacent,
    ClaimId.VCOVER.cli_name: lambda max_n, jobs: verify_vcover(),
}


def domain_errors(func: F) -> F:
    """Map IndecoError to a diagnostic on stderr and exit status 2."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except IndecoError as e:
            err_console.print(f"[red]error:[/red] {e}", highlight=False)
            sys.exit(EXIT_USAGE)

    return wrapper  # type: ignore[return-value]


def _load(path: Path) -> PosetFile:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise UnreadableFile(str(path), str(e)) from e
    return parse_poset_file(text)


def _require_triple(parsed: PosetFile) -> PinnedTriple:
    triple = parsed.to_triple()
    if triple is None:
        raise KindMismatch("This command needs both 'pin a' and 'pin b'")
    return triple


def _cap(value: int, option: str) -> int:
    if value > settings.max_n:
        raise SizeBound(option, value, 1, settings.max_n)
    return value


@click.group()
@click.version_option(version=__version__, prog_name="indeco")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Override INDECO_LOG_LEVEL",
)
def cli(log_level: str | None) -> None:
    """indeco - indecomposable subsets of finite posets."""
    setup_logging(log_level.upper() if log_level else None)


# ============================================================================
# Single-poset Commands
# ============================================================================


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@domain_errors
def check(file: Path) -> None:
    """Decide indecomposability and print a witness."""
    p = _load(file).to_poset()
    verdict = decompose(p)
    console.print(f"{verdict.kind.value}")
    for part in verdict.witness:
        console.print(f"  {{{', '.join(str(e) for e in part)}}}")


def _identify(p: Poset, cover: SubsetSelection, a: int, b: int) -> str:
    t = pinned_subtriple(p, cover, a, b)
    names: list[str] = []
    if t.is_chain:
        names.extend(str(i) for i in figure2_matches(t))
        if x_recognize(t) is not None:
            names.append("X-member")
    elif t.is_antichain:
        fence = fence_recognize(t, require_endpoints=False)
        if fence is not None and not fence.below_threshold:
            names.append(f"fence ({fence.length})")
        match = v_cover_recognize(t)
        if match is not None:
            names.append(f"V-cover ({match.variant})")
    return " / ".join(names) or "-"


def _cover_table(title: str, p: Poset, result: CoverResult, a: int, b: int) -> Table:
    table = Table(title=title)
    table.add_column("Elements", style="cyan")
    table.add_column("Size", justify="right")
    table.add_column("Identified as")
    for cover in result.covers:
        table.add_row(
            " ".join(str(e) for e in cover), str(len(cover)), _identify(p, cover, a, b)
        )
    return table


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@domain_errors
def covers(file: Path) -> None:
    """Upper covers and smallest supersets of the pinned pair."""
    t = _require_triple(_load(file))
    p = t.poset
    seed = t.pins
    kind = "chain" if t.is_chain else "antichain" if t.is_antichain else "chain b < a"
    console.print(f"seed {{{t.a}, {t.b}}} ({kind}) in a poset of {p.n} elements")

    console.print(_cover_table("Upper covers", p, upper_covers(p, seed), t.a, t.b))
    try:
        smallest = smallest_supersets(p, seed)
    except NoSuperset:
        console.print("[yellow]no indecomposable proper superset[/yellow]")
        return
    console.print(_cover_table("Smallest supersets", p, smallest, t.a, t.b))


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--family",
    type=click.Choice(["x", "v-cover", "figure2", "fence"]),
    required=True,
    help="Family to test membership in",
)
@domain_errors
def recognize(file: Path, family: str) -> None:
    """Test whether the pinned poset belongs to a family."""
    t = _require_triple(_load(file))

    if family == "x":
        peel = x_recognize(t)
        detail = None if peel is None else " ".join(e.value for e in peel) or "base"
    elif family == "v-cover":
        match = v_cover_recognize(t)
        detail = None if match is None else match.variant
    elif family == "figure2":
        matches = figure2_matches(t)
        detail = ", ".join(str(i) for i in matches) or None
    else:
        fence = fence_recognize(t)
        detail = None
        if fence is not None:
            detail = f"{fence.length} elements"
            if fence.below_threshold:
                detail += " (below 4)"

    if detail is None:
        console.print(f"{family}: no")
    else:
        console.print(f"{family}: yes ({detail})", highlight=False)


@cli.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="Number of elements")
@click.option("--indecomposable", is_flag=True, help="Only indecomposable posets")
@click.option("--jobs", type=int, default=None, help="Worker processes")
@domain_errors
def enumerate_posets(n: int, indecomposable: bool, jobs: int | None) -> None:
    """Print one poset file per isomorphism class."""
    posets = all_posets(_cap(n, "n"), jobs=jobs or settings.jobs)
    if indecomposable:
        posets = [p for p in posets if is_indecomposable(p)]
    chunks = [
        serialize_poset_file(p, comments=[f"{index + 1} of {len(posets)}"])
        for index, p in enumerate(posets)
    ]
    click.echo("\n".join(chunks), nl=False)


# ============================================================================
# Verification Commands
# ============================================================================


def _render_text(report: VerificationReport) -> None:
    status = "[green]pass[/green]" if report.passed else "[red]FAIL[/red]"
    table = Table(title=f"Claim {report.claim}")
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("status", status)
    table.add_row("max_n", str(report.max_n))
    table.add_row("instances", str(report.instances_checked))
    table.add_row("violations", str(len(report.violations)))
    table.add_row("elapsed_ms", str(report.elapsed_ms))
    table.add_row("version", report.version)
    console.print(table)
    for v in report.violations:
        console.print(f"  [red]-[/red] {v.reason}: form={v.form} pins={v.pins} subset={v.subset}")
    for line in report.observations:
        console.print(f"  [dim]{line}[/dim]", highlight=False)


@cli.command()
@click.option(
    "--claim",
    type=click.Choice([*CLAIMS, "all"]),
    required=True,
    help="Claim to check",
)
@click.option("--max-n", type=int, default=None, help="Largest poset size (default INDECO_MAX_N)")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    default="text",
    help="Report format",
)
@click.option("--jobs", type=int, default=None, help="Worker processes")
@domain_errors
def verify(claim: str, max_n: int | None, output_format: str, jobs: int | None) -> None:
    """Check a claim exhaustively; exit 1 if any violation is found."""
    bound = _cap(max_n if max_n is not None else settings.max_n, "max_n")
    workers = jobs or settings.jobs

    if claim == "all":
        reports = verify_all(bound, workers)
    else:
        reports = [CLAIMS[claim](bound, workers)]

    if output_format == "json":
        payload: Any = [r.model_dump(mode="json") for r in reports]
        if claim != "all":
            payload = payload[0]
        click.echo(orjson.dumps(payload, option=JSON_OPTIONS).decode())
    else:
        for report in reports:
            _render_text(report)

    if any(not r.passed for r in reports):
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["markdown", "text"]),
    default="text",
    help="Output format",
)
@click.option("--max-x-size", type=int, default=7, help="Largest family-X member listed")
@domain_errors
def catalog(output_format: str, max_x_size: int) -> None:
    """Print every catalog entry."""
    if output_format == "markdown":
        click.echo(render_catalog_markdown(max_x_size=max_x_size), nl=False)
        return

    table = Table(title="Catalog")
    table.add_column("Entry", style="cyan")
    table.add_column("Size", justify="right")
    table.add_column("Covers")
    table.add_column("Aliases")
    for entry in catalog_entries(max_x_size):
        covers_text = ", ".join(f"{x}<{y}" for x, y in entry.cover_relations())
        aliases = ", ".join(str(i) for i in entry.aliases)
        table.add_row(entry.describe(), str(entry.size), covers_text, aliases)
    console.print(table)
