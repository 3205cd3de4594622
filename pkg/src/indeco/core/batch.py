"""
Batch processing utilities.

Maps a pure per-item function over many work items, in-process or over a
process pool, with progress tracking and per-item error capture. Results
always come back in input order so the worker count never changes output.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Generic, TypeVar

import structlog

from indeco.exceptions import IndecoError

logger = structlog.get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class BatchResult(Generic[T, R]):
    """Result of batch processing."""

    total: int
    results: list[R | None] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def successful(self) -> int:
        return self.total - len(self.errors)

    @property
    def failed(self) -> int:
        return len(self.errors)


@dataclass
class BatchProgress:
    """Progress tracking for batch operations."""

    total: int
    completed: int = 0
    failed: int = 0
    started_at: float = field(default_factory=time.perf_counter)

    @property
    def progress_pct(self) -> float:
        """Calculate progress percentage."""
        return (self.completed / self.total * 100) if self.total > 0 else 0.0

    @property
    def elapsed_seconds(self) -> float:
        """Calculate elapsed time."""
        return time.perf_counter() - self.started_at


def _guarded(func: Callable[[T], R], item: T) -> tuple[bool, R | str]:
    try:
        return True, func(item)
    except IndecoError as e:
        return False, str(e)


class BatchProcessor(Generic[T, R]):
    """
    Ordered map with optional process-level parallelism.

    Example:
        processor = BatchProcessor(check_poset, jobs=8)
        result = processor.process(posets)

    ``process_func`` must be a module-level callable (picklable) when
    ``jobs > 1``.
    """

    def __init__(
        self,
        process_func: Callable[[T], R],
        jobs: int = 1,
        chunksize: int = 16,
        on_progress: Callable[[BatchProgress], None] | None = None,
        name: str = "batch",
    ) -> None:
        """
        Initialize batch processor.

        Args:
            process_func: Pure function applied to each item
            jobs: Worker processes; 1 runs in-process
            chunksize: Items handed to a worker at once
            on_progress: Callback for progress updates
            name: Label used in log events
        """
        self.process_func = process_func
        self.jobs = max(1, jobs)
        self.chunksize = max(1, chunksize)
        self.on_progress = on_progress
        self.name = name

    def process(self, items: Sequence[T]) -> BatchResult[T, R]:
        """
        Process all items.

        Domain errors (IndecoError) raised for an item are captured in
        ``errors`` with the item's index; other exceptions propagate.
        """
        if not items:
            return BatchResult(total=0)

        progress = BatchProgress(total=len(items))
        logger.debug("Starting batch", batch=self.name, total=len(items), jobs=self.jobs)

        guarded = partial(_guarded, self.process_func)
        if self.jobs == 1:
            outcomes = map(guarded, items)
            pool = None
        else:
            pool = ProcessPoolExecutor(max_workers=self.jobs)
            outcomes = pool.map(guarded, items, chunksize=self.chunksize)

        result: BatchResult[T, R] = BatchResult(total=len(items))
        try:
            for index, (ok, value) in enumerate(outcomes):
                progress.completed += 1
                if ok:
                    result.results.append(value)  # type: ignore[arg-type]
                else:
                    progress.failed += 1
                    result.results.append(None)
                    result.errors.append((index, str(value)))
                if self.on_progress:
                    self.on_progress(progress)
        finally:
            if pool is not None:
                pool.shutdown()

        result.duration_seconds = progress.elapsed_seconds
        logger.debug(
            "Batch complete",
            batch=self.name,
            total=result.total,
            failed=result.failed,
            duration_seconds=round(result.duration_seconds, 2),
        )
        return result
