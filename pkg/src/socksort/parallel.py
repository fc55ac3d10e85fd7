"""Optional process fan-out for harness work, controlled by SOCKSORT_THREADS."""

from __future__ import annotations

import os
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """1 unless SOCKSORT_THREADS requests more."""
    raw = os.environ.get("SOCKSORT_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"SOCKSORT_THREADS must be an integer, got {raw!r}")
    if workers < 1:
        raise ValueError(f"SOCKSORT_THREADS must be >= 1, got {workers}")
    return workers


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Order-preserving map, fanned out over processes when workers > 1."""
    seq: Sequence[T] = list(items)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    with Pool(min(workers, len(seq))) as pool:
        return pool.map(fn, seq)
