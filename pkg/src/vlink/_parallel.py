"""Optional process-level parallelism, capped by ``VLINK_THREADS``."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    raw = os.environ.get("VLINK_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"VLINK_THREADS must be a positive integer, got {raw!r}") from None


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map in input order; results never depend on the worker count."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
