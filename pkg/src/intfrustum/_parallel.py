"""Deterministic work partitioning for the enumerators.

Work items are dealt round-robin into ``parts`` buckets so that expensive
items (large bounds) are spread evenly. Callers sort the merged output, so
results never depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return os.cpu_count() or 1


def stride_partition(items: Sequence[T], parts: int) -> list[list[T]]:
    parts = max(1, min(parts, len(items)))
    return [list(items[i::parts]) for i in range(parts)]


def map_partitioned(fn: Callable[..., list[R]], items: Sequence[T], workers: int, *extra) -> list[R]:
    """Apply ``fn(chunk, *extra)`` to each chunk and concatenate the results."""
    if not items:
        return []
    chunks = stride_partition(items, workers)
    if len(chunks) == 1:
        return fn(chunks[0], *extra)
    merged: list[R] = []
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(fn, chunk, *extra) for chunk in chunks]
        for fut in futures:
            merged.extend(fut.result())
    return merged
