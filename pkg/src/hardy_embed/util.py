"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

__all__ = ["thread_count", "thread_map"]


def thread_count() -> int:
    """Sweep-parallelism cap from HARDY_EMBED_THREADS (0 or unset = auto)."""
    raw = os.environ.get("HARDY_EMBED_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HARDY_EMBED_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("HARDY_EMBED_THREADS must be >= 0")
    if value == 0:
        return min(os.cpu_count() or 1, 8)
    return value


def thread_map(fn, items):
    """Map fn over items, possibly in parallel; results keep input order."""
    items = list(items)
    workers = min(thread_count(), max(len(items), 1))
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
