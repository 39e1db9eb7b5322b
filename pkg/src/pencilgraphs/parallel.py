"""Deterministic worker-pool map.

Results are collected in input order, so output never depends on the thread
count or scheduling; a thread count of 1 bypasses the pool entirely.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

_DEFAULT = max(1, os.cpu_count() or 1)


def pmap(fn, items, threads: int | None = None) -> list:
    items = list(items)
    n = _DEFAULT if threads is None else max(1, threads)
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
