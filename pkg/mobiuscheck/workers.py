# -*- coding: utf-8 -*-
"""Map a sweep over independent partitions, optionally in a process pool.

``func`` must be a module-level function so it can be pickled. Results come
back in partition order, so callers can reduce them deterministically.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from .config import config

logger = logging.getLogger(__name__)


def run_partitioned(func, parts, workers=None):
    parts = list(parts)
    workers = config.get("WORKERS") if workers is None else workers
    if workers <= 1 or len(parts) <= 1:
        return [func(*args) for args in parts]

    logger.debug(
        "Running {} on {} partitions with {} workers".format(func.__name__, len(parts), workers)
    )
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(func, *args) for args in parts]
        return [future.result() for future in futures]


def split_range(total, parts):
    """Split ``range(total)`` into at most ``parts`` consecutive (start, stop) pairs."""
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]
