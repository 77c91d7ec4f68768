"""
Order-preserving parallel map for parameter sweeps
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Apply fn to every item, optionally on a thread pool.

    Results come back in input order, so the merged output is identical to
    the sequential run whatever the worker count.

    Args:
        fn: Pure function of one item
        items: Inputs
        workers: Thread count (1 runs inline)

    Returns:
        List of results in input order
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"Sweeping {len(items)} items on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
