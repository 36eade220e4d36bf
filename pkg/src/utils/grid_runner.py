"""
Grid Runner
Ordered map over independent evaluation points, optionally across worker processes
"""
import logging
from functools import partial
from multiprocessing import Pool
from typing import Any, Callable, Iterable, List

logger = logging.getLogger(__name__)


def parallel_map(func: Callable, items: Iterable, workers: int = 1, **kwargs: Any) -> List[Any]:
    """
    Apply func to every item, keeping input order

    Args:
        func: Module-level callable (picklable for workers > 1)
        items: Evaluation points
        workers: Process count; 1 runs in-process
        **kwargs: Fixed keyword arguments bound to func

    Returns:
        Results in the order of items
    """
    items = list(items)
    task = partial(func, **kwargs) if kwargs else func
    if workers <= 1 or len(items) < 2:
        return [task(item) for item in items]
    processes = min(workers, len(items))
    logger.info("parallel_map: %d points on %d processes", len(items), processes)
    with Pool(processes=processes) as pool:
        return pool.map(task, items)
