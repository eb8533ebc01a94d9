"""Order-preserving fan-out of independent tasks over a bounded thread pool."""

import asyncio
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(threads: int) -> int:
    """Worker count for a configured thread setting (0 = one per CPU)."""
    if threads > 0:
        return threads
    return os.cpu_count() or 1


def run_tasks(func: Callable[[T], R], tasks: Iterable[T], workers: int) -> List[R]:
    """Apply ``func`` to every task; results come back in task order."""
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]

    async def run_all() -> List[R]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [loop.run_in_executor(pool, func, task) for task in tasks]
            return list(await asyncio.gather(*futures))

    return asyncio.run(run_all())
