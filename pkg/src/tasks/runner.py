import logging
from collections.abc import Callable, Iterable
from multiprocessing import Pool
from typing import Any, TypeVar

from ..helper.config import get_settings

__all__ = ['run_cells']

T = TypeVar('T')

log = logging.getLogger('roy.tasks')


def run_cells(fn: Callable[[Any], T], cells: Iterable[Any], workers: int | None = None) -> list[T]:
  """
  Evaluate `fn` on every cell, possibly in worker processes.

  Results always come back in the order of `cells`, whatever the completion order,
  so written rows are deterministic.

  ## Parameters
  ```py
  >>> fn : Callable
  ```
  a module level (picklable) function
  ```py
  >>> cells : Iterable
  ```
  picklable arguments, one per call
  ```py
  >>> workers : int, (optional)
  ```
  number of processes ; defaults to `ROY_WORKERS`, 1 runs in-process
  """
  cells = list(cells)
  workers = workers or get_settings().workers
  workers = max(1, min(workers, len(cells)))
  if workers == 1:
    return [fn(cell) for cell in cells]
  log.info('Dispatching %d cells to %d workers', len(cells), workers)
  with Pool(processes=workers) as pool:
    return list(pool.imap(fn, cells))
