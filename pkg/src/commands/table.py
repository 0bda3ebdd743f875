import sys
import logging
import itertools
from dataclasses import dataclass
from typing import Any, TextIO

import click
from pyjson5 import decode_io # pylint: disable=no-name-in-module

from ..exact import BetaParams, FieldKind
from ..helper.errors import DomainError, RoyError
from ..messages import RECORD_COLUMNS, OutputRecord, RecordWriter
from ..tasks import run_cells
from .common import *

__all__ = ['TableRequest', 'table', 'cmd_table', 'parse_list']

log = logging.getLogger('roy.commands.table')


def parse_list(text: str, kind: type = float) -> tuple:
  """'5, 15,100' -> (5, 15, 100)"""
  try:
    values = tuple(kind(item) for item in text.split(',') if item.strip())
  except ValueError as e:
    raise DomainError(f'cannot parse {text!r} as a list of {kind.__name__}') from e
  return values


@dataclass(frozen=True)
class TableRequest:
  """
  ## Description
  A percentage-point table : every (s, m, n, alpha, method) combination of the grids.

  ## Invariants
  non empty grids ; levels strictly increasing inside (0, 1)
  """

  alpha_levels: tuple[float, ...]
  s_list: tuple[int, ...]
  m_list: tuple[float, ...]
  n_list: tuple[float, ...]
  field: FieldKind = FieldKind.REAL
  method: Method = Method.EXACT

  def __post_init__(self):
    for name in ('alpha_levels', 's_list', 'm_list', 'n_list'):
      values = tuple(getattr(self, name))
      if not values:
        raise DomainError(f'{name} must not be empty')
      object.__setattr__(self, name, values)
    levels = self.alpha_levels
    if any(not 0 < a < 1 for a in levels):
      raise DomainError(f'alpha levels must lie in (0, 1), got {levels}')
    if any(b <= a for a, b in zip(levels, levels[1:])):
      raise DomainError(f'alpha levels must be strictly increasing, got {levels}')
    object.__setattr__(self, 'field', FieldKind.from_label(self.field))
    object.__setattr__(self, 'method', Method.from_label(self.method))

  @classmethod
  def from_grid(cls, grid: dict[str, Any]) -> 'TableRequest':
    """
    Build a request from a decoded grid such as

    ```json5
    {s_list: [5, 15, 100], m_list: [-0.5], n_list: [100], alpha_levels: [0.95], method: 'both'}
    ```
    """
    known = {'alpha_levels', 's_list', 'm_list', 'n_list', 'field', 'method'}
    unknown = set(grid) - known
    if unknown:
      raise DomainError(f'unknown grid keys: {", ".join(sorted(unknown))}')
    missing = {'alpha_levels', 's_list', 'm_list', 'n_list'} - set(grid)
    if missing:
      raise DomainError(f'grid is missing: {", ".join(sorted(missing))}')
    return cls(
      alpha_levels=tuple(float(a) for a in grid['alpha_levels']),
      s_list=tuple(grid['s_list']),
      m_list=tuple(float(m) for m in grid['m_list']),
      n_list=tuple(float(n) for n in grid['n_list']),
      field=grid.get('field', FieldKind.REAL),
      method=grid.get('method', Method.EXACT),
    )

  def cells(self) -> list[tuple]:
    """Grid cells in output order : s, then m, n, alpha, method."""
    methods = self.method.expand()
    return [(s, m, n, self.field, alpha, method)
            for s, m, n, alpha, method in itertools.product(self.s_list, self.m_list, self.n_list,
                                                             self.alpha_levels, methods)]


def _table_cell(cell: tuple) -> tuple[OutputRecord, int]:
  s, m, n, field, alpha, method = cell
  try:
    return evaluate_quantile(BetaParams(s, m, n, field), alpha, method), 0
  except RoyError as e:
    log.error('cell s=%s m=%s n=%s alpha=%s %s failed: %s', s, m, n, alpha, method, e)
    record = OutputRecord(s=s, m=m, n=n, field=field.label, method=method.label, value=None, alpha=alpha, error=str(e))
    return record, e.exit_code


def cmd_table(req: TableRequest, out: TextIO, fmt: str = 'csv', workers: int | None = None) -> int:
  """
  Evaluate every cell and write one record per cell in grid order.

  ## Returns
  ```py
  int : 0, or the largest exit code among the failed cells
  ```
  """
  results = run_cells(_table_cell, req.cells(), workers)
  columns = [column for column in RECORD_COLUMNS if column != 'theta'] + ['error']
  RecordWriter(fmt, out, columns).write(record.to_dict() for record, _ in results)
  failed = [code for _, code in results if code]
  if failed:
    log.error('%d of %d cells failed', len(failed), len(results))
  return max(failed, default=0)


@click.command(name='table')
@click.option('--s-list', 's_list', default=None, help='comma separated s values')
@click.option('--m-list', 'm_list', default=None, help='comma separated m values')
@click.option('--n-list', 'n_list', default=None, help='comma separated n values')
@click.option('--alpha', 'alpha', default='0.9,0.95,0.99', show_default=True, help='comma separated levels')
@click.option('--complex', 'is_complex', is_flag=True, help='complex Gaussian ensemble')
@click.option('--method', type=click.Choice(Method.labels(), case_sensitive=False), default='exact', show_default=True)
@click.option('--grid', 'grid', type=click.File('r'), default=None, help='JSON5 grid file instead of the lists')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='worker processes (default ROY_WORKERS)')
@output_options
@reports_errors
def table(s_list, m_list, n_list, alpha, is_complex, method, grid, workers, fmt, out) -> None:
  """Upper percentage points over a parameter grid."""
  field = FieldKind.COMPLEX if is_complex else FieldKind.REAL
  if grid is not None:
    if any(v is not None for v in (s_list, m_list, n_list)):
      raise DomainError('give either --grid or the --s-list/--m-list/--n-list grids, not both')
    req = TableRequest.from_grid(decode_io(grid))
  else:
    if any(v is None for v in (s_list, m_list, n_list)):
      raise DomainError('--s-list, --m-list and --n-list are required without --grid')
    req = TableRequest(
      alpha_levels=parse_list(alpha),
      s_list=parse_list(s_list, int),
      m_list=parse_list(m_list),
      n_list=parse_list(n_list),
      field=field,
      method=method,
    )
  code = cmd_table(req, out, fmt, workers)
  if code:
    sys.exit(code)
