import logging
from dataclasses import dataclass
from typing import Any, TextIO

import arrow
import click
import jellyfish
from pyjson5 import decode_io # pylint: disable=no-name-in-module

from ..exact import BetaParams, FieldKind, exact_cdf
from ..helper.constants import BENCH_CASES
from ..helper.errors import DomainError
from ..messages import RecordWriter
from .common import *

__all__ = ['BenchCase', 'bench', 'cmd_bench', 'default_cases', 'select_cases']

log = logging.getLogger('roy.commands.bench')


@dataclass(frozen=True)
class BenchCase:
  name: str
  params: BetaParams
  theta: float
  target_seconds: float

  @classmethod
  def from_dict(cls, data: dict[str, Any]) -> 'BenchCase':
    try:
      return cls(
        name=str(data['name']),
        params=BetaParams(data['s'], data['m'], data['n'], data.get('field', FieldKind.REAL)),
        theta=float(data['theta']),
        target_seconds=float(data.get('target', data.get('target_seconds', 1.0))),
      )
    except KeyError as e:
      raise DomainError(f'bench case is missing {e}') from e


def default_cases() -> list[BenchCase]:
  return [
    BenchCase(name, BetaParams(s, m, n), theta, target) for name, s, m, n, theta, target in BENCH_CASES
  ]


def _suggest(name: str, known: list[str]) -> str | None:
  if not known:
    return None
  score, best = max((jellyfish.jaro_winkler_similarity(name, k), k) for k in known)
  return best if score >= 0.7 else None


def select_cases(names: tuple[str, ...], cases: list[BenchCase]) -> list[BenchCase]:
  """
  The cases named, in the order given (all of them when `names` is empty).

  ## Raises
  ```py
  DomainError : an unknown name, with the closest known name when there is one
  ```
  """
  if not names:
    return cases
  by_name = {case.name: case for case in cases}
  selected = []
  for name in names:
    if name not in by_name:
      suggestion = _suggest(name, list(by_name))
      hint = f', did you mean {suggestion!r} ?' if suggestion else ''
      raise DomainError(f'unknown bench case {name!r}{hint}')
    selected.append(by_name[name])
  return selected


def cmd_bench(cases: list[BenchCase], out: TextIO, fmt: str = 'csv', repeat: int = 1) -> list[dict]:
  """
  Wall-clock of `exact_cdf` on each case, best of `repeat` runs after a first cold one.

  Slow cases are reported, never treated as failures.
  """
  started_at = arrow.utcnow().isoformat()
  rows = []
  for case in cases:
    cold = exact_cdf(case.params, case.theta)
    timings = [cold.diagnostics.elapsed_seconds]
    timings += [exact_cdf(case.params, case.theta).diagnostics.elapsed_seconds for _ in range(repeat - 1)]
    within = timings[0] <= case.target_seconds
    log.info('%s : %.4gs (target %.3gs, %s)', case.name, timings[0], case.target_seconds, cold.diagnostics.precision)
    if not within:
      log.warning('%s took %.3fs, target %.3gs', case.name, timings[0], case.target_seconds)
    rows.append({
      'name': case.name,
      **case.params.echo(),
      'theta': case.theta,
      'value': cold.value,
      'elapsed_seconds': timings[0],
      'best_seconds': min(timings),
      'target_seconds': case.target_seconds,
      'within_target': within,
      'precision': cold.diagnostics.precision,
      'normalization_residual': cold.diagnostics.normalization_residual,
      'started_at': started_at,
    })
  RecordWriter(fmt, out).write(rows)
  return rows


@click.command(name='bench')
@click.argument('names', nargs=-1)
@click.option('--cases', 'cases_file', type=click.File('r'), default=None, help='JSON5 list of cases')
@click.option('--repeat', type=click.IntRange(min=1), default=1, show_default=True)
@output_options
@reports_errors
def bench(names: tuple[str, ...], cases_file, repeat: int, fmt: str, out) -> None:
  """Time the exact cdf on named cases (all built-in cases by default)."""
  if cases_file is not None:
    data = decode_io(cases_file)
    if not isinstance(data, list):
      raise DomainError('a cases file holds a list of {name, s, m, n, theta, target} objects')
    cases = [BenchCase.from_dict(item) for item in data]
  else:
    cases = default_cases()
  cmd_bench(select_cases(names, cases), out, fmt, repeat)
