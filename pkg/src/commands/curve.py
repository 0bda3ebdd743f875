import logging
from functools import partial
from typing import TextIO

import click
import numpy as np

from ..approx import tw_params
from ..exact import BetaParams
from ..messages import RecordWriter
from ..tasks import run_cells
from .common import *

__all__ = ['curve', 'cmd_curve', 'max_gap']

log = logging.getLogger('roy.commands.curve')


def _curve_row(params: BetaParams, methods: tuple[Method, ...], theta: float) -> dict:
  row = {**params.echo(), 'theta': theta}
  for method in methods:
    record = evaluate_cdf(params, theta, method)
    row[method.label] = record.value
    if method is Method.EXACT:
      row['normalization_residual'] = record.normalization_residual
  return row


def max_gap(rows: list[dict]) -> tuple[float, float]:
  """Largest |exact - approx| over the rows and the θ where it is reached."""
  gaps = [(abs(row['exact'] - row['approx']), row['theta']) for row in rows]
  return max(gaps)


def cmd_curve(params: BetaParams,
              grid_size: int,
              methods: Method | str,
              out: TextIO,
              fmt: str = 'csv',
              summary: bool = False,
              workers: int | None = None) -> list[dict]:
  """
  Cdf curve on an evenly spaced θ grid including both endpoints, one row per θ with one
  column per method ; with `summary` a last row holds the largest exact-vs-approx gap.
  """
  methods = tuple(Method.from_label(methods).expand())
  if Method.APPROX in methods:
    for warning in tw_params(approx_dims(params)).warnings:
      log.warning('%s : %s', params, warning)
  thetas = [float(t) for t in np.linspace(0.0, 1.0, grid_size)]
  rows = run_cells(partial(_curve_row, params, methods), thetas, workers)

  columns = ['s', 'm', 'n', 'field', 'theta'] + [method.label for method in methods]
  if Method.EXACT in methods:
    columns.append('normalization_residual')
  records = rows
  if summary and len(methods) == 2:
    gap, where = max_gap(rows)
    log.info('%s : max |exact - approx| = %.3e at theta=%.6g', params, gap, where)
    columns = ['row'] + columns + ['max_gap']
    records = [{'row': 'grid', **row} for row in rows]
    records.append({'row': 'summary', **params.echo(), 'theta': where, 'max_gap': gap})
  elif summary:
    log.warning('--summary needs both methods, skipped')
  RecordWriter(fmt, out, columns).write(records)
  return records


@click.command(name='curve')
@parameter_options
@click.option('--grid-size', type=click.IntRange(min=2), default=201, show_default=True, help='number of θ points')
@click.option('--method', type=click.Choice(Method.labels(), case_sensitive=False), default='both', show_default=True)
@click.option('--summary', is_flag=True, help='append the max exact-vs-approx gap row')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='worker processes (default ROY_WORKERS)')
@output_options
@reports_errors
def curve(grid_size: int, method: str, summary: bool, workers: int | None, fmt: str, out, **kwargs) -> None:
  """Plot-ready cdf curve data, exact and/or approximate."""
  params = resolve_params(**kwargs)
  cmd_curve(params, grid_size, method, out, fmt, summary, workers)
