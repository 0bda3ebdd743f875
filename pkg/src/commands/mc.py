import logging
from typing import TextIO

import arrow
import click

from ..exact import beta_to_manova
from ..messages import RecordWriter
from ..montecarlo import McConfig, compare_with_exact, empirical_cdf
from .common import *

__all__ = ['mc', 'cmd_mc']

log = logging.getLogger('roy.commands.mc')


def cmd_mc(cfg: McConfig,
           out: TextIO,
           fmt: str = 'csv',
           samples_out: TextIO | None = None,
           workers: int | None = None) -> list[dict]:
  """
  Sample Θ1, optionally write the sorted draws to `samples_out`, and write the
  empirical-vs-exact comparison at the deciles to `out`.

  ## Returns
  ```py
  list[dict] : the summary rows, one per decile
  ```
  """
  started_at = arrow.utcnow().isoformat()
  ecdf = empirical_cdf(cfg, workers)
  params = cfg.params

  if samples_out is not None:
    RecordWriter(fmt, samples_out, ['replicate_rank', 'theta', 'empirical_cdf']).write({
      'replicate_rank': rank + 1,
      'theta': float(theta),
      'empirical_cdf': (rank + 1) / ecdf.replicates,
    } for rank, theta in enumerate(ecdf.sorted_samples))

  comparison = compare_with_exact(ecdf, params)
  worst = max(row.deviation for row in comparison)
  log.info('max decile deviation %.4g over %d replicates (%d redraws)', worst, ecdf.replicates, ecdf.redraws)

  rows = [{
    **params.echo(),
    'p': cfg.dims.p,
    'm_dim': cfg.dims.m_dim,
    'n_dim': cfg.dims.n_dim,
    'replicates': cfg.replicates,
    'seed': cfg.seed,
    'decile': row.decile,
    'theta': row.theta,
    'empirical': row.empirical,
    'exact': row.exact,
    'deviation': row.deviation,
    'max_deviation': worst,
    'redraws': ecdf.redraws,
    'started_at': started_at,
  } for row in comparison]
  RecordWriter(fmt, out).write(rows)
  return rows


@click.command(name='mc')
@parameter_options
@click.option('--replicates', type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option('--seed', type=click.IntRange(min=0, max=2**64 - 1), default=0, show_default=True)
@click.option('--samples', 'samples', type=click.File('w'), default=None, help='write the sorted draws here')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='worker processes (default ROY_WORKERS)')
@output_options
@reports_errors
def mc(replicates: int, seed: int, samples, workers: int | None, fmt: str, out, **kwargs) -> None:
  """Monte Carlo check of the exact cdf at the empirical deciles."""
  params = resolve_params(**kwargs)
  cfg = McConfig(dims=beta_to_manova(params), field=params.field, replicates=replicates, seed=seed)
  cmd_mc(cfg, out, fmt, samples, workers)
