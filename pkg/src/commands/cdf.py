import logging

import click

from ..messages import RecordWriter
from .common import *

__all__ = ['cdf', 'cmd_cdf']

log = logging.getLogger('roy.commands.cdf')


def cmd_cdf(params, theta: float, method: Method | str) -> list:
  """One record per method ('both' gives the exact record first)."""
  return [evaluate_cdf(params, theta, each) for each in Method.from_label(method).expand()]


@click.command(name='cdf')
@parameter_options
@click.option('--theta', type=float, required=True, help='evaluation point in [0, 1]')
@click.option('--method', type=click.Choice(Method.labels(), case_sensitive=False), default='exact', show_default=True)
@output_options
@reports_errors
def cdf(theta: float, method: str, fmt: str, out, **kwargs) -> None:
  """P(Θ1 <= theta) under the null hypothesis."""
  params = resolve_params(**kwargs)
  records = cmd_cdf(params, theta, method)
  RecordWriter(fmt, out).write(record.to_dict() for record in records)
  for record in records:
    log.info('%s cdf at %.6g = %.10g (%.3fs)', record.method, theta, record.value, record.elapsed_seconds)
    for warning in record.warnings:
      log.warning('%s : %s', params, warning)
