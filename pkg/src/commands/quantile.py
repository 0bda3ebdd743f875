import logging

import click

from ..messages import RecordWriter
from .common import *

__all__ = ['quantile', 'cmd_quantile']

log = logging.getLogger('roy.commands.quantile')


def cmd_quantile(params, alpha: float, method: Method | str) -> list:
  return [evaluate_quantile(params, alpha, each) for each in Method.from_label(method).expand()]


@click.command(name='quantile')
@parameter_options
@click.option('--alpha', type=float, required=True, help='probability level in (0, 1)')
@click.option('--method', type=click.Choice(Method.labels(), case_sensitive=False), default='exact', show_default=True)
@output_options
@reports_errors
def quantile(alpha: float, method: str, fmt: str, out, **kwargs) -> None:
  """θ such that P(Θ1 <= θ) = alpha."""
  params = resolve_params(**kwargs)
  records = cmd_quantile(params, alpha, method)
  RecordWriter(fmt, out).write(record.to_dict() for record in records)
  for record in records:
    log.info('%s quantile %.6g = %.10g (%.3fs)', record.method, alpha, record.value, record.elapsed_seconds)
    for warning in record.warnings:
      log.warning('%s : %s', params, warning)
