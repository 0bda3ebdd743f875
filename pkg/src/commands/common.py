import sys
import time
import logging
import functools
from collections.abc import Callable
from typing import Any

import click

from ..approx import approx_cdf, approx_quantile, tw_params
from ..exact import (BetaParams, FieldKind, ManovaDims, beta_to_manova, exact_cdf, exact_quantile, manova_to_beta,
                     normalization_residual)
from ..helper.auto_numbered import LabeledEnum
from ..helper.errors import DomainError, RoyError
from ..messages import OutputFormat, OutputRecord, RecordWriter, error_record

__all__ = [
  'Method',
  'parameter_options',
  'output_options',
  'resolve_params',
  'approx_dims',
  'evaluate_cdf',
  'evaluate_quantile',
  'reports_errors',
]

log = logging.getLogger('roy.cli')

_ECHO_KEYS = ('s', 'm', 'n', 'p', 'm_dim', 'n_dim', 'theta', 'alpha', 'method')


class Method(LabeledEnum):
  EXACT = ('exact')
  APPROX = ('approx')
  BOTH = ('both')

  def expand(self) -> list['Method']:
    if self is Method.BOTH:
      return [Method.EXACT, Method.APPROX]
    return [self]


def _stack(options: list[Callable]) -> Callable:

  def decorator(fn: Callable) -> Callable:
    for option in reversed(options):
      fn = option(fn)
    return fn

  return decorator


parameter_options = _stack([
  click.option('--s', 's', type=int, default=None, help='number of eigenvalues'),
  click.option('--m', 'm', type=float, default=None, help='first exponent, > -1'),
  click.option('--n', 'n', type=float, default=None, help='second exponent, > -1'),
  click.option('--p', 'p', type=int, default=None, help='MANOVA dimension p'),
  click.option('--mdim', 'm_dim', type=float, default=None, help='columns of X (hypothesis df)'),
  click.option('--ndim', 'n_dim', type=float, default=None, help='columns of Y (error df)'),
  click.option('--complex', 'is_complex', is_flag=True, help='complex Gaussian ensemble'),
])

output_options = _stack([
  click.option('--format',
               'fmt',
               type=click.Choice(OutputFormat.labels(), case_sensitive=False),
               default='csv',
               show_default=True),
  click.option('--out', 'out', type=click.File('w'), default='-', help='output file (default stdout)'),
])


def resolve_params(s: int | None = None,
                   m: float | None = None,
                   n: float | None = None,
                   p: int | None = None,
                   m_dim: float | None = None,
                   n_dim: float | None = None,
                   is_complex: bool = False,
                   **_) -> BetaParams:
  """
  Build the law parameters from exactly one of the two entry forms.

  ## Raises
  ```py
  DomainError : both forms, neither form, or an incomplete one
  ```
  """
  field = FieldKind.COMPLEX if is_complex else FieldKind.REAL
  beta_form = (s, m, n)
  manova_form = (p, m_dim, n_dim)
  has_beta = any(v is not None for v in beta_form)
  has_manova = any(v is not None for v in manova_form)
  if has_beta and has_manova:
    raise DomainError('give either --s/--m/--n or --p/--mdim/--ndim, not both')
  if has_beta:
    if any(v is None for v in beta_form):
      raise DomainError('--s, --m and --n must all be given')
    return BetaParams(s, m, n, field)
  if has_manova:
    if any(v is None for v in manova_form):
      raise DomainError('--p, --mdim and --ndim must all be given')
    return manova_to_beta(ManovaDims(p, m_dim, n_dim), field)
  raise DomainError('missing parameters: give --s/--m/--n or --p/--mdim/--ndim')


def approx_dims(params: BetaParams) -> ManovaDims:
  if not params.is_real:
    raise DomainError('the Tracy-Widom approximation is only available for the real ensemble')
  return beta_to_manova(params)


def _approx_record(params: BetaParams, value_fn: Callable[[ManovaDims], float], **point) -> OutputRecord:
  start = time.perf_counter()
  dims = approx_dims(params)
  tw = tw_params(dims)
  value = value_fn(dims)
  return OutputRecord(
    **params.echo(),
    method=Method.APPROX.label,
    value=value,
    elapsed_seconds=time.perf_counter() - start,
    warnings=list(tw.warnings),
    **point,
  )


def evaluate_cdf(params: BetaParams, theta: float, method: Method) -> OutputRecord:
  """One cdf record ; the approximation is extended by its limits 0 and 1 outside (0, 1)."""
  if method is Method.EXACT:
    result = exact_cdf(params, theta)
    diag = result.diagnostics
    return OutputRecord(
      **params.echo(),
      method=method.label,
      value=result.value,
      normalization_residual=diag.normalization_residual,
      elapsed_seconds=diag.elapsed_seconds,
      precision=diag.precision,
      theta=theta,
    )

  def value_fn(dims: ManovaDims) -> float:
    if theta <= 0:
      return 0.0
    if theta >= 1:
      return 1.0
    return approx_cdf(dims, theta)

  return _approx_record(params, value_fn, theta=theta)


def evaluate_quantile(params: BetaParams, alpha: float, method: Method) -> OutputRecord:
  if method is Method.EXACT:
    start = time.perf_counter()
    value = exact_quantile(params, alpha)
    return OutputRecord(
      **params.echo(),
      method=method.label,
      value=value,
      normalization_residual=normalization_residual(params),
      elapsed_seconds=time.perf_counter() - start,
      alpha=alpha,
    )
  return _approx_record(params, lambda dims: approx_quantile(dims, alpha), alpha=alpha)


def reports_errors(fn: Callable) -> Callable:
  """
  Turn a `RoyError` raised by a subcommand into an error record written in the selected
  format, then exit with the error's code (2 invalid arguments, 3 numerical failure).
  """

  @functools.wraps(fn)
  def wrapper(*args, **kwargs) -> Any:
    try:
      return fn(*args, **kwargs)
    except RoyError as e:
      log.error('%s: %s', e.__class__.__name__, e)
      echo = {key: kwargs[key] for key in _ECHO_KEYS if kwargs.get(key) is not None}
      out = kwargs.get('out') or click.get_text_stream('stdout')
      RecordWriter(kwargs.get('fmt', 'csv'), out).write([error_record(e, echo)])
      sys.exit(e.exit_code)

  return wrapper
