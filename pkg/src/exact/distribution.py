import math
import time
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from scipy.optimize import brentq

from ..helper.config import get_settings
from ..helper.constants import DPS_FLOOR, QUANTILE_MAX_ITER, QUANTILE_PROB_TOL, QUANTILE_THETA_XTOL
from ..helper.errors import ConvergenceError, DomainError, NegativeDeterminantError, PrecisionEscalationError
from ..special import inc_beta_regularized
from .arithmetic import Arithmetic, arithmetic_for
from .params import BetaParams, beta_to_manova
from .pfaffian import build_pfaffian_matrix, log_pfaffian_native

__all__ = [
  'Diagnostics',
  'DistributionResult',
  'PrecisionPlan',
  'log_norm_constant',
  'precision_plan',
  'normalization_residual',
  'exact_cdf',
  'exact_quantile',
]

log = logging.getLogger('roy.exact')


@dataclass(frozen=True)
class Diagnostics:
  normalization_residual: float
  iterations: int
  elapsed_seconds: float
  precision: str = 'double'


@dataclass(frozen=True)
class DistributionResult:
  """
  ## Description
  A cdf value with its log and the diagnostics of the evaluation.

  `iterations` counts the arithmetic passes spent on this evaluation (1 unless the
  determinant had to be recomputed at a higher precision).
  """

  value: float
  log_value: float
  diagnostics: Diagnostics


def _log_norm_constant(ar: Arithmetic, params: BetaParams) -> Any:
  s, m, n = params.s, params.m, params.n
  total = ar.number(0.0)
  if params.is_real:
    total += ar.number(s / 2) * ar.log(ar.pi())
    for i in range(1, s + 1):
      total += (ar.log_gamma((i + 2 * m + 2 * n + s + 2) / 2) - ar.log_gamma(i / 2) -
                ar.log_gamma((i + 2 * m + 1) / 2) - ar.log_gamma((i + 2 * n + 1) / 2))
  else:
    for i in range(1, s + 1):
      total += ar.log_gamma(m + n + s + i) - ar.log_gamma(i) - ar.log_gamma(i + m) - ar.log_gamma(i + n)
  return total


def log_norm_constant(params: BetaParams) -> float:
  """
  ln C(s, m, n) of the real law, or ln C'(s, m, n) of the complex one, as a sum of
  log-gamma terms (C itself overflows long before s = 200).
  """
  return _log_norm_constant(arithmetic_for(None), params)


def _complex_log_det(ar: Arithmetic, params: BetaParams, theta: float) -> tuple[int, Any]:
  """
  log det of the s x s matrix a_ij = B(θ; m+i+j-1, n+1), symmetrically scaled by
  B(m+2i-1, n+1)^(-1/2) so that its diagonal is 1 at θ = 1.
  """
  s, m, n = params.s, params.m, params.n
  x = ar.number(theta)
  log_b = {k: ar.log_beta(m + k, n + 1) for k in range(1, 2 * s)}
  inc = {k: ar.reg_inc_beta(x, m + k, n + 1) for k in range(1, 2 * s)}
  matrix = ar.zeros(s)
  for i in range(1, s + 1):
    for j in range(1, s + 1):
      k = i + j - 1
      matrix[i - 1, j - 1] = inc[k] * ar.exp(log_b[k] - (log_b[2 * i - 1] + log_b[2 * j - 1]) / 2)
  sign, log_det = ar.slogdet(matrix)
  if sign < 0:
    raise NegativeDeterminantError(ar.to_float(log_det), s)
  if sign == 0:
    return 0, log_det
  return 1, log_det + sum((log_b[2 * i - 1] for i in range(1, s + 1)), ar.number(0.0))


def _log_cdf_unclamped(ar: Arithmetic, params: BetaParams, theta: float) -> tuple[int, Any]:
  """(sign, ln F(θ)) without any clamping ; sign 0 means the matrix was singular."""
  if params.is_real:
    sign, log_pf = log_pfaffian_native(build_pfaffian_matrix(params, theta, ar))
  else:
    sign, log_pf = _complex_log_det(ar, params, theta)
  if sign == 0:
    return 0, log_pf
  return 1, _log_norm_constant(ar, params) + log_pf


def _residual_at_one(ar: Arithmetic, params: BetaParams) -> float:
  try:
    sign, log_f = _log_cdf_unclamped(ar, params, 1.0)
  except NegativeDeterminantError as e:
    log.debug('F(1) self-check hit a negative determinant (%s): %s', ar.label, e)
    return math.inf
  if sign == 0:
    return math.inf
  try:
    return ar.to_float(abs(ar.exp(log_f) - 1))
  except OverflowError:
    return math.inf


@dataclass(frozen=True)
class PrecisionPlan:
  """
  ## Description
  The arithmetic accepted for one parameter triple by the F(1) = 1 self-check.

  `dps` is None for double precision.
  """

  dps: int | None
  residual: float
  attempts: int

  def arithmetic(self) -> Arithmetic:
    return arithmetic_for(self.dps)


def _ladder(max_dps: int, start: int = DPS_FLOOR):
  """Digits to try : doubling from `start`, the last rung clamped to `max_dps`."""
  dps = min(start, max_dps)
  while True:
    yield dps
    if dps >= max_dps:
      return
    dps = min(2 * dps, max_dps)


@lru_cache(maxsize=256)
def precision_plan(params: BetaParams) -> PrecisionPlan:
  """
  Pick the cheapest arithmetic whose unclamped F(1) is 1 within tolerance.

  Double precision is tried first and accepted at `ROY_RESIDUAL_TOL` ; otherwise the
  multi-precision ladder starts at `DPS_FLOOR` digits and doubles until
  `ROY_ESCALATED_TOL` is met, its last rung being `ROY_MAX_DPS`.

  ## Raises
  ```py
  PrecisionEscalationError : the ladder was exhausted
  ```
  """
  settings = get_settings()
  if params.s == 1:
    return PrecisionPlan(None, 0.0, 0)

  residual = _residual_at_one(arithmetic_for(None), params)
  if residual <= settings.residual_tol:
    log.debug('double precision accepted for %s (residual %.3e)', params, residual)
    return PrecisionPlan(None, residual, 1)

  log.warning('double precision residual %.3e for s=%d m=%g n=%g (%s), escalating', residual, params.s,
              params.m, params.n, params.field)
  attempts, best, last = 1, residual, None
  for dps in _ladder(settings.max_dps):
    attempts += 1
    last = dps
    residual = _residual_at_one(arithmetic_for(dps), params)
    best = min(best, residual)
    if residual <= settings.escalated_tol:
      log.info('accepted %d digits for s=%d m=%g n=%g (residual %.3e)', dps, params.s, params.m, params.n,
               residual)
      return PrecisionPlan(dps, residual, attempts)
    log.debug('residual %.3e at %d digits', residual, dps)
  raise PrecisionEscalationError(best, last)


def normalization_residual(params: BetaParams) -> float:
  """|F(1) - 1| of the unclamped evaluation in the accepted arithmetic."""
  return precision_plan(params).residual


def exact_cdf(params: BetaParams, theta: float) -> DistributionResult:
  """
  Exact cdf of the largest eigenvalue Θ1 at θ.

  Real ensemble : F = C sqrt|A(θ)| with A the skew-symmetric matrix of
  `build_pfaffian_matrix`.\\
  Complex ensemble : F = C' |A(θ)| with a_ij = B(θ; m+i+j-1, n+1).

  ## Parameters
  ```py
  >>> params : BetaParams
  ```
  law parameters
  ```py
  >>> theta : float
  ```
  evaluation point ; values outside [0, 1] are clamped (F(0) = 0, F(1) = 1)

  ## Returns
  ```py
  DistributionResult : value in [0, 1], its log and the diagnostics
  ```

  ## Raises
  ```py
  PrecisionEscalationError : no arithmetic met the normalization tolerance
  ```
  """
  start = time.perf_counter()
  if math.isnan(theta):
    raise DomainError('theta must not be NaN')
  plan = precision_plan(params)
  passes = 0
  precision = plan.arithmetic().label

  if theta <= 0:
    value, log_value = 0.0, -math.inf
  elif theta >= 1:
    value, log_value = 1.0, 0.0
  elif params.s == 1:
    # Beta(m+1, n+1) for both ensembles
    value = inc_beta_regularized(theta, params.m + 1, params.n + 1)
    log_value = math.log(value) if value > 0 else -math.inf
  else:
    settings = get_settings()
    ar = plan.arithmetic()
    retries = (dps for dps in _ladder(settings.max_dps, 2 * plan.dps if plan.dps else DPS_FLOOR)
               if plan.dps is None or dps > plan.dps)
    while True:
      passes += 1
      try:
        sign, native = _log_cdf_unclamped(ar, params, theta)
        break
      except NegativeDeterminantError as e:
        next_dps = next(retries, None)
        if next_dps is None:
          raise PrecisionEscalationError(plan.residual, ar.dps) from e
        log.warning('%s at theta=%.6g with %s, retrying with %d digits', e, theta, ar.label, next_dps)
        ar = arithmetic_for(next_dps)
    precision = ar.label
    log_value = min(0.0, ar.to_float(native)) if sign else -math.inf
    value = min(1.0, max(0.0, math.exp(log_value)))

  return DistributionResult(
    value=value,
    log_value=log_value,
    diagnostics=Diagnostics(
      normalization_residual=plan.residual,
      iterations=passes,
      elapsed_seconds=time.perf_counter() - start,
      precision=precision,
    ),
  )


def _bracket(params: BetaParams, prob: float, f) -> tuple[float, float]:
  """
  [0, 1] narrowed around the Tracy-Widom guess when one is available ; every trial point
  keeps the bracket valid whichever side of the root it lands on.
  """
  lo, hi = 0.0, 1.0
  if not params.is_real or params.s == 1:
    return lo, hi
  # pylint: disable=import-outside-toplevel
  from ..approx.tracy_widom import approx_quantile
  try:
    guess = approx_quantile(beta_to_manova(params), prob)
  except DomainError:
    return lo, hi
  width = 0.05 * min(guess, 1 - guess)
  for point in (guess - width, guess + width):
    if not lo < point < hi:
      continue
    if f(point) < 0:
      lo = point
    else:
      hi = point
  return lo, hi


def exact_quantile(params: BetaParams, prob: float) -> float:
  """
  θ such that |F(θ) - prob| <= 1e-9, by Brent's method on the exact cdf.

  ## Raises
  ```py
  DomainError : prob outside (0, 1)
  ConvergenceError : no convergence within the iteration cap
  ```
  """
  if not 0 < prob < 1:
    raise DomainError(f'probability level must be in (0, 1), got {prob}')

  def f(theta: float) -> float:
    return exact_cdf(params, theta).value - prob

  lo, hi = _bracket(params, prob, f)
  root, info = brentq(f, lo, hi, xtol=QUANTILE_THETA_XTOL, maxiter=QUANTILE_MAX_ITER, full_output=True, disp=False)
  if not info.converged:
    raise ConvergenceError(f'exact quantile did not converge for {params} at {prob}')
  miss = abs(f(root))
  if miss > QUANTILE_PROB_TOL:
    raise ConvergenceError(f'exact quantile misses the level by {miss:.3e} for {params} at {prob}')
  log.debug('quantile %.6g of %s = %.9g after %d cdf calls', prob, params, root, info.function_calls + 1)
  return float(root)
