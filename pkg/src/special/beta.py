import math

from ..helper.errors import DomainError, ConvergenceError
from .accuracy import AccuracySpec, default_accuracy
from .gamma import log_beta

__all__ = ['inc_beta_regularized', 'inc_beta_lower', 'beta_continued_fraction']

# smallest representable magnitude guard of the modified Lentz method
_TINY = 1e-300


def _check_args(x: float, a: float, b: float) -> None:
  if not (math.isfinite(a) and a > 0):
    raise DomainError(f'incomplete beta needs a > 0, got {a}')
  if not (math.isfinite(b) and b > 0):
    raise DomainError(f'incomplete beta needs b > 0, got {b}')
  if math.isnan(x) or not 0 <= x <= 1:
    raise DomainError(f'incomplete beta needs x in [0, 1], got {x}')


def beta_continued_fraction(x: float, a: float, b: float, accuracy: AccuracySpec) -> float:
  """
  Continued fraction of I_x(a, b) evaluated by the modified Lentz method.

  Converges quickly for x < (a + 1) / (a + b + 2) ; callers use the reflection otherwise.

  ## Raises
  ```py
  ConvergenceError : max_iter exhausted before rel_tol was met
  ```
  """
  qab = a + b
  qap = a + 1.0
  qam = a - 1.0
  c = 1.0
  d = 1.0 - qab * x / qap
  if abs(d) < _TINY:
    d = _TINY
  d = 1.0 / d
  h = d
  for m in range(1, accuracy.max_iter + 1):
    m2 = 2 * m
    # even step
    aa = m * (b - m) * x / ((qam + m2) * (a + m2))
    d = 1.0 + aa * d
    if abs(d) < _TINY:
      d = _TINY
    c = 1.0 + aa / c
    if abs(c) < _TINY:
      c = _TINY
    d = 1.0 / d
    h *= d * c
    # odd step
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
    d = 1.0 + aa * d
    if abs(d) < _TINY:
      d = _TINY
    c = 1.0 + aa / c
    if abs(c) < _TINY:
      c = _TINY
    d = 1.0 / d
    delta = d * c
    h *= delta
    if abs(delta - 1.0) <= accuracy.rel_tol:
      return h
  raise ConvergenceError(f'incomplete beta continued fraction did not converge for '
                         f'x={x}, a={a}, b={b} in {accuracy.max_iter} iterations')


def inc_beta_regularized(x: float, a: float, b: float, accuracy: AccuracySpec | None = None) -> float:
  """
  Regularized incomplete beta function I_x(a, b) = B(x; a, b) / B(a, b).

  The prefactor x^a (1-x)^b / B(a, b) is formed in log space, so large a or b
  (b = 2n + 2 with n = 1000) neither overflows nor underflows before the last step.
  """
  accuracy = accuracy or default_accuracy()
  _check_args(x, a, b)
  if x == 0:
    return 0.0
  if x == 1:
    return 1.0
  log_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
  if x < (a + 1.0) / (a + b + 2.0):
    return math.exp(log_front) * beta_continued_fraction(x, a, b, accuracy) / a
  upper = math.exp(log_front) * beta_continued_fraction(1.0 - x, b, a, accuracy) / b
  return min(1.0, max(0.0, 1.0 - upper))


def inc_beta_lower(x: float, a: float, b: float, accuracy: AccuracySpec | None = None) -> float:
  """
  Non-regularized lower incomplete beta B(x; a, b) = ∫_0^x t^(a-1) (1-t)^(b-1) dt.

  ## Parameters
  ```py
  >>> x : float
  ```
  upper limit in [0, 1]
  ```py
  >>> a, b : float
  ```
  positive exponents

  ## Returns
  ```py
  float : B(x; a, b), with B(1; a, b) = B(a, b)
  ```
  """
  return inc_beta_regularized(x, a, b, accuracy) * math.exp(log_beta(a, b))
