import math
import logging

from scipy import special
from scipy.optimize import brentq

from ..helper.errors import DomainError, ConvergenceError
from .accuracy import AccuracySpec, default_accuracy

__all__ = ['log_gamma', 'log_beta', 'reg_inc_gamma_p', 'reg_inc_gamma_p_inv']

log = logging.getLogger('roy.special')


def _check_finite(name: str, value: float) -> None:
  if not math.isfinite(value):
    raise DomainError(f'{name} must be finite, got {value}')


def log_gamma(x: float) -> float:
  """
  ln Γ(x) for x > 0.

  ## Raises
  ```py
  DomainError : x <= 0
  ```
  """
  _check_finite('x', x)
  if x <= 0:
    raise DomainError(f'log_gamma needs x > 0, got {x}')
  return float(special.gammaln(x))


def log_beta(a: float, b: float) -> float:
  """ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a + b), never leaving log space."""
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def reg_inc_gamma_p(a: float, x: float) -> float:
  """
  Regularized lower incomplete gamma function P(a, x).

  ## Parameters
  ```py
  >>> a : float
  ```
  shape, a > 0
  ```py
  >>> x : float
  ```
  upper limit, x >= 0 (x = inf gives 1)

  ## Returns
  ```py
  float : P(a, x) in [0, 1]
  ```
  """
  _check_finite('a', a)
  if a <= 0:
    raise DomainError(f'reg_inc_gamma_p needs a > 0, got {a}')
  if math.isnan(x) or x < 0:
    raise DomainError(f'reg_inc_gamma_p needs x >= 0, got {x}')
  if x == 0:
    return 0.0
  if math.isinf(x):
    return 1.0
  return float(special.gammainc(a, x))


def reg_inc_gamma_p_inv(a: float, y: float, accuracy: AccuracySpec | None = None) -> float:
  """
  Inverse of `reg_inc_gamma_p` in its second argument, by bracketed Brent iterations.

  ## Parameters
  ```py
  >>> a : float
  ```
  shape, a > 0
  ```py
  >>> y : float
  ```
  probability level in (0, 1)
  ```py
  >>> accuracy : AccuracySpec, (optional)
  ```
  iteration cap for both the bracket expansion and Brent's method

  ## Returns
  ```py
  float : x such that |P(a, x) - y| <= 1e-10
  ```

  ## Raises
  ```py
  DomainError : a <= 0 or y outside (0, 1)
  ConvergenceError : bracket or root not found within max_iter
  ```
  """
  accuracy = accuracy or default_accuracy()
  _check_finite('a', a)
  if a <= 0:
    raise DomainError(f'reg_inc_gamma_p_inv needs a > 0, got {a}')
  if not 0 < y < 1:
    raise DomainError(f'reg_inc_gamma_p_inv needs y in (0, 1), got {y}')

  hi = max(1.0, 2.0 * a)
  for _ in range(accuracy.max_iter):
    if reg_inc_gamma_p(a, hi) >= y:
      break
    hi *= 2.0
  else:
    raise ConvergenceError(f'could not bracket P^-1({a}, {y}) below {hi:.3e}')

  root, info = brentq(
    lambda x: reg_inc_gamma_p(a, x) - y,
    0.0,
    hi,
    xtol=1e-300,
    maxiter=accuracy.max_iter,
    full_output=True,
    disp=False,
  )
  if not info.converged:
    raise ConvergenceError(f'P^-1({a}, {y}) did not converge in {info.iterations} iterations')
  log.debug('P^-1(%g, %g) = %.17g after %d iterations', a, y, root, info.iterations)
  return float(root)
