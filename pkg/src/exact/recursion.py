import math

from ..helper.errors import DomainError
from ..special import AccuracySpec, inc_beta_lower

__all__ = ['script_e']

# b - a must be an integer for the ladder to connect ℰ(x; a, b) to a base case
_INTEGER_GAP_TOL = 1e-9


def _ascend(x: float, a: float, steps: int, n: float, accuracy: AccuracySpec | None) -> float:
  """ℰ(x; a, a + steps) from the diagonal base ℰ(x; a, a) = B(x; a, n+1)² / 2."""
  e = inc_beta_lower(x, a, n + 1, accuracy)**2 / 2
  b = a
  for _ in range(steps):
    e = (b * e - inc_beta_lower(x, a + b, 2 * n + 2, accuracy)) / (b + n + 1)
    b += 1
  return e


def script_e(x: float, a: float, b: float, n: float, accuracy: AccuracySpec | None = None) -> float:
  """
  ℰ(x; a, b) = ∫_0^x t^(a-1) (1-t)^n B(t; b, n+1) dt, without quadrature.

  The diagonal ℰ(x; a, a) = B(x; a, n+1)²/2 is the base, ascending b -> b + 1 uses

    ℰ(x; a, b+1) = [b ℰ(x; a, b) - B(x; a+b, 2n+2)] / (b + n + 1)

  and b < a is reached through the reflection
  ℰ(x; a, b) = B(x; a, n+1) B(x; b, n+1) - ℰ(x; b, a).

  ## Parameters
  ```py
  >>> x : float
  ```
  upper limit in [0, 1]
  ```py
  >>> a, b : float
  ```
  positive, with b - a an integer
  ```py
  >>> n : float
  ```
  exponent of (1 - t), n > -1

  ## Raises
  ```py
  DomainError : parameters outside the domain, or b - a not an integer
  ```
  """
  if not (a > 0 and b > 0):
    raise DomainError(f'script_e needs a, b > 0, got a={a}, b={b}')
  if not n > -1:
    raise DomainError(f'script_e needs n > -1, got {n}')
  if math.isnan(x) or not 0 <= x <= 1:
    raise DomainError(f'script_e needs x in [0, 1], got {x}')
  gap = b - a
  if abs(gap - round(gap)) > _INTEGER_GAP_TOL:
    raise DomainError(f'script_e ladder needs b - a integer, got a={a}, b={b}')
  if x == 0:
    return 0.0

  steps = int(round(gap))
  if steps >= 0:
    return _ascend(x, a, steps, n, accuracy)
  # reflection onto the ascending branch
  return (inc_beta_lower(x, a, n + 1, accuracy) * inc_beta_lower(x, b, n + 1, accuracy) -
          _ascend(x, b, -steps, n, accuracy))
