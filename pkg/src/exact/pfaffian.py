import math
import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..helper.errors import DomainError, NegativeDeterminantError
from .arithmetic import Arithmetic, arithmetic_for
from .params import BetaParams

__all__ = ['SkewPfaffianMatrix', 'build_pfaffian_matrix', 'log_pfaffian', 'log_pfaffian_native']

log = logging.getLogger('roy.exact')


@dataclass
class SkewPfaffianMatrix:
  """
  ## Description
  The skew-symmetric matrix whose Pfaffian gives the real cdf, stored after the
  symmetric diagonal scaling D A D with D = diag(1 / B(m+i, n+1)) (1 on the odd border).

  `log_scales[i]` is -ln d_i, so that the original entry is
  a_ij = entries[i][j] * exp(log_scales[i] + log_scales[j]) and
  log Pf(original) = log Pf(entries) + scale_log.
  """

  order: int
  entries: Any
  log_scales: list[Any]
  arithmetic: Arithmetic

  @property
  def scale_log(self) -> Any:
    return sum(self.log_scales, self.arithmetic.number(0.0))

  def to_numpy(self) -> np.ndarray:
    """Stored (scaled) entries as a float array."""
    ar = self.arithmetic
    return np.array([[ar.to_float(self.entries[i, j]) for j in range(self.order)] for i in range(self.order)],
                    dtype=float)

  def unscaled(self) -> np.ndarray:
    """Original entries a_ij(θ) as a float array (may underflow for large parameters)."""
    scales = np.array([self.arithmetic.to_float(v) for v in self.log_scales])
    return self.to_numpy() * np.exp(scales[:, None] + scales[None, :])


def build_pfaffian_matrix(params: BetaParams, theta: float, arithmetic: Arithmetic | None = None) -> SkewPfaffianMatrix:
  """
  Assemble A(θ) by the row recurrence : one beta-squared base per row, the ascent
  across columns, the reflection for the entry itself ; odd s gets the border column
  of incomplete betas and a zero row.

  Everything is carried on scaled quantities : with I_k = I_θ(m+k, n+1) and
  e_ij = ℰ(θ; m+i, m+j) / (B(m+i, n+1) B(m+j, n+1)), the ascent factor cancels against
  the ratio of consecutive complete betas and the recurrence becomes

    e_i,i = I_i² / 2 ,  e_i,j+1 = e_i,j - w_ij I_θ(2m+i+j, 2n+2) ,  ã_i,j+1 = I_i I_j+1 - 2 e_i,j+1

  with w_ij = B(2m+i+j, 2n+2) / (B(m+i, n+1) B(m+j+1, n+1) (m+j+n+1)) taken from log space.
  """
  if not params.is_real:
    raise DomainError('the skew-symmetric matrix only exists for the real ensemble')
  if not 0 <= theta <= 1:
    raise DomainError(f'theta must be in [0, 1], got {theta}')
  ar = arithmetic or arithmetic_for(None)
  s, m, n = params.s, params.m, params.n
  x = ar.number(theta)

  # 1-based tables, index 0 unused
  inc = [None] + [ar.reg_inc_beta(x, m + i, n + 1) for i in range(1, s + 1)]
  log_b = [None] + [ar.log_beta(m + i, n + 1) for i in range(1, s + 1)]
  inc2 = {k: ar.reg_inc_beta(x, 2 * m + k, 2 * n + 2) for k in range(2, 2 * s)}
  log_b2 = {k: ar.log_beta(2 * m + k, 2 * n + 2) for k in range(2, 2 * s)}
  log_den = [None] + [ar.log(ar.number(m + j + n + 1)) for j in range(1, s + 1)]

  order = params.order
  entries = ar.zeros(order)
  for i in range(1, s + 1):
    e = inc[i] * inc[i] / 2
    for j in range(i, s):
      w = ar.exp(log_b2[i + j] - log_b[i] - log_b[j + 1] - log_den[j])
      e = e - w * inc2[i + j]
      a = inc[i] * inc[j + 1] - 2 * e
      entries[i - 1, j] = a
      entries[j, i - 1] = -a

  log_scales = log_b[1:]
  if order > s:
    for i in range(1, s + 1):
      entries[i - 1, s] = inc[i]
      entries[s, i - 1] = -inc[i]
    log_scales = log_scales + [ar.number(0.0)]

  log.debug('assembled order %d skew matrix at theta=%.6g (%s)', order, theta, ar.label)
  return SkewPfaffianMatrix(order=order, entries=entries, log_scales=log_scales, arithmetic=ar)


def log_pfaffian_native(a: SkewPfaffianMatrix) -> tuple[int, Any]:
  """
  `log_pfaffian` in the matrix's own number system (no conversion to float).

  ## Raises
  ```py
  NegativeDeterminantError : the pivoted factorization returned det < 0
  ```
  """
  ar = a.arithmetic
  sign, log_det = ar.slogdet(a.entries)
  if sign < 0:
    raise NegativeDeterminantError(ar.to_float(log_det), a.order)
  if sign == 0:
    return 0, ar.number(-math.inf)
  return 1, log_det / 2 + a.scale_log


def log_pfaffian(a: SkewPfaffianMatrix) -> tuple[int, float]:
  """
  log |Pf(A)| of the original (unscaled) matrix, as sqrt|det| of the stored one.

  ## Returns
  ```py
  tuple[int, float] : (1, log|Pf|) or (0, -inf) when singular to working precision
  ```
  """
  sign, value = log_pfaffian_native(a)
  return sign, a.arithmetic.to_float(value)
