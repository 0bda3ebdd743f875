import math
from abc import ABC, abstractmethod
from typing import Any

import numpy as np
from mpmath.ctx_mp import MPContext

from ..special import inc_beta_regularized, log_gamma

__all__ = ['Arithmetic', 'DoubleArithmetic', 'MultiPrecisionArithmetic', 'arithmetic_for']


class Arithmetic(ABC):
  """
  ## Description
  The number system the matrix assembly and the determinant run in.

  The assembly code only uses Python operators on the values returned here, so the
  same recurrence runs in double precision or in `mpmath` multi-precision.
  """

  dps: int | None = None

  @property
  def label(self) -> str:
    return 'double' if self.dps is None else f'mp{self.dps}'

  @abstractmethod
  def number(self, x: float) -> Any:
    ...

  @abstractmethod
  def reg_inc_beta(self, x: Any, a: float, b: float) -> Any:
    """I_x(a, b)"""

  @abstractmethod
  def log_gamma(self, x: float) -> Any:
    ...

  def log_beta(self, a: float, b: float) -> Any:
    return self.log_gamma(a) + self.log_gamma(b) - self.log_gamma(a + b)

  @abstractmethod
  def exp(self, x: Any) -> Any:
    ...

  @abstractmethod
  def log(self, x: Any) -> Any:
    ...

  @abstractmethod
  def pi(self) -> Any:
    ...

  @abstractmethod
  def zeros(self, order: int) -> Any:
    ...

  @abstractmethod
  def slogdet(self, matrix: Any) -> tuple[int, Any]:
    """(sign, log|det|) of a square matrix ; sign is 0 for a singular matrix."""

  def to_float(self, x: Any) -> float:
    return float(x)


class DoubleArithmetic(Arithmetic):
  """IEEE double precision : numpy matrices, LU based `slogdet`."""

  def number(self, x: float) -> float:
    return float(x)

  def reg_inc_beta(self, x: float, a: float, b: float) -> float:
    return inc_beta_regularized(x, a, b)

  def log_gamma(self, x: float) -> float:
    return log_gamma(x)

  def exp(self, x: float) -> float:
    return math.exp(x)

  def log(self, x: float) -> float:
    return math.log(x)

  def pi(self) -> float:
    return math.pi

  def zeros(self, order: int) -> np.ndarray:
    return np.zeros((order, order), dtype=float)

  def slogdet(self, matrix: np.ndarray) -> tuple[int, float]:
    sign, logabs = np.linalg.slogdet(matrix)
    if sign == 0 or not np.isfinite(logabs):
      return 0, -math.inf
    return int(sign), float(logabs)


class MultiPrecisionArithmetic(Arithmetic):
  """
  `mpmath` arithmetic at `dps` decimal digits.

  Each instance owns a private context, so concurrent evaluations at different
  precisions never touch the shared `mpmath.mp` settings.
  """

  def __init__(self, dps: int):
    self.dps = int(dps)
    self.ctx = MPContext()
    self.ctx.dps = self.dps

  def number(self, x: float) -> Any:
    return self.ctx.mpf(x)

  def reg_inc_beta(self, x: Any, a: float, b: float) -> Any:
    ctx = self.ctx
    if x == 0:
      return ctx.zero
    if x == 1:
      return ctx.one
    return ctx.betainc(ctx.mpf(a), ctx.mpf(b), 0, x, regularized=True)

  def log_gamma(self, x: float) -> Any:
    return self.ctx.loggamma(self.ctx.mpf(x))

  def exp(self, x: Any) -> Any:
    return self.ctx.exp(x)

  def log(self, x: Any) -> Any:
    return self.ctx.log(x)

  def pi(self) -> Any:
    return +self.ctx.pi

  def zeros(self, order: int) -> Any:
    return self.ctx.matrix(order, order)

  def slogdet(self, matrix: Any) -> tuple[int, Any]:
    det = self.ctx.det(matrix)
    if det == 0:
      return 0, self.ctx.ninf
    sign = 1 if det > 0 else -1
    return sign, self.ctx.log(abs(det))


_DOUBLE = DoubleArithmetic()


def arithmetic_for(dps: int | None) -> Arithmetic:
  """`DoubleArithmetic` for `dps=None`, a fresh multi-precision context otherwise."""
  if dps is None:
    return _DOUBLE
  return MultiPrecisionArithmetic(dps)
