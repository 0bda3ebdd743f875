__all__ = [
  'RoyError',
  'DomainError',
  'ConvergenceError',
  'NegativeDeterminantError',
  'PrecisionEscalationError',
]


class RoyError(Exception):
  """Base class of every error raised by this package."""

  exit_code = 1


class DomainError(RoyError, ValueError):
  """A parameter lies outside the domain of the operation."""

  exit_code = 2


class ConvergenceError(RoyError, ArithmeticError):
  """An iterative method ran out of iterations."""

  exit_code = 3


class NegativeDeterminantError(ConvergenceError):
  """
  The determinant of a skew-symmetric matrix came out negative.

  A real skew-symmetric matrix has det = Pf² >= 0, so this only happens through
  catastrophic cancellation ; callers escalate precision.
  """

  def __init__(self, log_abs: float, order: int) -> None:
    super().__init__(f'negative determinant (log|det|={log_abs:.6g}) for a skew matrix of order {order}')
    self.log_abs = log_abs
    self.order = order


class PrecisionEscalationError(ConvergenceError):
  """The multi-precision ladder was exhausted without meeting the normalization tolerance."""

  def __init__(self, residual: float, dps: int | None) -> None:
    super().__init__(f'normalization residual {residual:.3e} still too large at dps={dps}')
    self.residual = residual
    self.dps = dps
