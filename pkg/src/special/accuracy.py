from dataclasses import dataclass

from ..helper.config import get_settings
from ..helper.constants import DEFAULT_MAX_ITER, DEFAULT_REL_TOL
from ..helper.errors import DomainError

__all__ = ['AccuracySpec', 'default_accuracy']


@dataclass(frozen=True)
class AccuracySpec:
  """
  ## Description
  Stopping rule of the iterative special functions.
  """

  rel_tol: float = DEFAULT_REL_TOL
  max_iter: int = DEFAULT_MAX_ITER

  def __post_init__(self):
    if not self.rel_tol > 0:
      raise DomainError(f'rel_tol must be positive, got {self.rel_tol}')
    if self.max_iter < 1:
      raise DomainError(f'max_iter must be at least 1, got {self.max_iter}')


def default_accuracy() -> AccuracySpec:
  settings = get_settings()
  return AccuracySpec(rel_tol=settings.rel_tol, max_iter=settings.max_iter)
