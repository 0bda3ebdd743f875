import os
from dataclasses import dataclass
from functools import lru_cache

from .constants import DEFAULT_MAX_ITER, DEFAULT_REL_TOL

__all__ = ['Settings', 'get_settings']


def _env_bool(name: str, default: str = 'False') -> bool:
  return os.getenv(name, default).strip().lower() in {'true', '1', 'yes'}


@dataclass(frozen=True)
class Settings:
  """
  ## Description
  Runtime knobs read from the environment (or a `.env` file loaded by the entry script).
  """

  rel_tol: float = DEFAULT_REL_TOL
  max_iter: int = DEFAULT_MAX_ITER
  residual_tol: float = 1e-8
  escalated_tol: float = 1e-10
  max_dps: int = 4000
  workers: int = 1
  log_file: str | None = None
  debug: bool = False

  @classmethod
  def from_env(cls) -> 'Settings':
    return cls(
      rel_tol=float(os.getenv('ROY_REL_TOL', str(DEFAULT_REL_TOL))),
      max_iter=int(os.getenv('ROY_MAX_ITER', str(DEFAULT_MAX_ITER))),
      residual_tol=float(os.getenv('ROY_RESIDUAL_TOL', '1e-8')),
      escalated_tol=float(os.getenv('ROY_ESCALATED_TOL', '1e-10')),
      max_dps=int(os.getenv('ROY_MAX_DPS', '4000')),
      workers=max(1, int(os.getenv('ROY_WORKERS', '1'))),
      log_file=os.getenv('ROY_LOG_FILE') or None,
      debug=_env_bool('DEBUG'),
    )


@lru_cache(maxsize=None)
def get_settings() -> Settings:
  """Settings of the current process (cached ; call `get_settings.cache_clear()` after changing env)."""
  return Settings.from_env()
