import math
from dataclasses import dataclass, field, asdict
from typing import Any

__all__ = ['OutputRecord', 'RECORD_COLUMNS', 'error_record']

# column order of csv output ; alpha or theta, whichever the record carries
RECORD_COLUMNS = [
  's', 'm', 'n', 'field', 'alpha', 'theta', 'method', 'value', 'normalization_residual', 'elapsed_seconds',
  'precision', 'warnings'
]


@dataclass
class OutputRecord:
  """
  ## Description
  One evaluated cell : the full parameter echo, the method tag and the result.

  `alpha` is set for quantile records, `theta` for cdf records ;
  `normalization_residual` is None for the approximation, which has no self-check.
  """

  s: int
  m: float
  n: float
  field: str
  method: str
  value: float | None
  normalization_residual: float | None = None
  elapsed_seconds: float = 0.0
  precision: str | None = None
  warnings: list[str] = field(default_factory=list)
  alpha: float | None = None
  theta: float | None = None
  error: str | None = None

  def to_dict(self) -> dict[str, Any]:
    data = asdict(self)
    ordered = {key: data[key] for key in RECORD_COLUMNS if key in data}
    if self.alpha is None:
      del ordered['alpha']
    if self.theta is None:
      del ordered['theta']
    if self.error is not None:
      ordered['error'] = self.error
    return ordered


def _clean(value: Any) -> Any:
  if isinstance(value, float) and not math.isfinite(value):
    return None
  return value


def error_record(err: BaseException, echo: dict[str, Any] | None = None) -> dict[str, Any]:
  """Machine-readable error record : kind, message, exit code and whatever parameters were given."""
  record = {key: _clean(value) for key, value in (echo or {}).items() if value is not None}
  record['error'] = str(err)
  record['kind'] = err.__class__.__name__
  record['exit_code'] = getattr(err, 'exit_code', 1)
  return record
