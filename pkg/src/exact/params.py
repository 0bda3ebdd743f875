import math
from dataclasses import dataclass, field as dc_field

from ..helper.auto_numbered import LabeledEnum
from ..helper.errors import DomainError

__all__ = ['FieldKind', 'BetaParams', 'ManovaDims', 'manova_to_beta', 'beta_to_manova']


class FieldKind(LabeledEnum):
  """Real or complex Gaussian ensemble behind the multivariate beta matrix."""

  REAL = ('real')
  COMPLEX = ('complex')


def _as_count(name: str, value: float) -> int:
  if isinstance(value, bool) or not math.isfinite(value) or value != int(value):
    raise DomainError(f'{name} must be a positive integer, got {value}')
  if value < 1:
    raise DomainError(f'{name} must be a positive integer, got {value}')
  return int(value)


@dataclass(frozen=True)
class BetaParams:
  """
  ## Description
  The triple (s, m, n) indexing the null law of the eigenvalues of a multivariate beta
  matrix, real or complex. Hashable, so it keys the per-parameter caches.

  ## Invariants
  s >= 1 integer ; m > -1 ; n > -1
  """

  s: int
  m: float
  n: float
  field: FieldKind = FieldKind.REAL

  def __post_init__(self):
    object.__setattr__(self, 's', _as_count('s', self.s))
    object.__setattr__(self, 'field', FieldKind.from_label(self.field))
    for name in ('m', 'n'):
      value = getattr(self, name)
      if isinstance(value, bool) or not math.isfinite(value) or value <= -1:
        raise DomainError(f'{name} must be a finite real > -1, got {value}')
      object.__setattr__(self, name, float(value))

  @property
  def is_real(self) -> bool:
    return self.field is FieldKind.REAL

  @property
  def order(self) -> int:
    """Dimension of the matrix whose determinant gives the cdf."""
    if self.is_real and self.s % 2 == 1:
      return self.s + 1
    return self.s

  def echo(self) -> dict[str, float | int | str]:
    return {'s': self.s, 'm': self.m, 'n': self.n, 'field': self.field.label}


@dataclass(frozen=True)
class ManovaDims:
  """
  ## Description
  Raw MANOVA dimensions : X is p x m_dim, Y is p x n_dim, Θ1 the largest eigenvalue
  of (XXᵀ + YYᵀ)⁻¹ YYᵀ.

  With `strict=False` only m_dim, n_dim > p - 1 is required, which is what a
  (s, m, n) triple with m, n > -1 maps back to.
  """

  p: int
  m_dim: float
  n_dim: float
  strict: bool = dc_field(default=True, compare=False, repr=False)

  def __post_init__(self):
    object.__setattr__(self, 'p', _as_count('p', self.p))
    for name in ('m_dim', 'n_dim'):
      value = getattr(self, name)
      if isinstance(value, bool) or not math.isfinite(value):
        raise DomainError(f'{name} must be finite, got {value}')
      if self.strict and value < self.p:
        raise DomainError(f'{name} must be >= p={self.p}, got {value}')
      if value <= self.p - 1:
        raise DomainError(f'{name} must be > p - 1 = {self.p - 1}, got {value}')
      object.__setattr__(self, name, float(value))

  @property
  def is_integral(self) -> bool:
    return self.m_dim == int(self.m_dim) and self.n_dim == int(self.n_dim)


def manova_to_beta(d: ManovaDims, field_kind: FieldKind | str = FieldKind.REAL) -> BetaParams:
  """
  Map MANOVA dimensions to the beta law parameters.

  Real ensemble : s = p, m = (n_dim - p - 1) / 2, n = (m_dim - p - 1) / 2.\\
  Complex ensemble : s = p, m = n_dim - p, n = m_dim - p.

  ## Example
  ```py
  >>> manova_to_beta(ManovaDims(5, 206, 5))
  BetaParams(s=5, m=-0.5, n=100.0, field=<FieldKind.REAL: 1>)
  ```
  """
  field_kind = FieldKind.from_label(field_kind)
  if field_kind is FieldKind.REAL:
    return BetaParams(d.p, (d.n_dim - d.p - 1) / 2, (d.m_dim - d.p - 1) / 2, field_kind)
  return BetaParams(d.p, d.n_dim - d.p, d.m_dim - d.p, field_kind)


def beta_to_manova(params: BetaParams) -> ManovaDims:
  """Inverse of `manova_to_beta` ; the dimensions may come out non-integral."""
  if params.is_real:
    return ManovaDims(params.s, 2 * params.n + params.s + 1, 2 * params.m + params.s + 1, strict=False)
  return ManovaDims(params.s, params.n + params.s, params.m + params.s, strict=False)
