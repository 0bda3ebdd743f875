import math
import logging
from dataclasses import dataclass

from scipy.special import expit, logit

from ..helper.constants import TW1_ALPHA, TW1_DELTA, TW1_K
from ..helper.errors import DomainError
from ..exact.params import ManovaDims
from ..special import AccuracySpec, reg_inc_gamma_p, reg_inc_gamma_p_inv

__all__ = [
  'ShiftedGammaConstants',
  'TW1',
  'TwApproxParams',
  'tw_params',
  'tw1_cdf_approx',
  'tw1_quantile_approx',
  'approx_cdf',
  'approx_quantile',
]

log = logging.getLogger('roy.approx')


@dataclass(frozen=True)
class ShiftedGammaConstants:
  """Shifted gamma surrogate of TW1 : TW1 ≈ δ Gamma(k, 1) - α, moment matched."""

  k: float = TW1_K
  delta: float = TW1_DELTA
  alpha: float = TW1_ALPHA


TW1 = ShiftedGammaConstants()


@dataclass(frozen=True)
class TwApproxParams:
  """
  ## Description
  Centering and scaling of logit(Θ1) towards TW1, with the two angles they come from.

  `warnings` lists the reasons the approximation may be poor (it is stated for
  m >= -1/2, n >= 0 and large s) ; values are computed regardless.
  """

  mu: float
  sigma: float
  gamma_angle: float
  phi_angle: float
  warnings: tuple[str, ...] = ()


def tw_params(d: ManovaDims) -> TwApproxParams:
  """
  μ, σ, γ, φ of the logit Tracy-Widom limit.

  ```
  γ = arccos((m_dim + n_dim - 2p) / (m_dim + n_dim - 1))
  φ = arccos((m_dim - n_dim) / (m_dim + n_dim - 1))
  μ = 2 ln tan((γ + φ) / 2)
  σ³ = 16 / ((m_dim + n_dim - 1)² sin²(γ + φ) sin γ sin φ)
  ```

  ## Raises
  ```py
  DomainError : arccos arguments outside [-1, 1], or a non-positive σ³ denominator
  ```
  """
  p, mm, nn = d.p, d.m_dim, d.n_dim
  total = mm + nn - 1
  if total <= 0:
    raise DomainError(f'm_dim + n_dim - 1 must be positive, got {total}')
  cos_gamma = (mm + nn - 2 * p) / total
  cos_phi = (mm - nn) / total
  for name, value in (('gamma', cos_gamma), ('phi', cos_phi)):
    if not -1 <= value <= 1:
      raise DomainError(f'arccos argument of {name} outside [-1, 1]: {value}')
  gamma_angle = math.acos(cos_gamma)
  phi_angle = math.acos(cos_phi)

  half = (gamma_angle + phi_angle) / 2
  denom = total**2 * math.sin(gamma_angle + phi_angle)**2 * math.sin(gamma_angle) * math.sin(phi_angle)
  if not denom > 0 or not 0 < half < math.pi / 2:
    raise DomainError(f'degenerate Tracy-Widom scaling for p={p}, m_dim={mm}, n_dim={nn}')
  sigma = (16 / denom)**(1 / 3)
  mu = 2 * math.log(math.tan(half))

  warnings = []
  m, n = (nn - p - 1) / 2, (mm - p - 1) / 2
  if m < -0.5:
    warnings.append(f'm={m:g} below -1/2, outside the stated validity of the approximation')
  if n < 0:
    warnings.append(f'n={n:g} below 0, outside the stated validity of the approximation')
  log.debug('p=%d m_dim=%g n_dim=%g : mu=%.6g sigma=%.6g', p, mm, nn, mu, sigma)
  return TwApproxParams(mu, sigma, gamma_angle, phi_angle, tuple(warnings))


def tw1_cdf_approx(x: float, constants: ShiftedGammaConstants = TW1) -> float:
  """F1(x) ≈ P(k, (x + α) / δ), 0 for x <= -α."""
  z = (x + constants.alpha) / constants.delta
  if z <= 0:
    return 0.0
  return reg_inc_gamma_p(constants.k, z)


def tw1_quantile_approx(y: float,
                        constants: ShiftedGammaConstants = TW1,
                        accuracy: AccuracySpec | None = None) -> float:
  """F1⁻¹(y) ≈ δ P⁻¹(k, y) - α."""
  if not 0 < y < 1:
    raise DomainError(f'probability level must be in (0, 1), got {y}')
  return constants.delta * reg_inc_gamma_p_inv(constants.k, y, accuracy) - constants.alpha


def approx_cdf(d: ManovaDims, theta: float) -> float:
  """
  Tracy-Widom approximation of the cdf of Θ1 :
  P(k, (logit θ - μ + σα) / (σδ)).
  """
  if not 0 < theta < 1:
    raise DomainError(f'theta must be strictly inside (0, 1), got {theta}')
  tw = tw_params(d)
  return tw1_cdf_approx((float(logit(theta)) - tw.mu) / tw.sigma)


def approx_quantile(d: ManovaDims, y: float) -> float:
  """
  Closed-form approximate percentile :
  θ = expit(σ (δ P⁻¹(k, y) - α) + μ).

  ## Example
  ```py
  >>> approx_quantile(ManovaDims(5, 2006, 5), 0.80)  # s=5, m=-1/2, n=1000
  0.008609...
  ```
  """
  tw = tw_params(d)
  return float(expit(tw.sigma * tw1_quantile_approx(y) + tw.mu))
