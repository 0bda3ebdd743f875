import math

import numpy as np
import pytest
from scipy import integrate, special

from src.exact import (BetaParams, exact_cdf, exact_quantile, log_norm_constant, normalization_residual,
                       precision_plan)
from src.exact.arithmetic import MultiPrecisionArithmetic
from src.exact.distribution import _ladder
from src.helper import DomainError, PrecisionEscalationError, get_settings


def density_ratio(params: BetaParams, theta: float) -> float:
  """F(θ) for s = 2 straight from the joint eigenvalue density, by double quadrature."""
  m, n = params.m, params.n
  power = 1 if params.is_real else 2

  def f(y, x):
    return (x * y)**m * ((1 - x) * (1 - y))**n * abs(x - y)**power

  def mass(upper):
    # ordered region x < y, the density is symmetric
    value, _ = integrate.dblquad(f, 0, upper, lambda x: x, upper, epsabs=0, epsrel=1e-11)
    return value

  return mass(theta) / mass(1.0)


@pytest.mark.parametrize('field', ['real', 'complex'])
def test_boundaries(field):
  params = BetaParams(3, 0.5, 2, field)
  assert exact_cdf(params, 0.0).value == 0.0
  assert exact_cdf(params, -0.3).value == 0.0
  assert exact_cdf(params, 1.0).value == 1.0
  assert exact_cdf(params, 1.7).value == 1.0


def test_nan_theta():
  with pytest.raises(DomainError):
    exact_cdf(BetaParams(2, 0, 0), math.nan)


def test_uniform_single_root():
  assert exact_cdf(BetaParams(1, 0, 0), 0.25).value == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize('field', ['real', 'complex'])
def test_single_root_is_beta(field):
  params = BetaParams(1, 0.5, 3.5, field)
  assert exact_cdf(params, 0.3).value == pytest.approx(special.betainc(1.5, 4.5, 0.3), rel=1e-12)


def test_two_roots_uniform_case():
  assert log_norm_constant(BetaParams(2, 0, 0)) == pytest.approx(math.log(6), rel=1e-14)
  for theta in (0.1, 0.5, 0.9):
    assert exact_cdf(BetaParams(2, 0, 0), theta).value == pytest.approx(theta**3, rel=1e-12)


@pytest.mark.parametrize('field', ['real', 'complex'])
@pytest.mark.parametrize('m, n, theta', [(0.5, 1.0, 0.35), (1.0, 2.0, 0.6), (-0.5, 4.0, 0.2)])
def test_two_roots_against_density(field, m, n, theta):
  params = BetaParams(2, m, n, field)
  assert exact_cdf(params, theta).value == pytest.approx(density_ratio(params, theta), rel=1e-6)


@pytest.mark.parametrize('field', ['real', 'complex'])
@pytest.mark.parametrize('s', [2, 3, 4, 5, 6, 9])
@pytest.mark.parametrize('m, n', [(-0.5, 0.0), (0.0, 5.0), (2.0, 20.0), (-0.5, 100.0)])
def test_normalization_residual(field, s, m, n):
  assert normalization_residual(BetaParams(s, m, n, field)) <= 1e-8


@pytest.mark.parametrize('params', [BetaParams(5, -0.5, 100), BetaParams(8, 1.5, 3), BetaParams(4, 2, 7, 'complex')])
def test_monotone_in_theta(params):
  values = [exact_cdf(params, theta).value for theta in np.linspace(0, 1, 41)]
  assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
  assert all(0 <= v <= 1 for v in values)


def test_known_percentile_point():
  # s = 5, m = -1/2, n = 1000
  value = exact_cdf(BetaParams(5, -0.5, 1000), 0.008501).value
  assert value == pytest.approx(0.80, abs=1e-3)
  assert exact_quantile(BetaParams(5, -0.5, 1000), 0.80) == pytest.approx(0.008501, abs=1e-5)


@pytest.mark.parametrize('params', [BetaParams(3, 0.5, 2), BetaParams(6, -0.5, 30), BetaParams(3, 1, 4, 'complex')])
@pytest.mark.parametrize('alpha', [0.05, 0.5, 0.95, 0.99])
def test_quantile_round_trip(params, alpha):
  theta = exact_quantile(params, alpha)
  assert 0 < theta < 1
  assert exact_cdf(params, theta).value == pytest.approx(alpha, abs=1e-8)


def test_quantile_of_uniform():
  assert exact_quantile(BetaParams(1, 0, 0), 0.5) == pytest.approx(0.5, abs=1e-10)


@pytest.mark.parametrize('alpha', [0, 1, -0.1, 1.2])
def test_quantile_domain(alpha):
  with pytest.raises(DomainError):
    exact_quantile(BetaParams(3, 0, 0), alpha)


def test_precision_plan_is_cached():
  params = BetaParams(4, 0.5, 3)
  assert precision_plan(params) is precision_plan(BetaParams(4, 0.5, 3.0))


def test_forced_escalation_agrees_with_double(fresh_settings):
  params, theta = BetaParams(3, 0.5, 2), 0.55
  double = exact_cdf(params, theta).value
  fresh_settings.setenv('ROY_RESIDUAL_TOL', '-1')
  get_settings.cache_clear()
  precision_plan.cache_clear()
  plan = precision_plan(params)
  assert plan.dps is not None and plan.dps >= 30
  assert plan.residual <= 1e-20
  result = exact_cdf(params, theta)
  assert result.diagnostics.precision == f'mp{plan.dps}'
  assert result.value == pytest.approx(double, rel=1e-10)


def test_exhausted_ladder(fresh_settings):
  fresh_settings.setenv('ROY_RESIDUAL_TOL', '-1')
  fresh_settings.setenv('ROY_ESCALATED_TOL', '-1')
  fresh_settings.setenv('ROY_MAX_DPS', '40')
  with pytest.raises(PrecisionEscalationError) as info:
    precision_plan(BetaParams(3, 0.5, 2))
  assert info.value.dps == 40


@pytest.mark.slow
def test_large_s_percentile():
  params = BetaParams(200, -0.5, 149.5)
  assert exact_quantile(params, 0.99) == pytest.approx(0.827760, abs=1e-5)


@pytest.mark.slow
def test_medium_s_case():
  result = exact_cdf(BetaParams(54, -0.5, 22.5), 0.92)
  assert 0 <= result.value <= 1
  assert result.diagnostics.normalization_residual <= 1e-8


def test_ladder_rungs():
  assert list(_ladder(4000)) == [30, 60, 120, 240, 480, 960, 1920, 3840, 4000]
  assert list(_ladder(40)) == [30, 40]
  assert list(_ladder(20)) == [20]
  assert list(_ladder(4000, start=3000)) == [3000, 4000]


def test_ladder_below_floor_still_runs(fresh_settings):
  fresh_settings.setenv('ROY_RESIDUAL_TOL', '-1')
  fresh_settings.setenv('ROY_MAX_DPS', '20')
  plan = precision_plan(BetaParams(3, 0.5, 2))
  assert plan.dps == 20
  assert plan.attempts == 2


NORMALIZATION_M = [-0.5, 0.0, 3.0, 22.5]
NORMALIZATION_N = [0.0, 0.5, 100.0, 149.5]


@pytest.mark.parametrize('s', [1, 2, 3, 4, 5, 6, 7, 8, 15])
@pytest.mark.parametrize('m', NORMALIZATION_M)
@pytest.mark.parametrize('n', NORMALIZATION_N)
def test_normalization_grid(s, m, n):
  assert normalization_residual(BetaParams(s, m, n)) <= 1e-8


@pytest.mark.slow
@pytest.mark.parametrize('s', [54, 100, 200])
@pytest.mark.parametrize('m', NORMALIZATION_M)
@pytest.mark.parametrize('n', NORMALIZATION_N)
def test_normalization_grid_large_s(s, m, n):
  plan = precision_plan(BetaParams(s, m, n))
  assert plan.residual <= (1e-8 if plan.dps is None else 1e-10)


@pytest.mark.slow
def test_medium_s_plan_stays_low():
  plan = precision_plan(BetaParams(54, -0.5, 22.5))
  assert plan.dps is None or plan.dps <= 120
  assert plan.residual <= 1e-10


@pytest.mark.slow
def test_large_s_plan_fits_the_ceiling():
  plan = precision_plan(BetaParams(200, -0.5, 149.5))
  assert plan.dps is None or plan.dps <= 480
  assert plan.residual <= 1e-10


def test_multi_precision_pi_is_not_a_double():
  ar = MultiPrecisionArithmetic(60)
  digits = ar.ctx.mpf('3.14159265358979323846264338327950288419716939937510582097494459')
  assert abs(ar.pi() - digits) < ar.ctx.mpf(10)**-55
