import math

import numpy as np
import pytest
from scipy import integrate, special

from src.exact import (BetaParams, MultiPrecisionArithmetic, SkewPfaffianMatrix, arithmetic_for,
                       build_pfaffian_matrix, log_pfaffian)
from src.helper import DomainError, NegativeDeterminantError


def pfaffian_expansion(a: np.ndarray) -> float:
  """Pf by expansion along the first row."""
  order = a.shape[0]
  if order == 0:
    return 1.0
  total = 0.0
  for j in range(1, order):
    rest = [k for k in range(order) if k not in (0, j)]
    total += (-1)**(j + 1) * a[0, j] * pfaffian_expansion(a[np.ix_(rest, rest)])
  return total


def skew(entries: np.ndarray) -> SkewPfaffianMatrix:
  order = entries.shape[0]
  ar = arithmetic_for(None)
  return SkewPfaffianMatrix(order=order, entries=entries, log_scales=[0.0] * order, arithmetic=ar)


def entry_quad(theta, m, n, i, j):
  """a_ij = ∫∫_[0,θ]² sgn(y - x) x^(m+i-1) (1-x)^n y^(m+j-1) (1-y)^n dx dy"""

  def lower(t, k):
    return special.betainc(m + k, n + 1, t) * special.beta(m + k, n + 1)

  value, _ = integrate.quad(lambda y: y**(m + j - 1) * (1 - y)**n * (2 * lower(y, i) - lower(theta, i)),
                            0,
                            theta,
                            epsabs=0,
                            epsrel=1e-12,
                            limit=200)
  return value


def test_four_by_four_closed_form():
  rng = np.random.default_rng(4)
  upper = np.triu(rng.normal(size=(4, 4)), 1)
  a = upper - upper.T
  pf = a[0, 1] * a[2, 3] - a[0, 2] * a[1, 3] + a[0, 3] * a[1, 2]
  sign, value = log_pfaffian(skew(a))
  assert sign == 1
  assert value == pytest.approx(math.log(abs(pf)), rel=1e-12)


@pytest.mark.parametrize('order', [2, 4, 6, 8])
def test_random_skew_against_expansion(order):
  rng = np.random.default_rng(order)
  upper = np.triu(rng.uniform(-1, 1, size=(order, order)), 1)
  a = upper - upper.T
  _, value = log_pfaffian(skew(a))
  assert value == pytest.approx(math.log(abs(pfaffian_expansion(a))), rel=1e-10)


def test_negative_determinant_is_reported():
  with pytest.raises(NegativeDeterminantError):
    log_pfaffian(skew(np.diag([-1.0, 1.0])))


def test_zero_matrix_at_theta_zero():
  a = build_pfaffian_matrix(BetaParams(4, 0.5, 1), 0.0)
  assert np.all(a.to_numpy() == 0)
  assert log_pfaffian(a) == (0, -math.inf)


def test_two_by_two_uniform_case():
  # s = 2, m = n = 0 : a_12 = θ³ / 6
  theta = 0.4
  a = build_pfaffian_matrix(BetaParams(2, 0, 0), theta)
  assert a.order == 2
  assert a.unscaled()[0, 1] == pytest.approx(theta**3 / 6, rel=1e-13)
  assert log_pfaffian(a)[1] == pytest.approx(math.log(theta**3 / 6), rel=1e-13)


@pytest.mark.parametrize('s, m, n, theta', [(2, 0.5, 1.5, 0.6), (3, -0.5, 2.0, 0.45), (4, 1.0, 0.0, 0.8),
                                            (5, 0.0, 3.5, 0.3)])
def test_entries_match_quadrature(s, m, n, theta):
  a = build_pfaffian_matrix(BetaParams(s, m, n), theta)
  unscaled = a.unscaled()
  for i in range(1, s + 1):
    for j in range(i + 1, s + 1):
      assert unscaled[i - 1, j - 1] == pytest.approx(entry_quad(theta, m, n, i, j), rel=1e-8)
  np.testing.assert_allclose(unscaled, -unscaled.T, atol=1e-300)


def test_odd_border_column():
  s, m, n, theta = 3, 0.5, 2.0, 0.7
  a = build_pfaffian_matrix(BetaParams(s, m, n), theta)
  assert a.order == 4
  unscaled = a.unscaled()
  for i in range(1, s + 1):
    expected = special.betainc(m + i, n + 1, theta) * special.beta(m + i, n + 1)
    assert unscaled[i - 1, s] == pytest.approx(expected, rel=1e-12)
    assert unscaled[s, i - 1] == pytest.approx(-expected, rel=1e-12)
  assert unscaled[s, s] == 0


def test_multi_precision_agrees_with_double():
  params, theta = BetaParams(4, 0.5, 2.0), 0.7
  _, double = log_pfaffian(build_pfaffian_matrix(params, theta))
  _, multi = log_pfaffian(build_pfaffian_matrix(params, theta, MultiPrecisionArithmetic(50)))
  assert multi == pytest.approx(double, rel=1e-10)


def test_complex_field_has_no_skew_matrix():
  with pytest.raises(DomainError):
    build_pfaffian_matrix(BetaParams(3, 1, 1, 'complex'), 0.5)
