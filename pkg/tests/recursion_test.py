import math

import pytest
from scipy import integrate, special

from src.exact import script_e
from src.helper import DomainError


def lower_beta(x, a, b):
  return special.betainc(a, b, x) * special.beta(a, b)


def script_e_quad(x, a, b, n):
  # weight 'alg' carries the t^(a-1) singularity at 0
  value, _ = integrate.quad(lambda t: (1 - t)**n * lower_beta(t, b, n + 1),
                            0,
                            x,
                            weight='alg',
                            wvar=(a - 1, 0),
                            epsabs=0,
                            epsrel=1e-12,
                            limit=200)
  return value


# a, b, n : ascents, the diagonal, and reflections (b < a)
CASES = [
  (0.5, 0.5, 0.0),
  (0.5, 1.5, 0.0),
  (0.5, 3.5, 1.5),
  (1.0, 4.0, 0.0),
  (1.0, 2.0, 7.5),
  (2.5, 2.5, 3.0),
  (2.5, 0.5, 3.0),
  (3.0, 1.0, 0.5),
  (4.5, 8.5, 20.0),
  (6.0, 2.0, 2.0),
]


@pytest.mark.parametrize('x', [0.05, 0.3, 0.55, 0.8, 1.0])
@pytest.mark.parametrize('a, b, n', CASES)
def test_script_e_matches_quadrature(x, a, b, n):
  assert script_e(x, a, b, n) == pytest.approx(script_e_quad(x, a, b, n), rel=1e-8, abs=1e-300)


def test_script_e_diagonal_closed_form():
  x, a, n = 0.6, 1.5, 2.0
  assert script_e(x, a, a, n) == pytest.approx(lower_beta(x, a, n + 1)**2 / 2, rel=1e-13)


def test_script_e_reflection_identity():
  x, n = 0.45, 1.25
  lhs = script_e(x, 1.5, 4.5, n) + script_e(x, 4.5, 1.5, n)
  assert lhs == pytest.approx(lower_beta(x, 1.5, n + 1) * lower_beta(x, 4.5, n + 1), rel=1e-12)


def test_script_e_two_dimensional_spot_check():
  # ℰ(x; a, b) = ∫∫_{0<u<t<x} t^(a-1)(1-t)^n u^(b-1)(1-u)^n du dt
  x, a, b, n = 0.7, 2.0, 3.0, 1.0
  value, _ = integrate.dblquad(lambda u, t: t**(a - 1) * (1 - t)**n * u**(b - 1) * (1 - u)**n,
                               0,
                               x,
                               0,
                               lambda t: t,
                               epsabs=1e-14,
                               epsrel=1e-12)
  assert script_e(x, a, b, n) == pytest.approx(value, rel=1e-9)


def test_script_e_at_zero():
  assert script_e(0.0, 1.5, 2.5, 1.0) == 0.0


@pytest.mark.parametrize('x, a, b, n', [(0.5, 1.0, 1.5, 0.0), (0.5, 0.0, 1.0, 0.0), (0.5, 1.0, 2.0, -1.0),
                                        (1.5, 1.0, 2.0, 0.0), (math.nan, 1.0, 2.0, 0.0)])
def test_script_e_domain(x, a, b, n):
  with pytest.raises(DomainError):
    script_e(x, a, b, n)
