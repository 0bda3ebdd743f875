import numpy as np
import pytest
from scipy import stats

from src.exact import BetaParams, FieldKind, ManovaDims
from src.helper import DomainError
from src.montecarlo import EmpiricalCdf, McConfig, compare_with_exact, empirical_cdf, sample_theta1


def test_fixed_seed_is_deterministic():
  cfg = McConfig(ManovaDims(3, 8, 5), replicates=300, seed=42)
  first = empirical_cdf(cfg)
  second = empirical_cdf(cfg)
  np.testing.assert_array_equal(first.sorted_samples, second.sorted_samples)
  other = empirical_cdf(McConfig(ManovaDims(3, 8, 5), replicates=300, seed=43))
  assert not np.array_equal(first.sorted_samples, other.sorted_samples)


def test_replicate_draw_matches_batch():
  cfg = McConfig(ManovaDims(2, 6, 4), replicates=5, seed=9)
  singles = sorted(sample_theta1(cfg, r) for r in range(5))
  np.testing.assert_allclose(empirical_cdf(cfg).sorted_samples, singles, rtol=1e-12)


def test_workers_do_not_change_the_sample():
  cfg = McConfig(ManovaDims(2, 5, 4), replicates=5000, seed=3)
  np.testing.assert_array_equal(empirical_cdf(cfg, workers=1).sorted_samples,
                                empirical_cdf(cfg, workers=2).sorted_samples)


@pytest.mark.parametrize('field, a, b', [(FieldKind.REAL, 2.5, 3.5), (FieldKind.COMPLEX, 5, 7)])
def test_single_root_is_beta_distributed(field, a, b):
  # p = 1, n_dim = 5, m_dim = 7 : Beta(n_dim/2, m_dim/2) real, Beta(n_dim, m_dim) complex
  ecdf = empirical_cdf(McConfig(ManovaDims(1, 7, 5), field=field, replicates=4000, seed=11))
  assert np.all((ecdf.sorted_samples > 0) & (ecdf.sorted_samples < 1))
  assert stats.kstest(ecdf.sorted_samples, 'beta', args=(a, b)).pvalue > 1e-3


@pytest.mark.parametrize('field', [FieldKind.REAL, FieldKind.COMPLEX])
def test_two_roots_against_exact(field):
  cfg = McConfig(ManovaDims(2, 10, 6), field=field, replicates=20_000, seed=5)
  rows = compare_with_exact(empirical_cdf(cfg), cfg.params)
  assert len(rows) == 9
  assert max(row.deviation for row in rows) < 0.02


def test_empirical_cdf_evaluate_and_quantile():
  ecdf = EmpiricalCdf(sorted_samples=np.array([0.1, 0.2, 0.3, 0.4]), replicates=4, seed=0)
  assert ecdf.evaluate(0.05) == 0.0
  assert ecdf.evaluate(0.2) == 0.5
  assert ecdf.evaluate(0.9) == 1.0
  assert ecdf.quantile(0.5) == pytest.approx(0.25)


@pytest.mark.parametrize('kwargs', [
  {'dims': ManovaDims(3, 7.5, 5, strict=False)},
  {'dims': ManovaDims(3, 2.5, 5, strict=False)},
  {'dims': ManovaDims(3, 8, 5), 'replicates': 0},
  {'dims': ManovaDims(3, 8, 5), 'seed': -1},
  {'dims': ManovaDims(3, 8, 5), 'seed': 2**64},
])
def test_config_domain(kwargs):
  with pytest.raises(DomainError):
    McConfig(**kwargs)


def test_config_params():
  assert McConfig(ManovaDims(5, 206, 5)).params == BetaParams(5, -0.5, 100)


@pytest.mark.slow
def test_comparison_case_deviation_at_1e5_replicates():
  cfg = McConfig(ManovaDims(5, 206, 5), replicates=100_000, seed=2024)
  rows = compare_with_exact(empirical_cdf(cfg), cfg.params)
  assert max(row.deviation for row in rows) <= 0.01


@pytest.mark.slow
def test_single_root_ks_statistic_at_1e5_replicates():
  ecdf = empirical_cdf(McConfig(ManovaDims(1, 9, 4), replicates=100_000, seed=17))
  # 1% critical value of the Kolmogorov-Smirnov statistic
  assert stats.kstest(ecdf.sorted_samples, 'beta', args=(2, 4.5)).statistic < 1.628 / np.sqrt(100_000)


@pytest.mark.slow
@pytest.mark.parametrize('field', [FieldKind.REAL, FieldKind.COMPLEX])
def test_two_roots_deviation_at_1e5_replicates(field):
  cfg = McConfig(ManovaDims(2, 6, 4), field=field, replicates=100_000, seed=31)
  rows = compare_with_exact(empirical_cdf(cfg), cfg.params)
  assert max(row.deviation for row in rows) <= 0.01
