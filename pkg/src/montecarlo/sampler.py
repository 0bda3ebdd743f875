import logging
from dataclasses import dataclass
from functools import partial

import numpy as np

from ..helper.errors import DomainError, ConvergenceError
from ..exact.params import BetaParams, FieldKind, ManovaDims, manova_to_beta
from ..exact.distribution import exact_cdf
from ..tasks.runner import run_cells

__all__ = [
  'McConfig',
  'EmpiricalCdf',
  'DecileComparison',
  'sample_theta1',
  'empirical_cdf',
  'compare_with_exact',
]

log = logging.getLogger('roy.montecarlo')

# replicates per linear algebra batch
CHUNK = 2048
# redraws allowed for a replicate whose pencil is not positive definite
MAX_REDRAWS = 100
DECILES = tuple(k / 10 for k in range(1, 10))


@dataclass(frozen=True)
class McConfig:
  """
  ## Description
  One Monte Carlo experiment : dimensions of X (p x m_dim) and Y (p x n_dim), the
  Gaussian ensemble, the number of replicates and the 64-bit seed.
  """

  dims: ManovaDims
  field: FieldKind = FieldKind.REAL
  replicates: int = 10_000
  seed: int = 0

  def __post_init__(self):
    object.__setattr__(self, 'field', FieldKind.from_label(self.field))
    if not self.dims.is_integral or self.dims.m_dim < self.dims.p or self.dims.n_dim < self.dims.p:
      raise DomainError(f'sampling needs integral m_dim, n_dim >= p, got {self.dims}')
    if int(self.replicates) != self.replicates or self.replicates < 1:
      raise DomainError(f'replicates must be a positive integer, got {self.replicates}')
    if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
      raise DomainError(f'seed must be an unsigned 64-bit integer, got {self.seed}')

  @property
  def params(self) -> BetaParams:
    return manova_to_beta(self.dims, self.field)


@dataclass(frozen=True)
class EmpiricalCdf:
  """Sorted sample of Θ1 ; evaluates as rank / replicates."""

  sorted_samples: np.ndarray
  replicates: int
  seed: int
  redraws: int = 0

  def evaluate(self, theta: float | np.ndarray) -> float | np.ndarray:
    ranks = np.searchsorted(self.sorted_samples, theta, side='right')
    return ranks / self.replicates

  def quantile(self, q: float) -> float:
    return float(np.quantile(self.sorted_samples, q))


@dataclass(frozen=True)
class DecileComparison:
  decile: float
  theta: float
  empirical: float
  exact: float

  @property
  def deviation(self) -> float:
    return abs(self.empirical - self.exact)


def _substream(seed: int, replicate: int) -> np.random.Generator:
  # counter based : replicate r starts 2^128 blocks after replicate r - 1
  return np.random.Generator(np.random.Philox(key=seed, counter=replicate << 128))


def _gaussian(rng: np.random.Generator, shape: tuple[int, int], field: FieldKind) -> np.ndarray:
  if field is FieldKind.REAL:
    return rng.standard_normal(shape)
  return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _draw_pencil(cfg: McConfig, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
  d = cfg.dims
  x = _gaussian(rng, (d.p, int(d.m_dim)), cfg.field)
  y = _gaussian(rng, (d.p, int(d.n_dim)), cfg.field)
  return x @ x.conj().T, y @ y.conj().T


def _largest_root(a: np.ndarray, b: np.ndarray) -> np.ndarray:
  """
  Largest eigenvalue of (A + B)⁻¹ B through A + B = L Lᴴ and the Hermitian
  L⁻¹ B L⁻ᴴ ; works on stacks of matrices.
  """
  lower = np.linalg.cholesky(a + b)
  z = np.linalg.solve(lower, b)
  w = np.linalg.solve(lower, np.conj(np.swapaxes(z, -1, -2)))
  w = np.conj(np.swapaxes(w, -1, -2))
  return np.linalg.eigvalsh(w)[..., -1]


def _sample_one(cfg: McConfig, replicate: int) -> tuple[float, int]:
  """Θ1 of one replicate and the number of redraws it needed."""
  rng = _substream(cfg.seed, replicate)
  for redraws in range(MAX_REDRAWS):
    a, b = _draw_pencil(cfg, rng)
    try:
      return float(_largest_root(a, b)), redraws
    except np.linalg.LinAlgError:
      log.debug('replicate %d: A + B not positive definite, redrawing', replicate)
  raise ConvergenceError(f'replicate {replicate} failed {MAX_REDRAWS} factorizations')


def sample_theta1(cfg: McConfig, replicate: int = 0) -> float:
  """
  One draw of Θ1 from the null MANOVA model, on the replicate's own substream.

  ## Parameters
  ```py
  >>> cfg : McConfig
  ```
  experiment configuration
  ```py
  >>> replicate : int, (optional)
  ```
  replicate index selecting the substream ; defaults to 0

  ## Returns
  ```py
  float : Θ1 in (0, 1)
  ```
  """
  return _sample_one(cfg, replicate)[0]


def _sample_chunk(cfg: McConfig, bounds: tuple[int, int]) -> tuple[np.ndarray, int]:
  start, stop = bounds
  pencils = [_draw_pencil(cfg, _substream(cfg.seed, r)) for r in range(start, stop)]
  a = np.stack([pencil[0] for pencil in pencils])
  b = np.stack([pencil[1] for pencil in pencils])
  try:
    return _largest_root(a, b), 0
  except np.linalg.LinAlgError:
    # rare : redo the chunk replicate by replicate so only the failing ones redraw
    results = [_sample_one(cfg, r) for r in range(start, stop)]
    redraws = sum(r for _, r in results)
    log.warning('chunk [%d, %d) needed %d redraws', start, stop, redraws)
    return np.array([v for v, _ in results]), redraws


def empirical_cdf(cfg: McConfig, workers: int | None = None) -> EmpiricalCdf:
  """
  Run every replicate of `cfg` and sort the draws.

  Deterministic for a fixed (seed, replicates, dims, field) whatever `workers` is :
  each replicate owns a counter-based substream and the merged draws are sorted.
  """
  bounds = [(start, min(start + CHUNK, cfg.replicates)) for start in range(0, cfg.replicates, CHUNK)]
  chunks = run_cells(partial(_sample_chunk, cfg), bounds, workers)
  samples = np.sort(np.concatenate([chunk for chunk, _ in chunks]))
  redraws = sum(r for _, r in chunks)
  log.info('%d replicates of p=%d m_dim=%g n_dim=%g (%s), seed %d', cfg.replicates, cfg.dims.p, cfg.dims.m_dim,
           cfg.dims.n_dim, cfg.field, cfg.seed)
  return EmpiricalCdf(sorted_samples=samples, replicates=cfg.replicates, seed=cfg.seed, redraws=redraws)


def compare_with_exact(ecdf: EmpiricalCdf, params: BetaParams, deciles=DECILES) -> list[DecileComparison]:
  """Empirical vs exact cdf at the empirical deciles of the sample."""
  rows = []
  for q in deciles:
    theta = ecdf.quantile(q)
    rows.append(
      DecileComparison(decile=q,
                       theta=theta,
                       empirical=float(ecdf.evaluate(theta)),
                       exact=exact_cdf(params, theta).value))
  return rows
