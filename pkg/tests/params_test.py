import pytest

from src.exact import BetaParams, FieldKind, ManovaDims, beta_to_manova, manova_to_beta
from src.helper import DomainError


def test_manova_mapping_real():
  params = manova_to_beta(ManovaDims(5, 206, 5))
  assert params == BetaParams(5, -0.5, 100)
  assert params.field is FieldKind.REAL


def test_manova_mapping_complex():
  params = manova_to_beta(ManovaDims(3, 10, 7), 'complex')
  assert params == BetaParams(3, 4, 7, FieldKind.COMPLEX)


@pytest.mark.parametrize('field', ['real', 'complex'])
def test_beta_to_manova_inverts(field):
  dims = ManovaDims(4, 17, 9)
  assert beta_to_manova(manova_to_beta(dims, field)) == dims


def test_beta_to_manova_allows_fractional_dims():
  dims = beta_to_manova(BetaParams(3, -0.75, 0.2))
  assert dims.p == 3
  assert dims.m_dim == pytest.approx(4.4)
  assert dims.n_dim == pytest.approx(2.5)
  assert not dims.is_integral


@pytest.mark.parametrize('s, m, n', [(0, 1, 1), (2.5, 1, 1), (3, -1, 0), (3, 0, -1.2), (3, float('nan'), 1),
                                     (3, 1, float('inf'))])
def test_beta_params_domain(s, m, n):
  with pytest.raises(DomainError):
    BetaParams(s, m, n)


def test_manova_dims_domain():
  with pytest.raises(DomainError):
    ManovaDims(5, 4, 10)
  with pytest.raises(DomainError):
    ManovaDims(0, 4, 10)
  # non strict dims only need to exceed p - 1
  assert ManovaDims(5, 4.5, 10, strict=False).m_dim == 4.5
  with pytest.raises(DomainError):
    ManovaDims(5, 4, 10, strict=False)


def test_order_and_echo():
  assert BetaParams(5, 0, 0).order == 6
  assert BetaParams(4, 0, 0).order == 4
  assert BetaParams(5, 0, 0, 'complex').order == 5
  assert BetaParams(2, 1, 3).echo() == {'s': 2, 'm': 1.0, 'n': 3.0, 'field': 'real'}


def test_field_kind_labels():
  assert FieldKind.from_label('COMPLEX') is FieldKind.COMPLEX
  assert str(FieldKind.REAL) == 'real'
  with pytest.raises(DomainError):
    FieldKind.from_label('quaternion')


def test_params_are_hashable_keys():
  assert len({BetaParams(2, 1, 1), BetaParams(2, 1.0, 1.0), BetaParams(2, 1, 1, 'complex')}) == 2
