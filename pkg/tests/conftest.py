from pathlib import Path

import pytest
from pyjson5 import decode, encode # pylint: disable=no-name-in-module

from src.exact import precision_plan
from src.helper import get_settings

PINNED_FILE = Path(__file__).parent / 'pinned.json5'


@pytest.fixture
def fresh_settings(monkeypatch):
  """Environment overrides visible to `get_settings`, with every cache reset on both ends."""
  get_settings.cache_clear()
  precision_plan.cache_clear()
  yield monkeypatch
  monkeypatch.undo()
  get_settings.cache_clear()
  precision_plan.cache_clear()


@pytest.fixture
def pinned():
  """
  Regression values kept in `tests/pinned.json5` : the first measurement of a name is
  recorded there, later runs get the recorded value back.
  """

  def lookup(name: str, measured: float) -> float:
    values = decode(PINNED_FILE.read_text()) if PINNED_FILE.exists() else {}
    if name not in values:
      values[name] = measured
      PINNED_FILE.write_text(encode(values) + '\n')
    return values[name]

  return lookup
