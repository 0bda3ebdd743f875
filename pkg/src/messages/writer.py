import csv
import math
from collections.abc import Iterable
from typing import Any, TextIO

import pyjson5

from ..helper.auto_numbered import LabeledEnum
from ..helper.constants import CSV_SIGNIFICANT_DIGITS

__all__ = ['OutputFormat', 'RecordWriter']


class OutputFormat(LabeledEnum):
  CSV = ('csv')
  JSONL = ('jsonl')


def _csv_cell(value: Any) -> str:
  if value is None:
    return ''
  if isinstance(value, bool):
    return str(value).lower()
  if isinstance(value, float):
    if not math.isfinite(value):
      return ''
    return f'{value:.{CSV_SIGNIFICANT_DIGITS}g}'
  if isinstance(value, (list, tuple)):
    return ';'.join(str(v) for v in value)
  return str(value)


def _json_value(value: Any) -> Any:
  # plain json has no NaN / Infinity
  if isinstance(value, float) and not math.isfinite(value):
    return None
  if isinstance(value, tuple):
    return list(value)
  return value


class RecordWriter:
  """
  Writes dict records to a text stream as csv (header row, 10 significant digits) or
  json-lines (one object per line).

  The csv header is fixed by the first record unless `columns` is given ; later records
  missing a column leave the cell empty.
  """

  def __init__(self, fmt: OutputFormat | str, stream: TextIO, columns: list[str] | None = None):
    self.fmt = OutputFormat.from_label(fmt)
    self.stream = stream
    self.columns = columns
    self.__header_written = False

  def write(self, records: Iterable[dict[str, Any]]) -> int:
    count = 0
    for record in records:
      self.write_one(record)
      count += 1
    self.stream.flush()
    return count

  def write_one(self, record: dict[str, Any]) -> None:
    if self.fmt is OutputFormat.JSONL:
      self.stream.write(pyjson5.encode({key: _json_value(value) for key, value in record.items()}))
      self.stream.write('\n')
      return
    if self.columns is None:
      self.columns = list(record.keys())
    writer = csv.writer(self.stream, lineterminator='\n')
    if not self.__header_written:
      writer.writerow(self.columns)
      self.__header_written = True
    writer.writerow([_csv_cell(record.get(column)) for column in self.columns])
