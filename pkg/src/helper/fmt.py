import logging
from typing import Any
from typing_extensions import override
from termcolor import colored

__all__ = ['RoyFormatter']


def formatter(
  c: str,
  colored_output: bool = True,
  name_width: int = 14,
  attrs: list[str] = None,
) -> str:
  if colored_output:
    return f"{colored('%(asctime)s', 'grey', attrs=['bold'])} {colored('%(levelname)8s', c, attrs=attrs)}"\
           f"{colored(f'%(name){name_width}s', 'magenta')} %(message)s"
  return f'%(asctime)s %(levelname)8s %(name){name_width}s %(message)s'


class RoyFormatter(logging.Formatter):
  """
  Level-colored formatter ; logger names are right-aligned on the widest name seen so far.
  """

  name_width = 14
  dt_fmt = '%Y-%m-%d %H:%M:%S'
  colors = {
    logging.DEBUG: ('green', None),
    logging.INFO: ('blue', None),
    logging.WARNING: ('yellow', None),
    logging.ERROR: ('red', None),
    logging.CRITICAL: ('red', ['bold']),
  }

  def __init__(self, *args: Any, colored_output: bool = True, **kwargs: Any) -> None:
    super().__init__(*args, **kwargs)
    self.colored_output = colored_output

  @override
  def format(self, record: logging.LogRecord) -> str:
    self.name_width = max(len(record.name) + 1, self.name_width)
    color, attrs = self.colors.get(record.levelno, ('white', None))
    log_fmt = formatter(color, self.colored_output, self.name_width, attrs)
    fmt = logging.Formatter(log_fmt, self.dt_fmt, style='%')
    return fmt.format(record)
