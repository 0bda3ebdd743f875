import sys
import os
import logging

from .fmt import *
from .config import get_settings

__all__ = ['init_logger', 'supports_color']

try:
  import colorama # type: ignore

  colorama.init()
except (ImportError, OSError):
  HAS_COLORAMA = False
else:
  HAS_COLORAMA = True


def supports_color(stream=None) -> bool:
  """
  Return True if the running system's terminal supports color,
  and False otherwise.\\
  thanks to https://github.com/django/django/blob/main/django/core/management/color.py
  """
  stream = stream if stream is not None else sys.stderr

  def vt_codes_enabled_in_windows_registry():
    """
    Check the Windows Registry to see if VT code handling has been enabled
    by default, see https://superuser.com/a/1300251/447564.
    """
    try:
      # winreg is only available on Windows.
      import winreg # pylint: disable=import-outside-toplevel
    except ImportError:
      return False
    try:
      reg_key = winreg.OpenKey(winreg.HKEY_CURRENT_USER, "Console")
      reg_key_value, _ = winreg.QueryValueEx(reg_key, "VirtualTerminalLevel")
    except FileNotFoundError:
      return False
    return reg_key_value == 1

  is_a_tty = hasattr(stream, "isatty") and stream.isatty()

  # yapf: disable
  return is_a_tty and (
    sys.platform != "win32"
    or HAS_COLORAMA
    or "ANSICON" in os.environ
    or "WT_SESSION" in os.environ
    or os.environ.get("TERM_PROGRAM") == "vscode"
    or vt_codes_enabled_in_windows_registry()
  )
  # yapf: enable


def init_logger(verbose: bool | None = None) -> None:
  """
  Configure the root logger once for the whole process.

  ## Parameters
  ```py
  >>> verbose : bool | None, (optional)
  ```
  force DEBUG level ; defaults to the `DEBUG` environment variable
  """
  settings = get_settings()
  debug = settings.debug if verbose is None else verbose
  log_lvl = logging.DEBUG if debug else logging.INFO

  # stdout carries the data records, logs go to stderr
  console_handler = logging.StreamHandler(sys.stderr)
  console_handler.setLevel(log_lvl)
  console_handler.setFormatter(RoyFormatter(colored_output=supports_color(sys.stderr)))
  handlers: list[logging.Handler] = [console_handler]

  if settings.log_file:
    file_handler = logging.FileHandler(settings.log_file, mode='w', encoding='utf-8')
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(RoyFormatter(colored_output=False))
    handlers.append(file_handler)

  logging.basicConfig(
    level=log_lvl,
    handlers=handlers,
    force=True,
  )
