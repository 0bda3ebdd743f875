import logging

import click
from pyjson5 import encode # pylint: disable=no-name-in-module
from typing_extensions import override

from ..commands import bench, cdf, curve, mc, quantile, table
from ..helper.logger import init_logger
from ..messages import error_record
from ..version import __version__

__all__ = ['RoyGroup', 'main']


class RoyGroup(click.Group):
  """
  ## Description
  Command group that also reports argument parsing errors as a json error record on
  stdout before click prints the usage and exits with code 2.
  """

  def __init__(self, *args, **kwargs):
    super().__init__(*args, **kwargs)
    self.log = logging.getLogger('roy.cli')

  @override
  def invoke(self, ctx: click.Context):
    try:
      return super().invoke(ctx)
    except click.UsageError as e:
      self.log.error('usage error: %s', e.format_message())
      click.echo(encode(error_record(e)))
      raise


@click.group(cls=RoyGroup, context_settings={'help_option_names': ['-h', '--help']})
@click.option('-v', '--verbose', is_flag=True, help='debug logging (default from DEBUG)')
@click.version_option(__version__, prog_name='roy')
def main(verbose: bool) -> None:
  """Exact and approximate distribution of Roy's largest root."""
  init_logger(verbose or None)


for command in (cdf, quantile, table, curve, mc, bench):
  main.add_command(command)
