# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

from .cli import cli

if __name__ == '__main__':
    cli(prog_name='graphent')
