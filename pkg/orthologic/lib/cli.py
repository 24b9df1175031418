# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
from __future__ import annotations

import argparse
import logging
from typing import TYPE_CHECKING

from ..space import DEFAULT_CAP
from .logging import SYSLOG_NUMERIC

if TYPE_CHECKING:
    from typing import List
    from typing import Optional
    from typing import Sequence

# This global is True when the commands run in debug mode
DEBUG = False

# Names of the checks that can be selected with --checks
CHECK_NAMES = ('orthomodularity', 'covering', 'exchange', 'atomistic', 'sasaki')

# Bounds for the component sizes of the oracle command
ORACLE_MIN = 1
ORACLE_MAX = 4

# Default number of random component pairs for the sasaki command
DEFAULT_RUNS = 100


def positive_int(value: str) -> int:
    """
    Argument type for positive integers.

    :raises: ArgumentTypeError

    """

    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer value: "{value}"')

    if number < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, got {number}')

    return number


def oracle_size(value: str) -> int:
    """
    Argument type for oracle component sizes.

    :raises: ArgumentTypeError

    """

    number = positive_int(value)
    if number > ORACLE_MAX:
        raise argparse.ArgumentTypeError(f'component size must be between {ORACLE_MIN} and {ORACLE_MAX}')

    return number


def check_list(value: str) -> List[str]:
    """
    Argument type for a comma separated list of check names.

    :raises: ArgumentTypeError

    """

    names = [name.strip() for name in value.split(',') if name.strip()]
    unknown = [name for name in names if name not in CHECK_NAMES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f'invalid checks "{value}", choose from {", ".join(CHECK_NAMES)}')

    # Keep the reporting order
    return [name for name in CHECK_NAMES if name in names]


def _add_file_options(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument(
        'file',
        help='Space file, or a lattice snapshot with a ".msgpack" suffix. Use "-" to read standard input.',
        nargs=None if required else '?',
    )
    parser.add_argument(
        '--cap',
        help='Maximum number of lattice elements.',
        type=positive_int,
        default=DEFAULT_CAP,
    )


def _add_report_options(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--json',
        help='Write the report as JSON.',
        action='store_true',
    )
    parser.add_argument(
        '--expect-violations',
        help='Succeed only when some check is violated.',
        action='store_true',
    )


# List of CLI options
PARSER = argparse.ArgumentParser(prog='orthologic', allow_abbrev=False)
PARSER.add_argument(
    '-D', '--debug',
    help='Enable debug mode.',
    action='store_true',
)
PARSER.add_argument(
    '-L', '--log-level',
    help='Enable logging using a numeric Syslog severity value to set the level.',
    type=int,
    choices=range(8),
)

_COMMANDS = PARSER.add_subparsers(dest='command', metavar='COMMAND')
_COMMANDS.required = True

_CHECK = _COMMANDS.add_parser('check', help='Run the axiom checks on a space.', allow_abbrev=False)
_add_file_options(_CHECK)
_add_report_options(_CHECK)
_CHECK.add_argument(
    '--checks',
    help=f'Comma separated checks to run: {", ".join(CHECK_NAMES)}.',
    type=check_list,
    default=list(CHECK_NAMES),
)
_CHECK.add_argument(
    '--timing',
    help='Add the time spent by each check to the report.',
    action='store_true',
)

_LATTICE = _COMMANDS.add_parser('lattice', help='Show the elements of the property lattice.', allow_abbrev=False)
_add_file_options(_LATTICE)
_LATTICE.add_argument(
    '--json',
    help='Write the lattice as JSON.',
    action='store_true',
)
_LATTICE.add_argument(
    '--save',
    help='Save a lattice snapshot to a ".msgpack" file.',
    metavar='PATH',
)

_SASAKI = _COMMANDS.add_parser('sasaki', help='Scan the Sasaki maps for irregular projections.', allow_abbrev=False)
_add_file_options(_SASAKI, required=False)
_add_report_options(_SASAKI)
_SASAKI.add_argument(
    '--random',
    help='Check products of K random Sasaki regular spaces instead of a file.',
    type=positive_int,
    metavar='K',
)
_SASAKI.add_argument(
    '--seed',
    help='Seed for the random spaces.',
    type=int,
    default=0,
)
_SASAKI.add_argument(
    '--max-states',
    help='Maximum number of states of each random space.',
    type=positive_int,
    default=6,
)

_HASSE = _COMMANDS.add_parser('hasse', help='Write the Hasse diagram as DOT.', allow_abbrev=False)
_add_file_options(_HASSE)

_ORACLE = _COMMANDS.add_parser(
    'oracle',
    help='Compare the symbolic and the enumerated product of two MO spaces.',
    allow_abbrev=False,
)
_ORACLE.add_argument('m', help='Antipodal pairs of the first component.', type=oracle_size)
_ORACLE.add_argument('n', help='Antipodal pairs of the second component.', type=oracle_size)
_ORACLE.add_argument(
    '--json',
    help='Write the report as JSON.',
    action='store_true',
)

_COPRODUCT = _COMMANDS.add_parser('coproduct', help='Run the checks on a coproduct.', allow_abbrev=False)
_add_file_options(_COPRODUCT)
_add_report_options(_COPRODUCT)
_COPRODUCT.add_argument(
    '--timing',
    help='Add the time spent by each check to the report.',
    action='store_true',
)


def parse_args(argv: Sequence[str] = None) -> Input:
    """
    Parse CLI argument values.

    :param argv: Optional arguments, by default the process arguments.

    """

    values = vars(PARSER.parse_args(argv))
    return Input(**values)


class Input(object):
    """CLI input values."""

    def __init__(self, **kwargs):
        """
        Constructor.

        The keywords are used as the input values dictionary.

        """

        self.__values = kwargs

    def get_command(self) -> str:
        """Get the name of the command to run."""

        return self.__values['command']

    def get_file(self) -> Optional[str]:
        """Get the path of the input file, or None when there is none."""

        return self.__values.get('file')

    def get_source(self) -> str:
        """Get a name for the input to use in reports and logs."""

        if self.get_command() == 'oracle':
            return f'oracle {self.__values["m"]} {self.__values["n"]}'
        elif self.get_random():
            return f'random {self.get_random()} seed {self.get_seed()}'

        return self.get_file() or '-'

    def is_snapshot(self) -> bool:
        """Check if the input file is a lattice snapshot."""

        return (self.get_file() or '').endswith('.msgpack')

    def get_cap(self) -> int:
        """Get the maximum number of lattice elements."""

        return self.__values.get('cap') or DEFAULT_CAP

    def is_json(self) -> bool:
        """Check if the output must be JSON."""

        return self.__values.get('json', False)

    def expects_violations(self) -> bool:
        """Check if violated checks are the expected outcome."""

        return self.__values.get('expect_violations', False)

    def get_checks(self) -> List[str]:
        """Get the names of the checks to run."""

        return list(self.__values.get('checks') or CHECK_NAMES)

    def is_timing_enabled(self) -> bool:
        """Check if the report must include timings."""

        return self.__values.get('timing', False)

    def get_save_path(self) -> Optional[str]:
        """Get the path where to save a lattice snapshot."""

        return self.__values.get('save')

    def get_random(self) -> int:
        """
        Get the number of random runs.

        Zero is returned when random runs are not requested.

        """

        return self.__values.get('random') or 0

    def get_seed(self) -> int:
        """Get the seed for random runs."""

        return self.__values.get('seed', 0)

    def get_max_states(self) -> int:
        """Get the maximum number of states of random spaces."""

        return self.__values.get('max_states', 6)

    def get_oracle_sizes(self) -> List[int]:
        """Get the component sizes for the oracle command."""

        return [self.__values['m'], self.__values['n']]

    def is_debug(self) -> bool:
        """Check if debug is enabled."""

        return self.__values.get('debug', False)

    def has_logging(self) -> bool:
        """Check if logging is enabled."""

        return self.__values.get('log_level') is not None

    def get_log_level(self) -> int:
        """Get the log level."""

        return SYSLOG_NUMERIC.get(self.__values.get('log_level'), logging.INFO)
