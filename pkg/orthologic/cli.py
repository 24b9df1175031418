# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Command line entry point.

Exit codes are 0 on success, 1 when a check is violated, 2 for usage and
input errors and 3 when a lattice is larger than the configured cap.

"""
from __future__ import annotations

import sys
from typing import TYPE_CHECKING
from typing import Union

from . import axioms
from .coproduct import CoproductLattice
from .coproduct import coproduct_checks
from .hasse import render_dot
from .lattice import PropertyLattice
from .lattice import dump_lattice
from .lattice import load_lattice
from .lib import cli
from .lib import json
from .lib.error import CapExceededError
from .lib.error import OrthologicError
from .lib.logging import SourceLogger
from .lib.logging import disable_logging
from .lib.logging import setup_orthologic_logging
from .lib.logging import value_to_log_string
from .oracle import oracle_equivalence
from .report import CheckReport
from .report import check_lattice
from .spacefile import KIND_COPRODUCT
from .spacefile import SpaceFileError
from .spacefile import parse_space_file

if TYPE_CHECKING:
    from typing import Any
    from typing import List
    from typing import Sequence

    from .lib.cli import Input

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3

AnyLattice = Union[PropertyLattice, CoproductLattice]


def _write(values: Input, text: str, data: Any = None):
    if values.is_json() and data is not None:
        text = json.dumps(data, prettify=True).decode('utf8')

    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _exit_code(values: Input, violated: bool) -> int:
    if values.expects_violations():
        return EXIT_OK if violated else EXIT_VIOLATION

    return EXIT_VIOLATION if violated else EXIT_OK


def _read_text(path: str) -> str:
    if path == '-':
        return sys.stdin.read()

    with open(path, encoding='utf8') as file:
        return file.read()


def load_input(values: Input, logger: SourceLogger) -> AnyLattice:
    """
    Load the lattice for the input file.

    Snapshots are loaded as they are. Space files build the lattice of
    their last definition, which for coproducts is built from the lattices
    of both operands.

    :param values: The CLI input values.
    :param logger: The logger for the input.

    :raises: SpaceFileError, CapExceededError, ValueError, OSError

    """

    path = values.get_file() or '-'
    cap = values.get_cap()
    if values.is_snapshot():
        with open(path, 'rb') as file:
            lattice = load_lattice(file.read())

        if lattice.size() > cap:
            raise CapExceededError(cap)

        logger.debug(f'Loaded a snapshot with {lattice.size()} elements')
        return lattice

    spacefile = parse_space_file(_read_text(path), source=path)
    target = spacefile.get_target()
    if target.kind != KIND_COPRODUCT:
        return PropertyLattice.from_space(spacefile.build_space(), cap=cap)

    first, second = (PropertyLattice.from_space(spacefile.build_space(name), cap=cap) for name in target.operands)
    if (first.size() - 1) * (second.size() - 1) + 1 > cap:
        raise CapExceededError(cap)

    logger.debug(f'Coproduct of lattices with {first.size()} and {second.size()} elements')
    return CoproductLattice(first, second)


def _run_checks(values: Input, lattice: AnyLattice, checks: List[str], timing: bool) -> CheckReport:
    if isinstance(lattice, CoproductLattice):
        return coproduct_checks(lattice, values.get_source(), checks=checks, timing=timing)

    return check_lattice(lattice, values.get_source(), checks=checks, timing=timing)


def run_check_command(values: Input, logger: SourceLogger) -> int:
    lattice = load_input(values, logger)
    report = _run_checks(values, lattice, values.get_checks(), values.is_timing_enabled())
    logger.debug(f'Statistics: {value_to_log_string(report.get_statistics())}')
    _write(values, report.render(), report.to_dict())
    return _exit_code(values, report.has_violations())


def run_lattice_command(values: Input, logger: SourceLogger) -> int:
    lattice = load_input(values, logger)
    save_path = values.get_save_path()
    if save_path:
        if not isinstance(lattice, PropertyLattice):
            raise OrthologicError('Only property lattices of orthogonality spaces can be saved')

        with open(save_path, 'wb') as file:
            file.write(dump_lattice(lattice))

        logger.info(f'Lattice snapshot saved to {save_path}')

    atoms = set(lattice.get_atoms())
    lines = [
        f'source: {values.get_source()}',
        f'elements: {lattice.size()}',
        f'atoms: {len(atoms)}',
    ]
    for element in lattice.get_elements():
        lines.append(f'{element} {lattice.render(element)}' + (' atom' if element in atoms else ''))

    data = {
        'source': values.get_source(),
        'elements': [
            {'index': element, 'set': lattice.render(element), 'atom': element in atoms}
            for element in lattice.get_elements()
        ],
        'atoms': sorted(atoms),
    }
    _write(values, '\n'.join(lines), data)
    return EXIT_OK


def run_sasaki_command(values: Input, logger: SourceLogger) -> int:
    runs = values.get_random()
    if not runs:
        if not values.get_file():
            raise OrthologicError('A space file or the --random option is required')

        lattice = load_input(values, logger)
        report = _run_checks(values, lattice, [axioms.SASAKI], False)
        _write(values, report.render(), report.to_dict())
        return _exit_code(values, report.has_violations())

    result = axioms.random_products_run(runs=runs, seed=values.get_seed(), max_states=values.get_max_states())
    lines = [f'source: {values.get_source()}']
    data_runs = []
    for number, (first, second, witness) in enumerate(result.runs, start=1):
        status = 'irregular' if witness else 'regular'
        lines.append(f'run {number}: {len(first)} x {len(second)} states: {status}')
        if witness:
            lines.append(f'  witness: {witness.narrative}')

        data_runs.append({
            'first': {'states': list(first.get_names()), 'ortho': [list(pair) for pair in first.get_pairs()]},
            'second': {'states': list(second.get_names()), 'ortho': [list(pair) for pair in second.get_pairs()]},
            'status': status,
            'witness': witness.narrative if witness else None,
        })

    irregular = result.all_irregular()
    lines.append(f'all products irregular: {"yes" if irregular else "no"}')
    data = {'source': values.get_source(), 'runs': data_runs, 'all_irregular': irregular}
    _write(values, '\n'.join(lines), data)

    # Irregular products are the violations of this scan
    if values.expects_violations():
        return EXIT_OK if irregular else EXIT_VIOLATION

    return EXIT_VIOLATION if any(witness for _, _, witness in result.runs) else EXIT_OK


def run_hasse_command(values: Input, logger: SourceLogger) -> int:
    lattice = load_input(values, logger)
    sys.stdout.write(render_dot(lattice))
    return EXIT_OK


def run_oracle_command(values: Input, logger: SourceLogger) -> int:
    first, second = values.get_oracle_sizes()
    report = oracle_equivalence(first, second)
    if not report.ok:
        logger.error(f'Engines disagree: {report.mismatch}')

    _write(values, report.render(), report.to_dict())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def run_coproduct_command(values: Input, logger: SourceLogger) -> int:
    lattice = load_input(values, logger)
    if not isinstance(lattice, CoproductLattice):
        raise OrthologicError('The last definition of the file must be a coproduct')

    report = coproduct_checks(lattice, values.get_source(), timing=values.is_timing_enabled())
    _write(values, report.render(), report.to_dict())
    return _exit_code(values, report.has_violations())


COMMANDS = {
    'check': run_check_command,
    'lattice': run_lattice_command,
    'sasaki': run_sasaki_command,
    'hasse': run_hasse_command,
    'oracle': run_oracle_command,
    'coproduct': run_coproduct_command,
}


def _fail(values: Input, message: str):
    sys.stderr.write(f'{values.get_source()}: {message}\n')


def main(argv: Sequence[str] = None) -> int:
    """
    Run a command.

    :param argv: Optional arguments, by default the process arguments.

    """

    try:
        values = cli.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_USAGE

    cli.DEBUG = values.is_debug()
    if values.has_logging():
        setup_orthologic_logging(values.get_command(), values.get_log_level())
    else:
        disable_logging()

    logger = SourceLogger(__name__, values.get_source())
    logger.debug(f'Running command {values.get_command()}')
    command = COMMANDS[values.get_command()]
    try:
        return command(values, logger)
    except SpaceFileError as error:
        logger.error(f'Invalid space file: {error}')
        _fail(values, str(error))
        return EXIT_USAGE
    except CapExceededError as error:
        logger.error(str(error))
        _fail(values, str(error))
        return EXIT_CAP
    except (OrthologicError, ValueError, OSError) as error:
        logger.error(str(error))
        _fail(values, str(error))
        return EXIT_USAGE
    except Exception as error:
        logger.exception(f'Command failed: {error}')
        _fail(values, f'unexpected error: {error}')
        return EXIT_USAGE


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
