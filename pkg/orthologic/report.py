# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

from . import axioms
from .lattice import OrthoLawError
from .lattice import PropertyLattice
from .separated import SeparatedProduct

if TYPE_CHECKING:
    from typing import Any
    from typing import Dict
    from typing import Iterable
    from typing import List
    from typing import Optional

    from .axioms import Witness
    from .lattice import Lattice

LOG = logging.getLogger(__name__)

OK = 'ok'
VIOLATED = 'violated'
SKIPPED = 'skipped'

# Names of the checks in the order they are run and reported
CHECKS = (
    axioms.ORTHOMODULARITY,
    axioms.COVERING,
    axioms.EXCHANGE,
    axioms.ATOMISTIC,
    axioms.SASAKI,
)

# Maximum number of Sasaki witnesses listed in a report
SASAKI_WITNESS_LIMIT = 10


class CheckResult(object):
    """Outcome of a single axiom check."""

    def __init__(self, name: str, status: str, witnesses: List[Witness] = None, reason: str = ''):
        """
        Constructor.

        :param name: The check name.
        :param status: One of "ok", "violated" or "skipped".
        :param witnesses: Optional counterexamples for violated checks.
        :param reason: Optional explanation for skipped checks.

        """

        self.name = name
        self.status = status
        self.witnesses = list(witnesses or [])
        self.reason = reason
        self.total = len(self.witnesses)
        self.seconds: Optional[float] = None

    def to_dict(self) -> dict:
        result: Dict[str, Any] = {'name': self.name, 'status': self.status}
        if self.status == SKIPPED:
            result['reason'] = self.reason
        elif self.witnesses:
            result['witnesses'] = [
                {'elements': list(witness.elements), 'narrative': witness.narrative}
                for witness in self.witnesses
            ]
            if self.total != len(self.witnesses):
                result['total'] = self.total

        if self.seconds is not None:
            result['seconds'] = round(self.seconds, 6)

        return result

    def render(self) -> List[str]:
        line = f'{self.name}: {self.status}'
        if self.status == SKIPPED:
            line += f' ({self.reason})'
        elif self.total > len(self.witnesses):
            line += f' ({self.total} witnesses, first {len(self.witnesses)} shown)'

        if self.seconds is not None:
            line += f' [{self.seconds:.3f}s]'

        lines = [line]
        lines.extend(f'  witness: {witness.narrative}' for witness in self.witnesses)
        return lines


class CheckReport(object):
    """
    Report for a check run over a lattice.

    Reports keep the order in which statistics and results are added, so
    the same input always renders to the same text and JSON.

    """

    def __init__(self, source: str, statistics: Dict[str, Any] = None):
        """
        Constructor.

        :param source: Name of the input.
        :param statistics: Optional lattice statistics.

        """

        self.__source = source
        self.__statistics: Dict[str, Any] = dict(statistics or {})
        self.__results: List[CheckResult] = []
        self.__notes: List[str] = []

    @property
    def source(self) -> str:
        return self.__source

    def get_statistics(self) -> Dict[str, Any]:
        return dict(self.__statistics)

    def set_statistic(self, name: str, value: Any):
        self.__statistics[name] = value

    def get_results(self) -> List[CheckResult]:
        return list(self.__results)

    def get_result(self, name: str) -> Optional[CheckResult]:
        for result in self.__results:
            if result.name == name:
                return result

        return None

    def add_result(self, result: CheckResult):
        self.__results.append(result)

    def add_note(self, note: str):
        self.__notes.append(note)

    def get_notes(self) -> List[str]:
        return list(self.__notes)

    def has_violations(self) -> bool:
        return any(result.status == VIOLATED for result in self.__results)

    def to_dict(self) -> dict:
        return {
            'source': self.__source,
            'statistics': dict(self.__statistics),
            'checks': [result.to_dict() for result in self.__results],
            'notes': list(self.__notes),
        }

    def render(self) -> str:
        lines = [f'source: {self.__source}']
        for name, value in self.__statistics.items():
            if isinstance(value, dict):
                value = ' '.join(f'{key}={item}' for key, item in value.items())

            lines.append(f'{name}: {value}')

        for result in self.__results:
            lines.extend(result.render())

        lines.extend(f'note: {note}' for note in self.__notes)
        return '\n'.join(lines)


def run_check(lattice: Lattice, name: str) -> CheckResult:
    """
    Run a single check over a lattice.

    Checks that need an orthocomplement are skipped when the lattice
    orthocomplement does not satisfy the ortholattice laws.

    :param lattice: The lattice to check.
    :param name: The check name.

    :raises: ValueError

    """

    try:
        if name == axioms.SASAKI:
            report = axioms.check_sasaki_regular(lattice)
            result = CheckResult(name, OK if report.regular else VIOLATED, report.witnesses[:SASAKI_WITNESS_LIMIT])
            result.total = len(report.witnesses)
            return result

        if name == axioms.ORTHOMODULARITY:
            witness = axioms.check_orthomodular(lattice)
        elif name == axioms.COVERING:
            witness = axioms.check_covering(lattice)
        elif name == axioms.EXCHANGE:
            witness = axioms.check_exchange(lattice)
        elif name == axioms.ATOMISTIC:
            witness = axioms.check_atomistic(lattice)
        else:
            raise ValueError(f'Unknown check: "{name}"')
    except OrthoLawError as error:
        return CheckResult(name, SKIPPED, reason=str(error))

    if witness is None:
        return CheckResult(name, OK)

    return CheckResult(name, VIOLATED, [witness])


def run_checks(lattice: Lattice, checks: Iterable[str] = CHECKS, timing: bool = False) -> List[CheckResult]:
    """
    Run a list of checks over a lattice.

    :param lattice: The lattice to check.
    :param checks: Optional names of the checks to run.
    :param timing: Optional flag to measure the time of each check.

    """

    results = []
    for name in checks:
        start = time.perf_counter()
        result = run_check(lattice, name)
        if timing:
            result.seconds = time.perf_counter() - start

        LOG.debug(f'Check {name} finished with status {result.status}')
        results.append(result)

    return results


def lattice_statistics(lattice: PropertyLattice) -> Dict[str, Any]:
    """
    Get the statistics of a property lattice.

    Products of two MO type spaces also get the family histogram.

    :param lattice: The property lattice.

    """

    statistics: Dict[str, Any] = {
        'states': len(lattice.space),
        'elements': lattice.size(),
        'atoms': len(lattice.get_atoms()),
        't1': lattice.space.is_t1(),
        'nontrivial': lattice.space.is_nontrivial(),
    }

    pairs = axioms.superselection_pairs(lattice)
    statistics['superselected_pairs'] = len(pairs)
    statistics['superselected_non_orthogonal'] = sum(1 for _, _, orthogonal in pairs if not orthogonal)

    product = symbolic_product(lattice)
    if product:
        elements = []
        for element in lattice.get_elements():
            value = product.classify(lattice.get_set(element))
            elements.append(value)

        statistics['families'] = product.histogram(elements)

    return statistics


def symbolic_product(lattice: PropertyLattice) -> Optional[SeparatedProduct]:
    """
    Get the symbolic product for a lattice of a product of two MO type spaces.

    None is returned for any other lattice.

    :param lattice: The property lattice.

    """

    factors = lattice.space.factors
    if not factors or not all(factor.is_mo_type() for factor in factors):
        return None

    return SeparatedProduct(*factors)


def check_lattice(
    lattice: PropertyLattice,
    source: str,
    checks: Iterable[str] = CHECKS,
    timing: bool = False,
) -> CheckReport:
    """
    Run the checks over a property lattice and build a report.

    :param lattice: The property lattice.
    :param source: Name of the input.
    :param checks: Optional names of the checks to run.
    :param timing: Optional flag to measure the time of each check.

    """

    report = CheckReport(source, lattice_statistics(lattice))
    for result in run_checks(lattice, checks, timing=timing):
        report.add_result(result)

    product = symbolic_product(lattice)
    if product:
        if product.is_classical():
            report.add_note('classical component: every pair of distinct component states is orthogonal')

        report.add_note(
            'pair complements use the crossed form {(p1*,q2*),(q1*,p2*)}, '
            'which differs from the printed row {(p1*,q2*),(q1*,q2*)}'
        )

    return report
