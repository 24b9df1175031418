# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Cross validation of the symbolic separated product against enumeration.

"""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from .axioms import SasakiDomainError
from .axioms import sasaki_state
from .lattice import PropertyLattice
from .separated import ClassificationError
from .separated import NotClosed
from .separated import Pair
from .separated import SeparatedProduct
from .space import mo_space

if TYPE_CHECKING:
    from typing import Dict
    from typing import List
    from typing import Optional

    from .separated import SepElement

LOG = logging.getLogger(__name__)

# Largest number of antipodal pairs accepted for each component
ORACLE_BOUND = 4


class Mismatch(object):
    """Disagreement between the symbolic and the enumerated engines."""

    def __init__(self, operation: str, arguments: str, expected: str, actual: str):
        """
        Constructor.

        :param operation: Name of the operation that disagrees.
        :param arguments: Rendering of the operation arguments.
        :param expected: Result of the enumerated engine.
        :param actual: Result of the symbolic engine.

        """

        self.operation = operation
        self.arguments = arguments
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return f'{self.operation}({self.arguments}): expected {self.expected}, got {self.actual}'

    def to_dict(self) -> dict:
        return {
            'operation': self.operation,
            'arguments': self.arguments,
            'expected': self.expected,
            'actual': self.actual,
        }


class OracleReport(object):
    """Result of comparing both engines on a product of two MO spaces."""

    def __init__(self, first: int, second: int):
        """
        Constructor.

        :param first: Number of antipodal pairs of the first component.
        :param second: Number of antipodal pairs of the second component.

        """

        self.first = first
        self.second = second
        self.elements = 0
        self.symbolic_elements = 0
        self.histogram: Dict[str, int] = {}
        self.classical = False
        self.comparisons = 0
        self.mismatch: Optional[Mismatch] = None
        self.printed_pair_rows = 0
        self.printed_pair_differences = 0
        self.printed_pair_example = ''

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def to_dict(self) -> dict:
        return {
            'components': [self.first, self.second],
            'ok': self.ok,
            'elements': self.elements,
            'symbolic_elements': self.symbolic_elements,
            'families': dict(self.histogram),
            'classical': self.classical,
            'comparisons': self.comparisons,
            'mismatch': self.mismatch.to_dict() if self.mismatch else None,
            'printed_pair_perp': {
                'pairs': self.printed_pair_rows,
                'differences': self.printed_pair_differences,
                'example': self.printed_pair_example,
            },
        }

    def render(self) -> str:
        lines = [
            f'oracle MO({self.first}) x MO({self.second}): {"agreement" if self.ok else "DISAGREEMENT"}',
            f'elements: {self.elements} enumerated, {self.symbolic_elements} symbolic',
            'families: ' + ' '.join(f'{name}={count}' for name, count in self.histogram.items()),
            f'comparisons: {self.comparisons}',
        ]
        if self.classical:
            lines.append('note: classical component, every pair of distinct component states is orthogonal')

        if self.mismatch:
            lines.append(f'counterexample: {self.mismatch}')

        lines.append(
            f'pair perp: computed crossed form verified; the printed row differs on '
            f'{self.printed_pair_differences} of {self.printed_pair_rows} pairs'
        )
        if self.printed_pair_example:
            lines.append(f'  e.g. {self.printed_pair_example}')

        return '\n'.join(lines)


def _classify_all(
    product: SeparatedProduct,
    lattice: PropertyLattice,
    report: OracleReport,
) -> Optional[List[SepElement]]:
    classified = []
    for element in lattice.get_elements():
        states = lattice.get_set(element)
        try:
            value = product.classify(states)
        except ClassificationError as error:
            report.mismatch = Mismatch('classify', states.render(), 'a family element', str(error))
            return None

        if isinstance(value, NotClosed):
            report.mismatch = Mismatch('classify', states.render(), 'closed', 'NOT_CLOSED')
            return None

        denoted = product.denote(value)
        if denoted != states:
            report.mismatch = Mismatch('denote', product.render(value), states.render(), denoted.render())
            return None

        classified.append(value)

    return classified


def _compare_operations(
    product: SeparatedProduct,
    lattice: PropertyLattice,
    classified: List[SepElement],
    report: OracleReport,
) -> Optional[Mismatch]:
    render = product.render
    elements = list(lattice.get_elements())

    for element in elements:
        report.comparisons += 1
        expected = classified[lattice.ortho(element)]
        actual = product.perp(classified[element])
        if actual != expected:
            return Mismatch('perp', render(classified[element]), render(expected), render(actual))

    for first in elements:
        for second in elements:
            report.comparisons += 2
            expected = classified[lattice.meet(first, second)]
            actual = product.meet(classified[first], classified[second])
            if actual != expected:
                arguments = f'{render(classified[first])}, {render(classified[second])}'
                return Mismatch('meet', arguments, render(expected), render(actual))

            expected = classified[lattice.join(first, second)]
            actual = product.join(classified[first], classified[second])
            if actual != expected:
                arguments = f'{render(classified[first])}, {render(classified[second])}'
                return Mismatch('join', arguments, render(expected), render(actual))

    space = lattice.space
    for element in elements:
        perp = lattice.get_mask(lattice.ortho(element))
        for state in range(len(space)):
            report.comparisons += 1
            arguments = f'{render(classified[element])}, {space.get_name(state)}'
            try:
                actual_value = render(product.sasaki(classified[element], state))
            except SasakiDomainError:
                actual_value = 'outside the domain'

            if perp >> state & 1:
                expected_value = 'outside the domain'
            else:
                image = sasaki_state(lattice, element, state)
                expected_value = render(classified[lattice.get_index(image)])

            if actual_value != expected_value:
                return Mismatch('sasaki', arguments, expected_value, actual_value)

    return None


def oracle_equivalence(first: int, second: int) -> OracleReport:
    """
    Compare the symbolic and the enumerated product of two MO spaces.

    The enumerated closed sets must be in one to one correspondence with
    the symbolic elements, and perp, meet, join and the Sasaki maps must
    agree for all arguments. The first disagreement found is reported.

    :param first: Number of antipodal pairs of the first component.
    :param second: Number of antipodal pairs of the second component.

    :raises: ValueError

    """

    for value in (first, second):
        if not 1 <= value <= ORACLE_BOUND:
            raise ValueError(f'Component sizes must be between 1 and {ORACLE_BOUND}, got {value}')

    report = OracleReport(first, second)
    product = SeparatedProduct(mo_space(first), mo_space(second))
    lattice = PropertyLattice.from_space(product.space)
    symbolic = product.get_elements()
    report.elements = lattice.size()
    report.symbolic_elements = len(symbolic)
    report.histogram = product.histogram(symbolic)
    report.classical = product.is_classical()

    classified = _classify_all(product, lattice, report)
    if classified is None:
        return report

    if len(set(classified)) != len(classified) or set(classified) != set(symbolic):
        missing = sorted(product.render(element) for element in set(symbolic) - set(classified))
        report.mismatch = Mismatch(
            'denote',
            'all elements',
            f'{report.elements} distinct closed sets',
            f'symbolic elements without closed set: {", ".join(missing) or "none"}',
        )
        return report

    report.mismatch = _compare_operations(product, lattice, classified, report)

    for element in symbolic:
        if not isinstance(element, Pair):
            continue

        report.printed_pair_rows += 1
        printed = product.printed_pair_perp(element)
        computed = product.denote(product.perp(element))
        if printed != computed:
            report.printed_pair_differences += 1
            if not report.printed_pair_example:
                report.printed_pair_example = (
                    f'{product.render(element)}: computed {computed.render()}, printed {printed.render()}'
                )

    LOG.debug(f'Oracle for MO({first}) x MO({second}) made {report.comparisons} comparisons')
    return report
