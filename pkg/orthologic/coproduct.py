# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Coproduct of two lattices.

The elements are the pairs of nonzero elements of both lattices ordered
componentwise, with a single bottom element added below all of them.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING
from typing import Union

from .lattice import Lattice
from .lattice import OrthoLawError
from .report import CHECKS
from .report import CheckReport
from .report import run_checks

if TYPE_CHECKING:
    from typing import Iterable
    from typing import List
    from typing import Optional
    from typing import Tuple

LOG = logging.getLogger(__name__)

# Orthocomplement laws in the order they are validated
LAW_DEFINED = 'defined'
LAW_INVOLUTION = 'involution'
LAW_ANTITONE = 'antitone'
LAW_CONTRADICTION = 'meet with complement is bottom'
LAW_EXCLUDED_MIDDLE = 'join with complement is top'


@dataclass(frozen=True)
class CoproductBottom:
    pass


@dataclass(frozen=True)
class CoproductPair:
    first: int
    second: int


CoproductElement = Union[CoproductBottom, CoproductPair]


class CoproductLattice(Lattice):
    """
    Coproduct of two lattices with a pasted bottom.

    Element 0 is the bottom and the pairs follow ordered by their first
    and then by their second component.

    The orthocomplement maps pairs componentwise and exchanges the bottom
    with the top pair. It is validated against the ortholattice laws the
    first time it is used.

    """

    def __init__(self, first: Lattice, second: Lattice):
        """
        Constructor.

        :param first: The first component lattice.
        :param second: The second component lattice.

        """

        self.__first = first
        self.__second = second
        self.__nonzero1 = [element for element in first.get_elements() if element != first.get_bottom()]
        self.__nonzero2 = [element for element in second.get_elements() if element != second.get_bottom()]
        self.__position1 = {element: position for position, element in enumerate(self.__nonzero1)}
        self.__position2 = {element: position for position, element in enumerate(self.__nonzero2)}
        self.__top = self.__pair_index(first.get_top(), second.get_top())
        self.__atoms = sorted(
            self.__pair_index(atom1, atom2)
            for atom1 in first.get_atoms()
            for atom2 in second.get_atoms()
        )
        self.__ortho: Optional[List[int]] = None
        self.__defect: Optional[Tuple[int, str]] = None

    def __repr__(self):  # pragma: no cover
        return f'<CoproductLattice elements={self.size()}>'

    @property
    def components(self) -> Tuple[Lattice, Lattice]:
        return (self.__first, self.__second)

    def size(self) -> int:
        return len(self.__nonzero1) * len(self.__nonzero2) + 1

    def get_bottom(self) -> int:
        return 0

    def get_top(self) -> int:
        return self.__top

    def get_atoms(self) -> List[int]:
        return list(self.__atoms)

    def get_element(self, index: int) -> CoproductElement:
        """
        Get the pair for an element index.

        :param index: An element of the lattice.

        """

        if index == 0:
            return CoproductBottom()

        position1, position2 = divmod(index - 1, len(self.__nonzero2))
        return CoproductPair(self.__nonzero1[position1], self.__nonzero2[position2])

    def get_index(self, element: CoproductElement) -> int:
        """
        Get the element index of a pair.

        :param element: A coproduct element.

        :raises: ValueError

        """

        if isinstance(element, CoproductBottom):
            return 0

        if element.first not in self.__position1 or element.second not in self.__position2:
            raise ValueError(f'Pair components must be nonzero elements: {element}')

        return self.__pair_index(element.first, element.second)

    def leq(self, first: int, second: int) -> bool:
        if first == 0:
            return True
        elif second == 0:
            return False

        pair1 = self.get_element(first)
        pair2 = self.get_element(second)
        return self.__first.leq(pair1.first, pair2.first) and self.__second.leq(pair1.second, pair2.second)

    def meet(self, first: int, second: int) -> int:
        if first == 0 or second == 0:
            return 0

        pair1 = self.get_element(first)
        pair2 = self.get_element(second)
        meet1 = self.__first.meet(pair1.first, pair2.first)
        meet2 = self.__second.meet(pair1.second, pair2.second)
        # A zero component collapses the pair to the global bottom
        if meet1 == self.__first.get_bottom() or meet2 == self.__second.get_bottom():
            return 0

        return self.__pair_index(meet1, meet2)

    def join(self, first: int, second: int) -> int:
        if first == 0:
            return second
        elif second == 0:
            return first

        pair1 = self.get_element(first)
        pair2 = self.get_element(second)
        return self.__pair_index(
            self.__first.join(pair1.first, pair2.first),
            self.__second.join(pair1.second, pair2.second),
        )

    def ortho(self, element: int) -> int:
        """
        Get the componentwise orthocomplement of an element.

        :param element: An element of the lattice.

        :raises: OrthoLawError

        """

        table = self.__get_ortho_table()
        return table[element]

    def check_ortho_laws(self) -> Optional[Tuple[int, str]]:
        """
        Get the least element where the componentwise orthocomplement fails.

        None is returned when all the ortholattice laws hold.

        """

        self.__validate()
        return self.__defect

    def render(self, element: int) -> str:
        value = self.get_element(element)
        if isinstance(value, CoproductBottom):
            return '0'

        return f'({self.__first.render(value.first)}, {self.__second.render(value.second)})'

    def get_coatoms(self) -> List[int]:
        """Get the elements covered by the top, in index order."""

        top = self.__top
        return [element for element in self.get_elements() if self.covers(element, top)]

    def __pair_index(self, first: int, second: int) -> int:
        return 1 + self.__position1[first] * len(self.__nonzero2) + self.__position2[second]

    def __candidate(self, element: int) -> Optional[int]:
        if element == 0:
            return self.__top
        elif element == self.__top:
            return 0

        pair = self.get_element(element)
        ortho1 = self.__first.ortho(pair.first)
        ortho2 = self.__second.ortho(pair.second)
        if ortho1 == self.__first.get_bottom() or ortho2 == self.__second.get_bottom():
            return None

        return self.__pair_index(ortho1, ortho2)

    def __validate(self):
        if self.__ortho is not None or self.__defect is not None:
            return

        elements = list(self.get_elements())
        candidates = [self.__candidate(element) for element in elements]
        undefined = [element for element in elements if candidates[element] is None]
        if undefined:
            self.__defect = (undefined[0], LAW_DEFINED)
            return

        table: List[int] = [image for image in candidates if image is not None]
        for element in elements:
            image = table[element]
            if table[image] != element:
                self.__defect = (element, LAW_INVOLUTION)
                return
            elif self.meet(element, image) != 0:
                self.__defect = (element, LAW_CONTRADICTION)
                return
            elif self.join(element, image) != self.__top:
                self.__defect = (element, LAW_EXCLUDED_MIDDLE)
                return

            for other in elements:
                if self.leq(element, other) and not self.leq(table[other], image):
                    self.__defect = (element, LAW_ANTITONE)
                    return

        self.__ortho = table

    def __get_ortho_table(self) -> List[int]:
        self.__validate()
        if self.__defect is not None:
            element, law = self.__defect
            raise OrthoLawError(self.render(element), law)

        return self.__ortho


def coproduct_checks(
    lattice: CoproductLattice,
    source: str,
    checks: Iterable[str] = CHECKS,
    timing: bool = False,
) -> CheckReport:
    """
    Run the checks over a coproduct lattice and build a report.

    Checks that need an orthocomplement are reported as skipped when the
    componentwise orthocomplement breaks an ortholattice law.

    :param lattice: The coproduct lattice.
    :param source: Name of the input.
    :param checks: Optional names of the checks to run.
    :param timing: Optional flag to measure the time of each check.

    """

    report = CheckReport(source, {
        'elements': lattice.size(),
        'atoms': len(lattice.get_atoms()),
        'coatoms': len(lattice.get_coatoms()),
    })
    defect = lattice.check_ortho_laws()
    if defect is None:
        report.set_statistic('orthocomplement', 'componentwise')
    else:
        element, law = defect
        report.set_statistic('orthocomplement', f'componentwise map fails at {lattice.render(element)}: {law}')
        LOG.info(f'Componentwise orthocomplement fails at {lattice.render(element)}: {law}')

    for result in run_checks(lattice, checks, timing=timing):
        report.add_result(result)

    return report
