# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Symbolic closed sets of the separated product of two MO type spaces.

When every state of both components is orthogonal to exactly one other
state, the closed sets of the product fall in six families:

    T   the empty set and the full product
    A1  rows {p1} x S2
    A2  columns S1 x {p2}
    S   points {(p1, p2)}
    U   butterflies {p1} x S2 u S1 x {p2}
    P   pairs {(p1, p2), (q1, q2)} with p1 != q1 and p2 != q2

Component states are referenced by their index in the component space.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING
from typing import Tuple
from typing import Union

from .axioms import SasakiDomainError
from .lib.error import OrthologicError
from .space import SpaceError
from .space import product_space

if TYPE_CHECKING:
    from typing import Dict
    from typing import FrozenSet
    from typing import Iterable
    from typing import List

    from .space import OrthoSpace
    from .space import StateSet

LOG = logging.getLogger(__name__)

FAMILY_T = 'T'
FAMILY_A1 = 'A1'
FAMILY_A2 = 'A2'
FAMILY_S = 'S'
FAMILY_U = 'U'
FAMILY_P = 'P'

FAMILIES = (FAMILY_T, FAMILY_A1, FAMILY_A2, FAMILY_S, FAMILY_U, FAMILY_P)

# Outcomes of a product experiment, first letter for the first component
OUTCOMES = ('yy', 'yn', 'ny', 'nn')

# Named product experiments as the set of outcomes that count as "yes"
EXPERIMENTS = {
    'c1': frozenset({'yy', 'yn'}),
    'c2': frozenset({'yy', 'ny'}),
    'both': frozenset({'yy'}),
    'either': frozenset({'yy', 'yn', 'ny'}),
    'correlated': frozenset({'yy', 'nn'}),
}

Coordinate = Tuple[int, int]


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Row:
    first: int


@dataclass(frozen=True)
class Col:
    second: int


@dataclass(frozen=True)
class Point:
    first: int
    second: int


@dataclass(frozen=True)
class Butterfly:
    first: int
    second: int


@dataclass(frozen=True)
class Pair:
    """
    Two product states that differ in both coordinates.

    Use `make_pair` to get the canonical ordering of the states.

    """

    low: Coordinate
    high: Coordinate


SepElement = Union[Bottom, Top, Row, Col, Point, Butterfly, Pair]


class NotClosed(object):
    """Value returned when a set of states is not biorthogonally closed."""

    def __repr__(self):  # pragma: no cover
        return 'NOT_CLOSED'


NOT_CLOSED = NotClosed()

BOTTOM = Bottom()
TOP = Top()


class ClassificationError(OrthologicError):
    """Error raised when a closed set belongs to none of the families."""

    def __init__(self, states: str):
        self.states = states
        super().__init__(f'Closed set {states} does not belong to any family')


def make_pair(first: Coordinate, second: Coordinate) -> Pair:
    """
    Create a pair element with its states in canonical order.

    :param first: A product state as a pair of component state indexes.
    :param second: Another product state.

    :raises: ValueError

    """

    if first[0] == second[0] or first[1] == second[1]:
        raise ValueError(f'Pair states must differ in both coordinates: {first} {second}')

    return Pair(*sorted((first, second)))


def family(element: SepElement) -> str:
    """
    Get the family name of an element.

    :param element: A symbolic element.

    """

    if isinstance(element, (Bottom, Top)):
        return FAMILY_T
    elif isinstance(element, Row):
        return FAMILY_A1
    elif isinstance(element, Col):
        return FAMILY_A2
    elif isinstance(element, Point):
        return FAMILY_S
    elif isinstance(element, Butterfly):
        return FAMILY_U

    return FAMILY_P


def _from_points(points: List[Coordinate]) -> SepElement:
    # Subsets of points and pairs are empty, a point or the whole pair
    if not points:
        return BOTTOM
    elif len(points) == 1:
        return Point(*points[0])

    return make_pair(points[0], points[1])


class SeparatedProduct(object):
    """
    Separated product of two MO type orthogonality spaces.

    The symbolic operations are computed by case analysis on the families
    and never touch the literal state sets, except for `denote` and
    `classify` which translate between both representations.

    """

    def __init__(self, first: OrthoSpace, second: OrthoSpace):
        """
        Constructor.

        :param first: The first component.
        :param second: The second component.

        :raises: SpaceError

        """

        for component in (first, second):
            if not component.is_mo_type():
                raise SpaceError('Symbolic products need components where each state has a unique orthogonal state')

        self.__first = first
        self.__second = second
        self.__space = product_space(first, second)
        self.__anti1 = [first.get_antipode(index) for index in range(len(first))]
        self.__anti2 = [second.get_antipode(index) for index in range(len(second))]

    def __repr__(self):  # pragma: no cover
        return f'<SeparatedProduct {len(self.__first)}x{len(self.__second)}>'

    @property
    def space(self) -> OrthoSpace:
        return self.__space

    @property
    def components(self) -> Tuple[OrthoSpace, OrthoSpace]:
        return (self.__first, self.__second)

    def is_classical(self) -> bool:
        """Check if any component has only orthogonal states."""

        return not (self.__first.is_nontrivial() and self.__second.is_nontrivial())

    def get_elements(self) -> List[SepElement]:
        """Get all the symbolic elements, family by family."""

        size1 = len(self.__first)
        size2 = len(self.__second)
        points = [(index1, index2) for index1 in range(size1) for index2 in range(size2)]
        elements: List[SepElement] = [BOTTOM, TOP]
        elements.extend(Row(index) for index in range(size1))
        elements.extend(Col(index) for index in range(size2))
        elements.extend(Point(*point) for point in points)
        elements.extend(Butterfly(*point) for point in points)
        for position, low in enumerate(points):
            for high in points[position + 1:]:
                if low[0] != high[0] and low[1] != high[1]:
                    elements.append(Pair(low, high))

        return elements

    def histogram(self, elements: Iterable[SepElement] = None) -> Dict[str, int]:
        """
        Count elements per family.

        :param elements: Optional elements to count, by default all of them.

        """

        counts = {name: 0 for name in FAMILIES}
        for element in (self.get_elements() if elements is None else elements):
            counts[family(element)] += 1

        return counts

    def is_antipodal(self, element: SepElement) -> bool:
        """
        Check if an element is a pair of antipodal product states.

        :param element: A symbolic element.

        """

        if not isinstance(element, Pair):
            return False

        return element.high == (self.__anti1[element.low[0]], self.__anti2[element.low[1]])

    def contains(self, element: SepElement, point: Coordinate) -> bool:
        """
        Check if a product state belongs to the set an element denotes.

        :param element: A symbolic element.
        :param point: A product state as a pair of component state indexes.

        """

        if isinstance(element, Top):
            return True
        elif isinstance(element, Bottom):
            return False
        elif isinstance(element, Row):
            return point[0] == element.first
        elif isinstance(element, Col):
            return point[1] == element.second
        elif isinstance(element, Point):
            return point == (element.first, element.second)
        elif isinstance(element, Butterfly):
            return point[0] == element.first or point[1] == element.second

        return point == element.low or point == element.high

    def denote(self, element: SepElement) -> StateSet:
        """
        Get the set of product states of an element.

        :param element: A symbolic element.

        """

        space = self.__space
        return space.subset(
            space.get_pair_index(index1, index2)
            for index1 in range(len(self.__first))
            for index2 in range(len(self.__second))
            if self.contains(element, (index1, index2))
        )

    def classify(self, states: StateSet) -> Union[SepElement, NotClosed]:
        """
        Get the element that denotes a set of product states.

        :param states: A set of states of the product space.

        :raises: ClassificationError

        """

        space = self.__space
        if not space.is_closed(states):
            return NOT_CLOSED

        points = [space.get_coordinates(index) for index in states]
        size1 = len(self.__first)
        size2 = len(self.__second)
        if not points:
            return BOTTOM
        elif len(points) == size1 * size2:
            return TOP
        elif len(points) == 1:
            return Point(*points[0])
        elif len(points) == 2 and points[0][0] != points[1][0] and points[0][1] != points[1][1]:
            return make_pair(points[0], points[1])

        # Rows and columns fully included in the set
        members = set(points)
        rows = [index1 for index1 in range(size1) if all((index1, index2) in members for index2 in range(size2))]
        cols = [index2 for index2 in range(size2) if all((index1, index2) in members for index1 in range(size1))]
        if len(rows) == 1 and not cols and len(points) == size2:
            return Row(rows[0])
        elif len(cols) == 1 and not rows and len(points) == size1:
            return Col(cols[0])
        elif len(rows) == 1 and len(cols) == 1 and len(points) == size1 + size2 - 1:
            return Butterfly(rows[0], cols[0])

        raise ClassificationError(states.render())

    def perp(self, element: SepElement) -> SepElement:
        """
        Get the orthocomplement of an element.

        The complement of a pair {(p1, p2), (q1, q2)} is the crossed pair
        {(p1*, q2*), (q1*, p2*)}.

        :param element: A symbolic element.

        """

        anti1 = self.__anti1
        anti2 = self.__anti2
        if isinstance(element, Bottom):
            return TOP
        elif isinstance(element, Top):
            return BOTTOM
        elif isinstance(element, Row):
            return Row(anti1[element.first])
        elif isinstance(element, Col):
            return Col(anti2[element.second])
        elif isinstance(element, Point):
            return Butterfly(anti1[element.first], anti2[element.second])
        elif isinstance(element, Butterfly):
            return Point(anti1[element.first], anti2[element.second])

        (p1, p2), (q1, q2) = element.low, element.high
        return make_pair((anti1[p1], anti2[q2]), (anti1[q1], anti2[p2]))

    def printed_pair_perp(self, element: Pair) -> StateSet:
        """
        Get the set {(p1*, q2*), (q1*, q2*)} for a pair {(p1, p2), (q1, q2)}.

        This is the complement row for pairs as it is usually printed. It
        differs from `perp`, so it is only used to report where both disagree.

        :param element: A pair element.

        """

        (p1, _), (q1, q2) = element.low, element.high
        space = self.__space
        return space.subset([
            space.get_pair_index(self.__anti1[p1], self.__anti2[q2]),
            space.get_pair_index(self.__anti1[q1], self.__anti2[q2]),
        ])

    def meet(self, first: SepElement, second: SepElement) -> SepElement:
        """
        Get the element that denotes the intersection of two elements.

        :param first: A symbolic element.
        :param second: Another symbolic element.

        """

        if isinstance(first, Bottom) or isinstance(second, Bottom):
            return BOTTOM
        elif isinstance(first, Top):
            return second
        elif isinstance(second, Top):
            return first
        elif isinstance(first, (Point, Pair)):
            return _from_points([point for point in _points(first) if self.contains(second, point)])
        elif isinstance(second, (Point, Pair)):
            return _from_points([point for point in _points(second) if self.contains(first, point)])

        # Only rows, columns and butterflies are left
        if isinstance(first, Butterfly) and not isinstance(second, Butterfly):
            first, second = second, first

        if isinstance(first, Row):
            if isinstance(second, Row):
                return first if first == second else BOTTOM
            elif isinstance(second, Col):
                return Point(first.first, second.second)

            return first if first.first == second.first else Point(first.first, second.second)
        elif isinstance(first, Col):
            if isinstance(second, Col):
                return first if first == second else BOTTOM
            elif isinstance(second, Row):
                return Point(second.first, first.second)

            return first if first.second == second.second else Point(second.first, first.second)

        if first == second:
            return first
        elif first.first == second.first:
            return Row(first.first)
        elif first.second == second.second:
            return Col(first.second)

        return make_pair((first.first, second.second), (second.first, first.second))

    def join(self, first: SepElement, second: SepElement) -> SepElement:
        """
        Get the least element above two elements.

        :param first: A symbolic element.
        :param second: Another symbolic element.

        """

        return self.perp(self.meet(self.perp(first), self.perp(second)))

    def leq(self, first: SepElement, second: SepElement) -> bool:
        return self.meet(first, second) == first

    def sasaki(self, element: SepElement, state: int) -> SepElement:
        """
        Apply the Sasaki map of an element to a product state.

        The image is the closure of the state together with the perp of the
        element, intersected with the element.

        :param element: A symbolic element.
        :param state: A state index of the product space.

        :raises: SasakiDomainError

        """

        point = self.__space.get_coordinates(state)
        if self.contains(self.perp(element), point):
            raise SasakiDomainError(self.__space.get_name(state), self.render(element))

        return self.meet(self.perp(self.meet(self.perp(Point(*point)), element)), element)

    def experiment_property(self, first: int, second: int, outcomes: Iterable[str]) -> SepElement:
        """
        Get the property tested by a product yes/no experiment.

        Each component experiment is attached to a component state. It answers
        "y" for that state, "n" for its orthogonal state and can answer both
        for any other state. The product experiment answers yes when the outcome
        pair is one of the given outcomes, so a product state has the property
        when every outcome it can produce is one of them.

        :param first: State index of the first component experiment.
        :param second: State index of the second component experiment.
        :param outcomes: The outcomes that count as "yes", among "yy", "yn", "ny" and "nn".

        :raises: ValueError

        """

        accepted = frozenset(outcomes)
        unknown = accepted - set(OUTCOMES)
        if unknown:
            raise ValueError(f'Unknown experiment outcomes: {", ".join(sorted(unknown))}')

        answers1 = [self.__answers(index, first, self.__anti1) for index in range(len(self.__first))]
        answers2 = [self.__answers(index, second, self.__anti2) for index in range(len(self.__second))]
        space = self.__space
        states = space.subset(
            space.get_pair_index(index1, index2)
            for index1, out1 in enumerate(answers1)
            for index2, out2 in enumerate(answers2)
            if all(a + b in accepted for a in out1 for b in out2)
        )

        element = self.classify(states)
        if isinstance(element, NotClosed):  # pragma: no cover
            raise ValueError(f'Experiment property {states.render()} is not closed')

        return element

    def invert_experiment(self, first: int, second: int, outcomes: Iterable[str]) -> SepElement:
        """
        Get the property tested by the experiment with yes and no swapped.

        :param first: State index of the first component experiment.
        :param second: State index of the second component experiment.
        :param outcomes: The outcomes that count as "yes" before the swap.

        :raises: ValueError

        """

        accepted = frozenset(outcomes)
        return self.experiment_property(first, second, [outcome for outcome in OUTCOMES if outcome not in accepted])

    def render(self, element: SepElement) -> str:
        """
        Render an element with the component state names.

        :param element: A symbolic element.

        """

        name1 = self.__first.get_name
        name2 = self.__second.get_name
        if isinstance(element, Bottom):
            return 'Bottom'
        elif isinstance(element, Top):
            return 'Top'
        elif isinstance(element, Row):
            return f'Row({name1(element.first)})'
        elif isinstance(element, Col):
            return f'Col({name2(element.second)})'
        elif isinstance(element, Point):
            return f'Point({name1(element.first)},{name2(element.second)})'
        elif isinstance(element, Butterfly):
            return f'Butterfly({name1(element.first)},{name2(element.second)})'

        low, high = element.low, element.high
        return f'Pair{{({name1(low[0])},{name2(low[1])}),({name1(high[0])},{name2(high[1])})}}'

    @staticmethod
    def __answers(index: int, state: int, antipodes: List[int]) -> FrozenSet[str]:
        if index == state:
            return frozenset('y')
        elif index == antipodes[state]:
            return frozenset('n')

        return frozenset('yn')


def _points(element: Union[Point, Pair]) -> List[Coordinate]:
    if isinstance(element, Point):
        return [(element.first, element.second)]

    return [element.low, element.high]
