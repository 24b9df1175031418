# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Finite orthogonality spaces.

A space is a list of named states together with a symmetric and irreflexive
orthogonality relation. Subsets of states are bitsets, where bit `i` stands
for the state with index `i`.

"""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from .lib.error import CapExceededError
from .lib.error import OrthologicError

if TYPE_CHECKING:
    from random import Random
    from typing import Iterable
    from typing import Iterator
    from typing import List
    from typing import Optional
    from typing import Sequence
    from typing import Tuple

LOG = logging.getLogger(__name__)

# Default bound for the number of closed sets a lattice may have
DEFAULT_CAP = 100000

# Characters used to build the state names of product spaces
RESERVED_CHARACTERS = '(),'


class SpaceError(OrthologicError):
    """Error raised when an orthogonality space description is invalid."""


class EmptySpaceError(SpaceError):
    """Error raised when a space has no states."""

    def __init__(self):
        super().__init__('An orthogonality space needs at least one state')


class DuplicateStateError(SpaceError):
    """Error raised when a state name is used more than once."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'Duplicate state name: "{name}"')


class UnknownStateError(SpaceError):
    """Error raised when a state name is not defined in a space."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'Unknown state name: "{name}"')


class InvalidStateNameError(SpaceError):
    """Error raised when a state name contains a character reserved for product names."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'State name "{name}" cannot contain any of "{RESERVED_CHARACTERS}"')


class ReflexivePairError(SpaceError):
    """Error raised when a state is declared orthogonal to itself."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'State "{name}" cannot be orthogonal to itself')


class ForeignElementError(OrthologicError):
    """Error raised when a state set is used with a space it does not belong to."""

    def __init__(self):
        super().__init__('State set belongs to a different orthogonality space')


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterate the indexes of the bits set in a mask, in ascending order.

    :param mask: A bitset.

    """

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class StateSet(object):
    """A subset of the states of an orthogonality space."""

    def __init__(self, space: OrthoSpace, mask: int):
        """
        Constructor.

        :param space: The space the states belong to.
        :param mask: Bitset with the state indexes.

        """

        self.__space = space
        self.__mask = mask

    def __repr__(self):  # pragma: no cover
        return f'<StateSet {self.render()}>'

    def __str__(self):
        return self.render()

    def __eq__(self, other):
        if not isinstance(other, StateSet):
            return NotImplemented

        return self.__mask == other.mask and self.__space == other.space

    def __hash__(self):
        return hash(self.__mask)

    def __len__(self):
        return popcount(self.__mask)

    def __iter__(self):
        return iter_bits(self.__mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.__mask >> index & 1)

    def __and__(self, other: StateSet) -> StateSet:
        return StateSet(self.__space, self.__mask & self.__check(other).mask)

    def __or__(self, other: StateSet) -> StateSet:
        return StateSet(self.__space, self.__mask | self.__check(other).mask)

    def __sub__(self, other: StateSet) -> StateSet:
        return StateSet(self.__space, self.__mask & ~self.__check(other).mask)

    def __le__(self, other: StateSet) -> bool:
        return self.__mask & ~self.__check(other).mask == 0

    def __lt__(self, other: StateSet) -> bool:
        return self <= other and self.__mask != other.mask

    def __check(self, other: StateSet) -> StateSet:
        if other.space is not self.__space and other.space != self.__space:
            raise ForeignElementError()

        return other

    @property
    def space(self) -> OrthoSpace:
        return self.__space

    @property
    def mask(self) -> int:
        return self.__mask

    def is_empty(self) -> bool:
        return self.__mask == 0

    def get_members(self) -> Tuple[int, ...]:
        """Get the state indexes in ascending order."""

        return tuple(iter_bits(self.__mask))

    def get_names(self) -> List[str]:
        """Get the state names in index order."""

        return [self.__space.get_name(index) for index in iter_bits(self.__mask)]

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Key that orders sets by cardinality and then lexicographically."""

        members = self.get_members()
        return (len(members), members)

    def render(self) -> str:
        """Render the set with its states in index order."""

        return '{' + ', '.join(self.get_names()) + '}'


class OrthoSpace(object):
    """
    A finite set of states with an orthogonality relation.

    The relation is stored as one neighbour mask per state, which is
    the bitset of the states orthogonal to it.

    Spaces created by `product_space` remember their two factors and
    index the pair (i1, i2) as `i1 * size2 + i2`.

    """

    def __init__(self, names: Sequence[str], neighbours: Sequence[int], factors: Tuple[OrthoSpace, OrthoSpace] = None):
        """
        Constructor.

        Use `make_space`, `mo_space` or `product_space` to create validated spaces.

        :param names: The state names in index order.
        :param neighbours: For each state the bitset of its orthogonal states.
        :param factors: Optional factors when the space is a product.

        """

        self.__names = tuple(names)
        self.__neighbours = tuple(neighbours)
        self.__indexes = {name: index for index, name in enumerate(self.__names)}
        self.__full = (1 << len(self.__names)) - 1
        self.__factors = factors

    def __repr__(self):  # pragma: no cover
        return f'<OrthoSpace states={len(self.__names)}>'

    def __eq__(self, other):
        if not isinstance(other, OrthoSpace):
            return NotImplemented

        if other is self:
            return True

        return self.__names == other.get_names() and self.__neighbours == other.get_neighbours()

    def __hash__(self):
        return hash((self.__names, self.__neighbours))

    def __len__(self):
        return len(self.__names)

    @property
    def factors(self) -> Optional[Tuple[OrthoSpace, OrthoSpace]]:
        """Get the factors when the space is a product, otherwise None."""

        return self.__factors

    def get_names(self) -> Tuple[str, ...]:
        return self.__names

    def get_neighbours(self) -> Tuple[int, ...]:
        return self.__neighbours

    def get_name(self, index: int) -> str:
        return self.__names[index]

    def get_index(self, name: str) -> int:
        """
        Get the index of a state.

        :param name: The state name.

        :raises: UnknownStateError

        """

        try:
            return self.__indexes[name]
        except KeyError:
            raise UnknownStateError(name)

    def is_orthogonal(self, first: int, second: int) -> bool:
        return bool(self.__neighbours[first] >> second & 1)

    def get_pairs(self) -> List[Tuple[int, int]]:
        """Get the orthogonal pairs (i, j) with i < j, in index order."""

        return [
            (first, second)
            for first, mask in enumerate(self.__neighbours)
            for second in iter_bits(mask)
            if first < second
        ]

    def empty(self) -> StateSet:
        return StateSet(self, 0)

    def full(self) -> StateSet:
        return StateSet(self, self.__full)

    def singleton(self, index: int) -> StateSet:
        return StateSet(self, 1 << index)

    def subset(self, states: Iterable) -> StateSet:
        """
        Create a state set from state names or indexes.

        :param states: The state names or indexes.

        :raises: UnknownStateError

        """

        mask = 0
        for state in states:
            mask |= 1 << (state if isinstance(state, int) else self.get_index(state))

        return StateSet(self, mask)

    def from_mask(self, mask: int) -> StateSet:
        return StateSet(self, mask & self.__full)

    def perp_mask(self, mask: int) -> int:
        """
        Get the bitset of the states orthogonal to every state in a bitset.

        :param mask: A bitset of states.

        """

        result = self.__full
        for index in iter_bits(mask):
            result &= self.__neighbours[index]
            if not result:
                break

        return result

    def perp(self, states: StateSet) -> StateSet:
        """
        Get the states orthogonal to all the given states.

        The perp of the empty set is the full space.

        :param states: A set of states of this space.

        :raises: ForeignElementError

        """

        return StateSet(self, self.perp_mask(self.__own(states).mask))

    def closure(self, states: StateSet) -> StateSet:
        """
        Get the biorthogonal closure of a set of states.

        :param states: A set of states of this space.

        :raises: ForeignElementError

        """

        return StateSet(self, self.perp_mask(self.perp_mask(self.__own(states).mask)))

    def is_closed(self, states: StateSet) -> bool:
        return self.closure(states) == states

    def is_t1(self) -> bool:
        """Check that every singleton is biorthogonally closed."""

        return all(self.perp_mask(self.__neighbours[index]) == 1 << index for index in range(len(self.__names)))

    def is_nontrivial(self) -> bool:
        """Check that some pair of distinct states is not orthogonal."""

        return any(
            self.__neighbours[index] | 1 << index != self.__full
            for index in range(len(self.__names))
        )

    def is_mo_type(self) -> bool:
        """Check that every state is orthogonal to exactly one other state."""

        return all(popcount(mask) == 1 for mask in self.__neighbours)

    def get_antipode(self, index: int) -> int:
        """
        Get the only state orthogonal to a state of an MO type space.

        :param index: A state index.

        :raises: ValueError

        """

        mask = self.__neighbours[index]
        if popcount(mask) != 1:
            raise ValueError(f'State "{self.__names[index]}" does not have a unique orthogonal state')

        return mask.bit_length() - 1

    def get_coordinates(self, index: int) -> Tuple[int, int]:
        """
        Get the factor state indexes of a product state.

        :param index: A state index of a product space.

        :raises: ValueError

        """

        if not self.__factors:
            raise ValueError('The space is not a product space')

        return divmod(index, len(self.__factors[1]))

    def get_pair_index(self, first: int, second: int) -> int:
        """
        Get the product state index for a pair of factor states.

        :param first: A state index of the first factor.
        :param second: A state index of the second factor.

        :raises: ValueError

        """

        if not self.__factors:
            raise ValueError('The space is not a product space')

        return first * len(self.__factors[1]) + second

    def cartesian(self, first: StateSet, second: StateSet) -> StateSet:
        """
        Get the product set of two factor state sets.

        :param first: A state set of the first factor.
        :param second: A state set of the second factor.

        :raises: ValueError

        """

        mask = 0
        for index1 in first:
            for index2 in second:
                mask |= 1 << self.get_pair_index(index1, index2)

        return StateSet(self, mask)

    def __own(self, states: StateSet) -> StateSet:
        if states.space is not self and states.space != self:
            raise ForeignElementError()

        return states


def has_reserved_characters(name: str) -> bool:
    """Check if a state name contains characters used by product state names."""

    return any(character in name for character in RESERVED_CHARACTERS)


def make_space(names: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> OrthoSpace:
    """
    Create an orthogonality space.

    The relation is the symmetric closure of the pairs, and states are
    indexed by their position in the names list.

    :param names: The distinct state names.
    :param pairs: Unordered pairs of orthogonal state names.

    :raises: EmptySpaceError, DuplicateStateError, InvalidStateNameError,
        UnknownStateError, ReflexivePairError

    """

    if not names:
        raise EmptySpaceError()

    indexes = {}
    for index, name in enumerate(names):
        if name in indexes:
            raise DuplicateStateError(name)
        elif has_reserved_characters(name):
            raise InvalidStateNameError(name)

        indexes[name] = index

    neighbours = [0] * len(names)
    for first, second in pairs:
        for name in (first, second):
            if name not in indexes:
                raise UnknownStateError(name)

        if first == second:
            raise ReflexivePairError(first)

        neighbours[indexes[first]] |= 1 << indexes[second]
        neighbours[indexes[second]] |= 1 << indexes[first]

    return OrthoSpace(names, neighbours)


def mo_space(n: int) -> OrthoSpace:
    """
    Create the space of n antipodal state pairs.

    States are named p1..pn followed by p1*..pn*, and each state is only
    orthogonal to its starred partner.

    :param n: The number of antipodal pairs.

    :raises: SpaceError

    """

    if n < 1:
        raise SpaceError(f'MO spaces need a positive number of state pairs, got {n}')

    names = [f'p{i}' for i in range(1, n + 1)]
    starred = [f'{name}*' for name in names]
    return make_space(names + starred, list(zip(names, starred)))


def product_space(first: OrthoSpace, second: OrthoSpace) -> OrthoSpace:
    """
    Create the separated product of two orthogonality spaces.

    Two pairs are orthogonal when their first or their second
    coordinates are orthogonal.

    :param first: The first factor.
    :param second: The second factor.

    :raises: DuplicateStateError

    """

    size1 = len(first)
    size2 = len(second)
    names = [f'({name1},{name2})' for name1 in first.get_names() for name2 in second.get_names()]
    if len(set(names)) != len(names):
        raise DuplicateStateError(next(name for name in names if names.count(name) > 1))

    # Masks for "any state in these rows" and "any state in these columns"
    full_row = (1 << size2) - 1
    full_col = sum(1 << (index1 * size2) for index1 in range(size1))

    neighbours = []
    for index1 in range(size1):
        rows = 0
        for other1 in iter_bits(first.get_neighbours()[index1]):
            rows |= full_row << (other1 * size2)

        for index2 in range(size2):
            cols = 0
            for other2 in iter_bits(second.get_neighbours()[index2]):
                cols |= full_col << other2

            neighbours.append(rows | cols)

    return OrthoSpace(names, neighbours, factors=(first, second))


def enumerate_closed(space: OrthoSpace, cap: int = DEFAULT_CAP) -> List[StateSet]:
    """
    Enumerate all the biorthogonally closed sets of a space.

    Every perp is an intersection of singleton perps, so the closed sets
    are the full space together with all the intersections of singleton
    perps. The empty set is always included because it is the perp of the
    full space.

    Sets are ordered by cardinality and then lexicographically.

    :param space: The orthogonality space.
    :param cap: Maximum number of closed sets to accept.

    :raises: CapExceededError

    """

    family = {space.full().mask}
    for mask in sorted(set(space.get_neighbours())):
        family |= {member & mask for member in family}
        if len(family) > cap:
            raise CapExceededError(cap)

    family.add(0)
    if len(family) > cap:
        raise CapExceededError(cap)

    LOG.debug(f'Enumerated {len(family)} closed sets over {len(space)} states')
    return sorted((StateSet(space, mask) for mask in family), key=StateSet.sort_key)


def random_space(rng: Random, max_states: int = 6, prefix: str = 's') -> OrthoSpace:
    """
    Create a random orthogonality space.

    States are first matched in antipodal pairs, with a leftover state
    joining a random pair, and then extra orthogonal pairs are added with
    a randomly chosen probability.

    :param rng: The random generator to use.
    :param max_states: Maximum number of states, at least 2.
    :param prefix: Optional prefix for the state names.

    """

    size = rng.randint(2, max(2, max_states))
    names = [f'{prefix}{i}' for i in range(size)]
    order = list(range(size))
    rng.shuffle(order)

    pairs = set()
    for i in range(0, size - 1, 2):
        pairs.add(frozenset((order[i], order[i + 1])))

    if size % 2:
        pairs.add(frozenset((order[-1], rng.choice(order[:-1]))))

    extra = rng.choice((0.0, 0.1, 0.25))
    for first in range(size):
        for second in range(first + 1, size):
            if rng.random() < extra:
                pairs.add(frozenset((first, second)))

    ordered = sorted(tuple(sorted(pair)) for pair in pairs)
    return make_space(names, [(names[first], names[second]) for first, second in ordered])
