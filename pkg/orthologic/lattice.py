# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from .lib import msgpack
from .lib.error import OrthologicError
from .space import DEFAULT_CAP
from .space import ForeignElementError
from .space import StateSet
from .space import enumerate_closed
from .space import iter_bits

if TYPE_CHECKING:
    from typing import Dict
    from typing import Iterable
    from typing import List

    from .space import OrthoSpace

LOG = logging.getLogger(__name__)

# Lattices with at least this many elements answer cover queries from a cache
COVER_SCAN_LIMIT = 10000


class OrthoLawError(OrthologicError):
    """Error raised when an orthocomplement does not satisfy the ortholattice laws."""

    def __init__(self, element: str, law: str):
        self.element = element
        self.law = law
        super().__init__(f'Orthocomplement fails for {element}: {law}')


class Lattice(object):
    """
    Base class for finite bounded lattices with indexed elements.

    Elements are the integers `0..size-1`. The checkers in the axioms module
    only use the operations defined here, so they work with any subclass.

    """

    def __len__(self):
        return self.size()

    def size(self) -> int:  # pragma: no cover
        raise NotImplementedError()

    def get_elements(self) -> Iterable[int]:
        return range(self.size())

    def get_bottom(self) -> int:  # pragma: no cover
        raise NotImplementedError()

    def get_top(self) -> int:  # pragma: no cover
        raise NotImplementedError()

    def get_atoms(self) -> List[int]:  # pragma: no cover
        raise NotImplementedError()

    def is_atom(self, element: int) -> bool:
        return element in self.get_atoms()

    def leq(self, first: int, second: int) -> bool:  # pragma: no cover
        raise NotImplementedError()

    def lt(self, first: int, second: int) -> bool:
        return first != second and self.leq(first, second)

    def meet(self, first: int, second: int) -> int:  # pragma: no cover
        raise NotImplementedError()

    def join(self, first: int, second: int) -> int:  # pragma: no cover
        raise NotImplementedError()

    def ortho(self, element: int) -> int:  # pragma: no cover
        raise NotImplementedError()

    def render(self, element: int) -> str:  # pragma: no cover
        raise NotImplementedError()

    def atoms_below(self, element: int) -> List[int]:
        """
        Get the atoms below an element.

        :param element: An element of the lattice.

        """

        return [atom for atom in self.get_atoms() if self.leq(atom, element)]

    def upper_covers(self, element: int) -> List[int]:
        """
        Get the elements that cover an element, in index order.

        :param element: An element of the lattice.

        """

        above = [other for other in self.get_elements() if self.lt(element, other)]
        return [
            other
            for other in above
            if not any(self.lt(middle, other) for middle in above)
        ]

    def covers(self, lower: int, upper: int) -> bool:
        """
        Check that an element covers another one.

        :param lower: The element below.
        :param upper: The element above.

        """

        if not self.lt(lower, upper):
            return False

        for middle in self.get_elements():
            if self.lt(lower, middle) and self.lt(middle, upper):
                return False

        return True

    def between(self, lower: int, upper: int) -> List[int]:
        """
        Get the elements strictly between two elements, in index order.

        :param lower: The element below.
        :param upper: The element above.

        """

        return [
            middle
            for middle in self.get_elements()
            if self.lt(lower, middle) and self.lt(middle, upper)
        ]


class PropertyLattice(Lattice):
    """
    The lattice of the biorthogonally closed sets of an orthogonality space.

    Each element is the index of a closed set in the enumeration order, which
    is by cardinality and then lexicographic. The set of an element is also the
    set of states that actualize it.

    """

    def __init__(self, space: OrthoSpace, closed: List[StateSet]):
        """
        Constructor.

        Use `from_space` to enumerate the closed sets of a space.

        :param space: The orthogonality space.
        :param closed: All the closed sets of the space in enumeration order.

        """

        self.__space = space
        self.__sets = list(closed)
        self.__masks = [states.mask for states in self.__sets]
        self.__index: Dict[int, int] = {mask: index for index, mask in enumerate(self.__masks)}
        self.__bottom = self.__index[0]
        self.__top = self.__index[space.full().mask]
        self.__perp = [self.__index[space.perp_mask(mask)] for mask in self.__masks]
        self.__cover_cache: Dict[int, List[int]] = {}

        # Enumeration order puts smaller sets first, so an element is an atom
        # when no atom found before it is a strict subset of it.
        atoms: List[int] = []
        for index, mask in enumerate(self.__masks):
            if mask and not any(self.__masks[atom] & ~mask == 0 for atom in atoms):
                atoms.append(index)

        self.__atoms = atoms
        self.__atom_set = frozenset(atoms)

    def __repr__(self):  # pragma: no cover
        return f'<PropertyLattice elements={len(self.__masks)}>'

    @classmethod
    def from_space(cls, space: OrthoSpace, cap: int = DEFAULT_CAP) -> PropertyLattice:
        """
        Create the property lattice of a space.

        :param space: The orthogonality space.
        :param cap: Maximum number of elements to accept.

        :raises: CapExceededError

        """

        lattice = cls(space, enumerate_closed(space, cap=cap))
        LOG.debug(f'Property lattice has {lattice.size()} elements and {len(lattice.get_atoms())} atoms')
        return lattice

    @property
    def space(self) -> OrthoSpace:
        return self.__space

    def size(self) -> int:
        return len(self.__masks)

    def get_bottom(self) -> int:
        return self.__bottom

    def get_top(self) -> int:
        return self.__top

    def get_atoms(self) -> List[int]:
        return list(self.__atoms)

    def is_atom(self, element: int) -> bool:
        return element in self.__atom_set

    def get_set(self, element: int) -> StateSet:
        """
        Get the closed set of states of an element.

        :param element: An element of the lattice.

        """

        return self.__sets[element]

    def get_sets(self) -> List[StateSet]:
        return list(self.__sets)

    def get_mask(self, element: int) -> int:
        return self.__masks[element]

    def has_mask(self, mask: int) -> bool:
        return mask in self.__index

    def get_index(self, states: StateSet) -> int:
        """
        Get the element for a closed set of states.

        :param states: A closed set of states of the lattice space.

        :raises: ForeignElementError, ValueError

        """

        if states.space is not self.__space and states.space != self.__space:
            raise ForeignElementError()

        return self.index_of_mask(states.mask)

    def index_of_mask(self, mask: int) -> int:
        """
        Get the element for the bitset of a closed set.

        :param mask: A bitset of states.

        :raises: ValueError

        """

        try:
            return self.__index[mask]
        except KeyError:
            raise ValueError(f'The set {self.__space.from_mask(mask)} is not biorthogonally closed')

    def closure_of(self, states: StateSet) -> int:
        """
        Get the element for the closure of a set of states.

        :param states: A set of states of the lattice space.

        """

        return self.__index[self.__space.closure(states).mask]

    def get_atom_of_state(self, state: int) -> int:
        """
        Get the element for the closure of a single state.

        :param state: A state index.

        """

        return self.__index[self.__closure_mask(1 << state)]

    def leq(self, first: int, second: int) -> bool:
        return self.__masks[first] & ~self.__masks[second] == 0

    def meet(self, first: int, second: int) -> int:
        # Intersections of closed sets are closed
        return self.__index[self.__masks[first] & self.__masks[second]]

    def join(self, first: int, second: int) -> int:
        return self.__perp[self.__index[self.__masks[self.__perp[first]] & self.__masks[self.__perp[second]]]]

    def ortho(self, element: int) -> int:
        return self.__perp[element]

    def render(self, element: int) -> str:
        return self.__sets[element].render()

    def upper_covers(self, element: int) -> List[int]:
        """
        Get the elements that cover an element, in index order.

        Every element strictly above contains the closure of the element
        with one more state added, so the covers are the minimal closures
        of that form.

        :param element: An element of the lattice.

        """

        if element in self.__cover_cache:
            return list(self.__cover_cache[element])

        mask = self.__masks[element]
        candidates = set()
        for state in iter_bits(self.__space.full().mask & ~mask):
            candidates.add(self.__closure_mask(mask | 1 << state))

        result = sorted(
            self.__index[candidate]
            for candidate in candidates
            if not any(other != candidate and other & ~candidate == 0 for other in candidates)
        )
        self.__cover_cache[element] = result
        return list(result)

    def covers(self, lower: int, upper: int) -> bool:
        if self.size() < COVER_SCAN_LIMIT:
            return super().covers(lower, upper)

        return upper in self.upper_covers(lower)

    def __closure_mask(self, mask: int) -> int:
        return self.__space.perp_mask(self.__space.perp_mask(mask))


# Format marker for lattice snapshots
SNAPSHOT_FORMAT = 'orthologic-lattice'
SNAPSHOT_VERSION = 1


def dump_lattice(lattice: PropertyLattice) -> bytes:
    """
    Serialize a property lattice to a MessagePack snapshot.

    :param lattice: The property lattice.

    """

    return msgpack.pack({
        'format': SNAPSHOT_FORMAT,
        'version': SNAPSHOT_VERSION,
        'space': lattice.space,
        'closed': lattice.get_sets(),
    })


def load_lattice(data: bytes) -> PropertyLattice:
    """
    Create a property lattice from a MessagePack snapshot.

    :param data: The snapshot contents.

    :raises: ValueError

    """

    try:
        snapshot = msgpack.unpack(data)
    except Exception as error:
        raise ValueError(f'Invalid lattice snapshot: {error}')

    if not isinstance(snapshot, dict) or snapshot.get('format') != SNAPSHOT_FORMAT:
        raise ValueError('Invalid lattice snapshot: unknown format')

    if snapshot.get('version') != SNAPSHOT_VERSION:
        raise ValueError(f'Unsupported lattice snapshot version: {snapshot.get("version")}')

    space = snapshot.get('space')
    if space is None:
        raise ValueError('Invalid lattice snapshot: missing space')

    try:
        return PropertyLattice(space, [space.from_mask(mask) for mask in snapshot.get('closed') or []])
    except (KeyError, AttributeError, TypeError):
        raise ValueError('Invalid lattice snapshot: the closed sets do not match the space')
