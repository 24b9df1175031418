# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Checkers for lattice axioms.

Every checker scans elements in index order and returns the least
counterexample as a `Witness`, or None when the axiom holds.

"""
from __future__ import annotations

import logging
import random
from typing import TYPE_CHECKING

from .lattice import PropertyLattice
from .lib.error import CapExceededError
from .lib.error import OrthologicError
from .space import iter_bits
from .space import product_space
from .space import random_space

if TYPE_CHECKING:
    from typing import List
    from typing import Optional
    from typing import Tuple

    from .lattice import Lattice
    from .space import OrthoSpace
    from .space import StateSet

LOG = logging.getLogger(__name__)

ORTHOMODULARITY = 'orthomodularity'
COVERING = 'covering'
EXCHANGE = 'exchange'
ATOMISTIC = 'atomistic'
SASAKI = 'sasaki'
SUPERSELECTION = 'superselection'

# Bound for the closed sets of the random products scanned by random_products_run
RANDOM_PRODUCTS_CAP = 20000

# Number of random spaces to try before giving up on finding a valid component
RANDOM_PRODUCTS_ATTEMPTS = 10000


class SasakiDomainError(OrthologicError):
    """Error raised when a Sasaki projection is applied to an orthogonal state."""

    def __init__(self, state: str, element: str):
        self.state = state
        self.element = element
        super().__init__(f'State {state} is orthogonal to {element}')


class Witness(object):
    """A counterexample for a lattice axiom."""

    def __init__(self, kind: str, elements: Tuple[int, ...], narrative: str, image: StateSet = None):
        """
        Constructor.

        :param kind: The name of the violated axiom.
        :param elements: The offending lattice elements, or states for the state form of Sasaki witnesses.
        :param narrative: Rendering of the violation.
        :param image: Optional image for the state form of Sasaki witnesses.

        """

        self.__kind = kind
        self.__elements = tuple(elements)
        self.__narrative = narrative
        self.__image = image

    def __repr__(self):  # pragma: no cover
        return f'<Witness {self.__kind} {self.__elements}>'

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented

        return (self.__kind, self.__elements, self.__narrative) == (other.kind, other.elements, other.narrative)

    def __hash__(self):
        return hash((self.__kind, self.__elements))

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def elements(self) -> Tuple[int, ...]:
        return self.__elements

    @property
    def narrative(self) -> str:
        return self.__narrative

    @property
    def image(self) -> Optional[StateSet]:
        return self.__image

    def verify(self, lattice: Lattice) -> bool:
        """
        Check that the witness still violates its axiom in a lattice.

        :param lattice: The lattice the witness was found in.

        """

        if self.__kind == ORTHOMODULARITY:
            first, second = self.__elements
            return _breaks_orthomodularity(lattice, first, second)
        elif self.__kind == COVERING:
            atom, lower, middle = self.__elements
            upper = lattice.join(atom, lower)
            return (
                lattice.is_atom(atom)
                and lattice.meet(atom, lower) == lattice.get_bottom()
                and lattice.lt(lower, middle)
                and lattice.lt(middle, upper)
            )
        elif self.__kind == EXCHANGE:
            first, second, element = self.__elements
            return (
                lattice.is_atom(first)
                and lattice.is_atom(second)
                and _breaks_exchange(lattice, first, second, element)
            )
        elif self.__kind == ATOMISTIC:
            (element,) = self.__elements
            return _breaks_atomicity(lattice, element)
        elif self.__kind == SASAKI:
            if self.__image is not None:
                element, state = self.__elements
                if not isinstance(lattice, PropertyLattice):
                    return False

                if lattice.get_mask(lattice.ortho(element)) >> state & 1:
                    return False

                return len(sasaki_state(lattice, element, state)) != 1
            else:
                element, atom, image = self.__elements
                return (
                    not lattice.leq(atom, lattice.ortho(element))
                    and sasaki_lattice(lattice, element, atom) == image
                    and not lattice.is_atom(image)
                )
        elif self.__kind == SUPERSELECTION:
            first, second = self.__elements
            return (first, second) in {(a, b) for a, b, _ in superselection_pairs(lattice)}

        raise ValueError(f'Unknown witness kind: "{self.__kind}"')


class SasakiReport(object):
    """Result of a Sasaki regularity scan."""

    def __init__(self, witnesses: List[Witness], complete: bool = True):
        """
        Constructor.

        :param witnesses: The irregular projections found.
        :param complete: False when the scan stopped early.

        """

        self.__witnesses = list(witnesses)
        self.__complete = complete

    @property
    def regular(self) -> bool:
        return not self.__witnesses

    @property
    def complete(self) -> bool:
        return self.__complete

    @property
    def witnesses(self) -> List[Witness]:
        return list(self.__witnesses)


def _breaks_orthomodularity(lattice: Lattice, first: int, second: int) -> bool:
    if not lattice.leq(first, second):
        return False

    return lattice.join(first, lattice.meet(second, lattice.ortho(first))) != second


def _breaks_exchange(lattice: Lattice, first: int, second: int, element: int) -> bool:
    if lattice.meet(first, element) != lattice.get_bottom():
        return False

    if not lattice.leq(first, lattice.join(second, element)):
        return False

    return not lattice.leq(second, lattice.join(first, element))


def _join_all(lattice: Lattice, elements: List[int]) -> int:
    result = lattice.get_bottom()
    for element in elements:
        result = lattice.join(result, element)

    return result


def _breaks_atomicity(lattice: Lattice, element: int) -> bool:
    if _join_all(lattice, lattice.atoms_below(element)) != element:
        return True

    # A lattice with a single state set above bottom has no atom to generate it
    # unless the space itself has a single state.
    if element == lattice.get_top() and lattice.is_atom(element) and isinstance(lattice, PropertyLattice):
        return len(lattice.space) > 1

    return False


def check_orthomodular(lattice: Lattice) -> Optional[Witness]:
    """
    Check that a <= b implies b = a v (b ^ a').

    :param lattice: The lattice to check.

    """

    for first in lattice.get_elements():
        for second in lattice.get_elements():
            if _breaks_orthomodularity(lattice, first, second):
                middle = lattice.meet(second, lattice.ortho(first))
                upper = lattice.join(first, middle)
                narrative = (
                    f'{lattice.render(first)} <= {lattice.render(second)} but '
                    f'b ^ a\' = {lattice.render(middle)} and a v (b ^ a\') = {lattice.render(upper)}'
                )
                return Witness(ORTHOMODULARITY, (first, second), narrative)

    return None


def check_covering(lattice: Lattice) -> Optional[Witness]:
    """
    Check that p v x covers x for every atom p with p ^ x = 0.

    The witness holds the atom, the element and the least element
    strictly between the element and the join.

    :param lattice: The lattice to check.

    """

    bottom = lattice.get_bottom()
    for atom in lattice.get_atoms():
        for element in lattice.get_elements():
            if lattice.meet(atom, element) != bottom:
                continue

            upper = lattice.join(atom, element)
            if upper in lattice.upper_covers(element):
                continue

            middle = lattice.between(element, upper)[0]
            narrative = (
                f'p = {lattice.render(atom)}, x = {lattice.render(element)}: '
                f'{lattice.render(element)} < {lattice.render(middle)} < {lattice.render(upper)}'
            )
            return Witness(COVERING, (atom, element, middle), narrative)

    return None


def check_exchange(lattice: Lattice) -> Optional[Witness]:
    """
    Check that p ^ x = 0 and p <= q v x imply q <= p v x for atoms p and q.

    :param lattice: The lattice to check.

    """

    atoms = lattice.get_atoms()
    for first in atoms:
        for second in atoms:
            for element in lattice.get_elements():
                if _breaks_exchange(lattice, first, second, element):
                    narrative = (
                        f'p = {lattice.render(first)}, q = {lattice.render(second)}, '
                        f'x = {lattice.render(element)}: p <= q v x = {lattice.render(lattice.join(second, element))} '
                        f'but q is not below p v x = {lattice.render(lattice.join(first, element))}'
                    )
                    return Witness(EXCHANGE, (first, second, element), narrative)

    return None


def check_atomistic(lattice: Lattice) -> Optional[Witness]:
    """
    Check that every element is the join of the atoms below it.

    The full set is also reported when it is the only nonzero element of a
    space with more than one state.

    :param lattice: The lattice to check.

    """

    for element in lattice.get_elements():
        if _breaks_atomicity(lattice, element):
            atoms = lattice.atoms_below(element)
            generated = _join_all(lattice, atoms)
            narrative = (
                f'{lattice.render(element)} has atoms [{", ".join(lattice.render(atom) for atom in atoms)}] '
                f'which generate {lattice.render(generated)}'
            )
            return Witness(ATOMISTIC, (element,), narrative)

    return None


def superselection_pairs(lattice: Lattice) -> List[Tuple[int, int, bool]]:
    """
    Get the pairs of atoms separated by a superselection rule.

    Two atoms a and b are separated when every state of a v b is a state
    of a or a state of b. For lattices without states the atoms below a v b
    must be a and b only.

    Each pair comes with a flag that is True when the atoms are orthogonal.

    :param lattice: The lattice to scan.

    """

    pairs = []
    atoms = lattice.get_atoms()
    for position, first in enumerate(atoms):
        for second in atoms[position + 1:]:
            upper = lattice.join(first, second)
            if isinstance(lattice, PropertyLattice):
                separated = lattice.get_mask(upper) == lattice.get_mask(first) | lattice.get_mask(second)
            else:
                separated = lattice.atoms_below(upper) == sorted((first, second))

            if separated:
                pairs.append((first, second, lattice.leq(first, lattice.ortho(second))))

    return pairs


def sasaki_lattice(lattice: Lattice, element: int, other: int) -> int:
    """
    Apply the Sasaki projection of an element to another element.

    The projection maps x to (x v a') ^ a.

    :param lattice: The lattice.
    :param element: The element a that defines the projection.
    :param other: The element x to project.

    """

    return lattice.meet(lattice.join(other, lattice.ortho(element)), element)


def sasaki_of_set(space: OrthoSpace, states: StateSet, state: int) -> StateSet:
    """
    Apply the Sasaki map of a closed set to a state.

    The image is the closure of the state together with the perp of the
    set, intersected with the set.

    :param space: The orthogonality space.
    :param states: A closed set of states.
    :param state: A state index.

    """

    perp = space.perp_mask(states.mask)
    closure = space.perp_mask(space.perp_mask(perp | 1 << state))
    return space.from_mask(closure & states.mask)


def sasaki_state(lattice: PropertyLattice, element: int, state: int) -> StateSet:
    """
    Apply the Sasaki map of an element to a state.

    :param lattice: A property lattice.
    :param element: The element M.
    :param state: The state index p.

    """

    return sasaki_of_set(lattice.space, lattice.get_set(element), state)


def _scan_states(lattice: PropertyLattice, limit: Optional[int]) -> SasakiReport:
    space = lattice.space
    witnesses: List[Witness] = []
    for element in lattice.get_elements():
        perp = lattice.get_mask(lattice.ortho(element))
        for state in iter_bits(space.full().mask & ~perp):
            image = sasaki_state(lattice, element, state)
            if len(image) == 1:
                continue

            narrative = f'M = {lattice.render(element)}, p = {space.get_name(state)}: image {image.render()}'
            witnesses.append(Witness(SASAKI, (element, state), narrative, image=image))
            if limit and len(witnesses) >= limit:
                return SasakiReport(witnesses, complete=False)

    return SasakiReport(witnesses)


def _scan_atoms(lattice: Lattice, limit: Optional[int]) -> SasakiReport:
    witnesses: List[Witness] = []
    for element in lattice.get_elements():
        perp = lattice.ortho(element)
        for atom in lattice.get_atoms():
            if lattice.leq(atom, perp):
                continue

            image = sasaki_lattice(lattice, element, atom)
            if lattice.is_atom(image):
                continue

            narrative = (
                f'M = {lattice.render(element)}, p = {lattice.render(atom)}: image {lattice.render(image)}'
            )
            witnesses.append(Witness(SASAKI, (element, atom, image), narrative))
            if limit and len(witnesses) >= limit:
                return SasakiReport(witnesses, complete=False)

    return SasakiReport(witnesses)


def check_sasaki_regular(lattice: Lattice, limit: int = None) -> SasakiReport:
    """
    Check that every Sasaki map sends admissible states to atoms.

    Property lattices are scanned with the state form of the maps, where
    an empty image also counts as irregular. Other lattices are scanned
    with the lattice form applied to atoms.

    :param lattice: The lattice to check.
    :param limit: Optional number of witnesses after which the scan stops.

    """

    if isinstance(lattice, PropertyLattice):
        report = _scan_states(lattice, limit)
    else:
        report = _scan_atoms(lattice, limit)

    LOG.debug(f'Sasaki scan found {len(report.witnesses)} irregular projections')
    return report


def sasaki_projections_factor(lattice: PropertyLattice, first: StateSet, second: StateSet, state: int) -> bool:
    """
    Check that the Sasaki map of a product set acts coordinatewise.

    :param lattice: The property lattice of a product space.
    :param first: A closed set of the first factor.
    :param second: A closed set of the second factor.
    :param state: A state of the product that is not orthogonal to the product set.

    :raises: SasakiDomainError, ValueError

    """

    space = lattice.space
    if not space.factors:
        raise ValueError('The lattice space is not a product space')

    states = space.cartesian(first, second)
    element = lattice.get_index(states)
    if lattice.get_mask(lattice.ortho(element)) >> state & 1:
        raise SasakiDomainError(space.get_name(state), states.render())

    space1, space2 = space.factors
    state1, state2 = space.get_coordinates(state)
    expected = space.cartesian(sasaki_of_set(space1, first, state1), sasaki_of_set(space2, second, state2))
    return sasaki_state(lattice, element, state) == expected


class RandomProductsReport(object):
    """Result of a run over random products of Sasaki regular spaces."""

    def __init__(self, seed: int, runs: List[Tuple[OrthoSpace, OrthoSpace, Optional[Witness]]]):
        """
        Constructor.

        :param seed: The seed of the random generator.
        :param runs: For each run the two components and the first irregular projection found.

        """

        self.__seed = seed
        self.__runs = list(runs)

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def runs(self) -> List[Tuple[OrthoSpace, OrthoSpace, Optional[Witness]]]:
        return list(self.__runs)

    def all_irregular(self) -> bool:
        return all(witness is not None for _, _, witness in self.__runs)


def _is_regular_component(space: OrthoSpace) -> bool:
    if not space.is_t1() or not space.is_nontrivial():
        return False

    return check_sasaki_regular(PropertyLattice.from_space(space), limit=1).regular


def _sample_component(rng: random.Random, max_states: int, prefix: str) -> OrthoSpace:
    for _ in range(RANDOM_PRODUCTS_ATTEMPTS):
        space = random_space(rng, max_states=max_states, prefix=prefix)
        if _is_regular_component(space):
            return space

    raise OrthologicError(f'No Sasaki regular space found after {RANDOM_PRODUCTS_ATTEMPTS} attempts')


def random_products_run(runs: int = 100, seed: int = 0, max_states: int = 6) -> RandomProductsReport:
    """
    Check that products of Sasaki regular spaces are not Sasaki regular.

    Components are random T1 nontrivial spaces with regular Sasaki maps.
    Component pairs whose product lattice is too large are sampled again.

    :param runs: The number of component pairs.
    :param seed: The seed for the random generator.
    :param max_states: Maximum number of states per component.

    """

    rng = random.Random(seed)
    results = []
    while len(results) < runs:
        first = _sample_component(rng, max_states, 'a')
        second = _sample_component(rng, max_states, 'b')
        try:
            lattice = PropertyLattice.from_space(product_space(first, second), cap=RANDOM_PRODUCTS_CAP)
        except CapExceededError:
            LOG.debug(f'Skipping a product of {len(first)} and {len(second)} states with a large lattice')
            continue

        report = check_sasaki_regular(lattice, limit=1)
        witness = report.witnesses[0] if report.witnesses else None
        if witness is None:
            LOG.warning(f'Regular product found for seed {seed} in run {len(results) + 1}')

        results.append((first, second, witness))

    return RandomProductsReport(seed, results)

