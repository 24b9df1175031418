# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
"""
Plain text descriptions of orthogonality spaces.

Files are line oriented and "#" starts a comment. The directives are:

    space NAME              start an explicit space
    states NAME...          add states to the current space
    ortho NAME NAME         make two states of the current space orthogonal
    mo N                    the MO space with N antipodal pairs, named "moN"
    mo NAME N               the same with an explicit name
    product NAME = A B      separated product of two defined spaces
    coproduct NAME = A B    coproduct of the lattices of two defined spaces

The last definition in the file is the one that commands work with.

"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import TYPE_CHECKING

from .lib.error import OrthologicError
from .space import RESERVED_CHARACTERS
from .space import SpaceError
from .space import has_reserved_characters
from .space import make_space
from .space import mo_space
from .space import product_space

if TYPE_CHECKING:
    from typing import Dict
    from typing import List
    from typing import Optional
    from typing import Tuple

    from .space import OrthoSpace

LOG = logging.getLogger(__name__)

KIND_SPACE = 'space'
KIND_MO = 'mo'
KIND_PRODUCT = 'product'
KIND_COPRODUCT = 'coproduct'


class SpaceFileError(OrthologicError):
    """Error raised for invalid space file contents."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f'{line}:{column}: {message}')


@dataclass(frozen=True)
class SpaceDefinition:
    """A named definition of a space file."""

    name: str
    kind: str
    states: Tuple[str, ...] = ()
    pairs: Tuple[Tuple[str, str], ...] = ()
    size: int = 0
    operands: Tuple[str, ...] = ()
    line: int = field(default=0, compare=False)

    def render(self) -> List[str]:
        if self.kind == KIND_SPACE:
            lines = [f'space {self.name}', 'states ' + ' '.join(self.states)]
            lines.extend(f'ortho {first} {second}' for first, second in self.pairs)
            return lines
        elif self.kind == KIND_MO:
            return [f'mo {self.name} {self.size}']

        return [f'{self.kind} {self.name} = {" ".join(self.operands)}']


class SpaceFile(object):
    """Parsed contents of a space file."""

    def __init__(self, definitions: List[SpaceDefinition], source: str = '-'):
        """
        Constructor.

        :param definitions: The definitions in file order.
        :param source: Optional name of the file.

        """

        self.__definitions = list(definitions)
        self.__by_name: Dict[str, SpaceDefinition] = {definition.name: definition for definition in definitions}
        self.__source = source

    def __eq__(self, other):
        if not isinstance(other, SpaceFile):
            return NotImplemented

        return self.__definitions == other.get_definitions()

    @property
    def source(self) -> str:
        return self.__source

    def get_definitions(self) -> List[SpaceDefinition]:
        return list(self.__definitions)

    def get_definition(self, name: str) -> SpaceDefinition:
        """
        Get a definition by name.

        :param name: The definition name.

        :raises: KeyError

        """

        return self.__by_name[name]

    def get_target(self) -> SpaceDefinition:
        """Get the last definition of the file."""

        return self.__definitions[-1]

    def build_space(self, name: str = None) -> OrthoSpace:
        """
        Build the orthogonality space of a definition.

        :param name: Optional definition name, by default the target.

        :raises: SpaceFileError

        """

        definition = self.get_definition(name) if name else self.get_target()
        try:
            if definition.kind == KIND_SPACE:
                return make_space(list(definition.states), list(definition.pairs))
            elif definition.kind == KIND_MO:
                return mo_space(definition.size)
            elif definition.kind == KIND_PRODUCT:
                first, second = definition.operands
                return product_space(self.build_space(first), self.build_space(second))
        except SpaceError as error:
            raise SpaceFileError(str(error), definition.line)

        raise SpaceFileError(f'"{definition.name}" is a coproduct, not an orthogonality space', definition.line)

    def render(self) -> str:
        """Render the definitions in canonical form."""

        lines = []
        for definition in self.__definitions:
            lines.extend(definition.render())

        return '\n'.join(lines) + '\n'


class _Parser(object):
    """Line by line space file parser."""

    def __init__(self):
        self.definitions: List[SpaceDefinition] = []
        self.names: Dict[str, SpaceDefinition] = {}
        self.block: Optional[dict] = None

    def feed(self, number: int, tokens: List[Tuple[int, str]]):
        column, directive = tokens[0]
        arguments = tokens[1:]
        if directive == 'states':
            self.__states(number, column, arguments)
        elif directive == 'ortho':
            self.__ortho(number, column, arguments)
        else:
            self.close()
            if directive == KIND_SPACE:
                self.__space(number, column, arguments)
            elif directive == KIND_MO:
                self.__mo(number, column, arguments)
            elif directive in (KIND_PRODUCT, KIND_COPRODUCT):
                self.__operation(number, column, directive, arguments)
            else:
                raise SpaceFileError(f'Unknown directive "{directive}"', number, column)

    def close(self):
        if self.block is None:
            return

        block = self.block
        self.block = None
        if not block['states']:
            raise SpaceFileError(f'Space "{block["name"]}" has no states', block['line'])

        self.__add(SpaceDefinition(
            name=block['name'],
            kind=KIND_SPACE,
            states=tuple(block['states']),
            pairs=tuple(block['pairs']),
            line=block['line'],
        ), block['line'], 1)

    def __add(self, definition: SpaceDefinition, number: int, column: int):
        if definition.name in self.names:
            raise SpaceFileError(f'Duplicate definition "{definition.name}"', number, column)

        self.names[definition.name] = definition
        self.definitions.append(definition)

    def __check_new_name(self, name: str, number: int, column: int):
        if name in self.names or (self.block and self.block['name'] == name):
            raise SpaceFileError(f'Duplicate definition "{name}"', number, column)

    def __space(self, number: int, column: int, arguments: List[Tuple[int, str]]):
        if len(arguments) != 1:
            raise SpaceFileError('Expected "space NAME"', number, column)

        name_column, name = arguments[0]
        self.__check_new_name(name, number, name_column)
        self.block = {'name': name, 'line': number, 'states': [], 'pairs': []}

    def __states(self, number: int, column: int, arguments: List[Tuple[int, str]]):
        if self.block is None:
            raise SpaceFileError('"states" outside a space block', number, column)

        if not arguments:
            raise SpaceFileError('Expected at least one state name', number, column)

        for state_column, state in arguments:
            if state in self.block['states']:
                raise SpaceFileError(f'Duplicate state name: "{state}"', number, state_column)
            elif has_reserved_characters(state):
                raise SpaceFileError(
                    f'State name "{state}" cannot contain any of "{RESERVED_CHARACTERS}"',
                    number,
                    state_column,
                )

            self.block['states'].append(state)

    def __ortho(self, number: int, column: int, arguments: List[Tuple[int, str]]):
        if self.block is None:
            raise SpaceFileError('"ortho" outside a space block', number, column)

        if len(arguments) != 2:
            raise SpaceFileError('Expected "ortho NAME NAME"', number, column)

        for state_column, state in arguments:
            if state not in self.block['states']:
                raise SpaceFileError(f'Unknown state name: "{state}"', number, state_column)

        (_, first), (second_column, second) = arguments
        if first == second:
            raise SpaceFileError(f'State "{first}" cannot be orthogonal to itself', number, second_column)

        self.block['pairs'].append((first, second))

    def __mo(self, number: int, column: int, arguments: List[Tuple[int, str]]):
        if len(arguments) == 1:
            size_column, size_text = arguments[0]
            name = f'mo{size_text}'
            name_column = column
        elif len(arguments) == 2:
            (name_column, name), (size_column, size_text) = arguments
        else:
            raise SpaceFileError('Expected "mo N" or "mo NAME N"', number, column)

        if not size_text.isdigit() or int(size_text) < 1:
            raise SpaceFileError(f'Expected a positive number of state pairs, got "{size_text}"', number, size_column)

        self.__check_new_name(name, number, name_column)
        self.__add(SpaceDefinition(name=name, kind=KIND_MO, size=int(size_text), line=number), number, name_column)

    def __operation(self, number: int, column: int, kind: str, arguments: List[Tuple[int, str]]):
        if len(arguments) != 4 or arguments[1][1] != '=':
            raise SpaceFileError(f'Expected "{kind} NAME = A B"', number, column)

        name_column, name = arguments[0]
        operands = arguments[2:]
        for operand_column, operand in operands:
            if operand not in self.names:
                raise SpaceFileError(f'Unknown space "{operand}"', number, operand_column)
            elif self.names[operand].kind == KIND_COPRODUCT:
                raise SpaceFileError(f'"{operand}" is a coproduct, not an orthogonality space', number, operand_column)

        self.__check_new_name(name, number, name_column)
        self.__add(SpaceDefinition(
            name=name,
            kind=kind,
            operands=tuple(operand for _, operand in operands),
            line=number,
        ), number, name_column)


def _tokenize(line: str) -> List[Tuple[int, str]]:
    tokens = []
    column = 0
    for part in line.split():
        column = line.index(part, column)
        tokens.append((column + 1, part))
        column += len(part)

    return tokens


def parse_space_file(text: str, source: str = '-') -> SpaceFile:
    """
    Parse the contents of a space file.

    :param text: The file contents.
    :param source: Optional name of the file.

    :raises: SpaceFileError

    """

    parser = _Parser()
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0]
        tokens = _tokenize(content)
        if tokens:
            parser.feed(number, tokens)

    parser.close()
    if not parser.definitions:
        raise SpaceFileError('No space is defined', 1)

    LOG.debug(f'Parsed {len(parser.definitions)} definitions from {source}')
    return SpaceFile(parser.definitions, source=source)
