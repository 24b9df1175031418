# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import List
    from typing import Tuple

    from .lattice import Lattice


def _quote(label: str) -> str:
    return '"' + label.replace('\\', '\\\\').replace('"', '\\"') + '"'


def cover_edges(lattice: Lattice) -> List[Tuple[int, int]]:
    """
    Get the covering pairs of a lattice as (lower, upper) element pairs.

    Pairs are sorted by the lower and then by the upper element.

    :param lattice: The lattice.

    """

    return [(lower, upper) for lower in lattice.get_elements() for upper in lattice.upper_covers(lower)]


def render_dot(lattice: Lattice) -> str:
    """
    Render the Hasse diagram of a lattice as a DOT digraph.

    Edges point from each element to the elements that cover it.

    :param lattice: The lattice.

    """

    lines = ['digraph lattice {', '    rankdir=BT;']
    for element in lattice.get_elements():
        lines.append(f'    n{element} [label={_quote(lattice.render(element))}];')

    for lower, upper in cover_edges(lattice):
        lines.append(f'    n{lower} -> n{upper};')

    lines.append('}')
    return '\n'.join(lines) + '\n'
