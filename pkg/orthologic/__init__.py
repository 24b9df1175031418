# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.

__license__ = "MIT"
__copyright__ = "Copyright (c) 2026 The orthologic authors"
__version__ = "1.0.0"

# flake8: noqa
from .axioms import SasakiDomainError
from .axioms import SasakiReport
from .axioms import Witness
from .coproduct import CoproductLattice
from .lattice import Lattice
from .lattice import OrthoLawError
from .lattice import PropertyLattice
from .lib.error import CapExceededError
from .lib.error import OrthologicError
from .separated import SeparatedProduct
from .space import OrthoSpace
from .space import SpaceError
from .space import StateSet
from .space import make_space
from .space import mo_space
from .space import product_space
from .spacefile import SpaceFileError
from .spacefile import parse_space_file
