# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import io
import logging
import os

import pytest


@pytest.fixture(scope='session')
def DATA_DIR(request) -> str:
    """Path to the tests data directory."""

    return os.path.join(os.path.dirname(__file__), 'data')


@pytest.fixture(scope='session')
def mo2():
    """Space with two antipodal pairs of states."""

    from orthologic.space import mo_space

    return mo_space(2)


@pytest.fixture(scope='session')
def mo2_lattice(mo2):
    """Property lattice of the space with two antipodal pairs."""

    from orthologic.lattice import PropertyLattice

    return PropertyLattice.from_space(mo2)


@pytest.fixture(scope='session')
def boolean_lattice():
    """Property lattice of three mutually orthogonal states."""

    from orthologic.lattice import PropertyLattice
    from orthologic.space import make_space

    space = make_space(['x', 'y', 'z'], [('x', 'y'), ('x', 'z'), ('y', 'z')])
    return PropertyLattice.from_space(space)


@pytest.fixture(scope='session')
def separated():
    """Symbolic separated product of two spaces with two antipodal pairs."""

    from orthologic.separated import SeparatedProduct
    from orthologic.space import mo_space

    return SeparatedProduct(mo_space(2), mo_space(2))


@pytest.fixture(scope='session')
def product_lattice(separated):
    """Property lattice of the separated product of two spaces with two antipodal pairs."""

    from orthologic.lattice import PropertyLattice

    return PropertyLattice.from_space(separated.space)


@pytest.fixture(scope='function', autouse=True)
def restore_logging():
    """Enable logging again after commands that disable it."""

    yield
    logging.disable(logging.NOTSET)
    logging.getLogger('orthologic').handlers = []


@pytest.fixture(scope='function')
def logs(request, mocker):
    """Enable logging output support in a test."""

    from orthologic.lib.logging import setup_orthologic_logging

    output = io.StringIO()

    def cleanup():
        # Remove the handlers to release the output stream
        logging.getLogger('orthologic').handlers = []
        output.close()

    request.addfinalizer(cleanup)
    mocker.patch('orthologic.lib.logging.get_output_buffer', return_value=output)
    setup_orthologic_logging('check', logging.DEBUG)
    return output
