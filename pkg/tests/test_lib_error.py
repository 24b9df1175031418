# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.


def test_lib_error_cap_exceeded():
    from orthologic.lib.error import CapExceededError
    from orthologic.lib.error import OrthologicError

    error = CapExceededError(42)
    assert isinstance(error, OrthologicError)
    assert error.cap == 42
    assert str(error) == 'Closed set family exceeds the cap of 42 elements'


def test_lib_error_package_exports():
    import orthologic
    from orthologic.lib.error import CapExceededError
    from orthologic.lib.error import OrthologicError

    assert orthologic.OrthologicError is OrthologicError
    assert orthologic.CapExceededError is CapExceededError
