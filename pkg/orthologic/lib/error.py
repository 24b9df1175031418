# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.


class OrthologicError(Exception):
    """Base error for the library."""


class CapExceededError(OrthologicError):
    """Error raised when an enumeration grows beyond the configured bound."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f'Closed set family exceeds the cap of {cap} elements')
