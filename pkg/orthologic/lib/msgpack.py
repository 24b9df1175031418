# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
from typing import Any
from typing import List

import msgpack

from ..space import OrthoSpace
from ..space import StateSet


def _mask_to_bytes(mask: int) -> bytes:
    return mask.to_bytes((mask.bit_length() + 7) // 8, 'little')


def _bytes_to_mask(value: bytes) -> int:
    return int.from_bytes(value, 'little')


def _encode(obj: Any) -> List:
    """
    Handle packing for custom types.

    Custom types are serialized as list, where first item is the string "type",
    the second is the data type name and the third is the value represented as
    a basic type.

    State sets are packed as their bitset in little endian bytes, so the
    decoded value is the bitset and not a state set.

    :raises: TypeError

    """

    if isinstance(obj, StateSet):
        return ['type', 'stateset', _mask_to_bytes(obj.mask)]
    elif isinstance(obj, OrthoSpace):
        return ['type', 'space', [
            list(obj.get_names()),
            [_mask_to_bytes(mask) for mask in obj.get_neighbours()],
            list(obj.factors) if obj.factors else None,
        ]]

    raise TypeError(f'{repr(obj)} is not serializable')


def _decode(data: List) -> Any:
    """
    Handle unpacking for custom types.

    None is returned when a custom type value is not valid.

    """

    if len(data) == 3 and data[0] == 'type':
        data_type = data[1]
        try:
            if data_type == 'stateset':
                return _bytes_to_mask(data[2])
            elif data_type == 'space':
                names, neighbours, factors = data[2]
                return OrthoSpace(
                    names,
                    [_bytes_to_mask(mask) for mask in neighbours],
                    factors=tuple(factors) if factors else None,
                )
        except Exception:
            return

    return data


def pack(value: Any) -> bytes:
    """
    Pack python data to a binary stream.

    :param value: A python object to serialize.

    """

    return msgpack.packb(value, default=_encode, use_bin_type=True)


def unpack(value: bytes) -> Any:
    """
    Unpack a binary stream to python data.

    :param value: The binary stream to deserialize.

    """

    return msgpack.unpackb(value, list_hook=_decode, raw=False)
