# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import pytest


def test_lib_msgpack_encode(mo2):
    from orthologic.lib.msgpack import _encode

    assert _encode(mo2.subset(['p1', 'p2'])) == ['type', 'stateset', b'\x03']
    assert _encode(mo2.empty()) == ['type', 'stateset', b'']
    assert _encode(mo2) == ['type', 'space', [
        ['p1', 'p2', 'p1*', 'p2*'],
        [b'\x04', b'\x08', b'\x01', b'\x02'],
        None,
    ]]

    # A string is not a custom type
    with pytest.raises(TypeError):
        _encode('')


def test_lib_msgpack_decode(mo2):
    from orthologic.lib.msgpack import _decode

    assert _decode(['type', 'stateset', b'\x03']) == 3
    assert _decode(['type', 'stateset', b'']) == 0

    space = _decode(['type', 'space', [['p1', 'p2', 'p1*', 'p2*'], [b'\x04', b'\x08', b'\x01', b'\x02'], None]])
    assert space == mo2
    assert space.factors is None

    # Invalid format should not fail
    assert _decode(['type', 'space', 'invalid']) is None

    # Lists other than custom types are not decoded
    assert _decode([1, 2, 3]) == [1, 2, 3]
    assert _decode(['type', 'unknown', 1]) == ['type', 'unknown', 1]


def test_lib_msgpack_pack():
    from orthologic.lib.msgpack import pack

    assert pack({'foo': 'bar'}) == b'\x81\xa3foo\xa3bar'
    assert pack(b'\x01') == b'\xc4\x01\x01'

    with pytest.raises(TypeError):
        pack(object())


def test_lib_msgpack_unpack(mo2):
    from orthologic.lib.msgpack import pack
    from orthologic.lib.msgpack import unpack

    assert unpack(b'\x81\xa3foo\xa3bar') == {'foo': 'bar'}

    data = unpack(pack({'space': mo2, 'sets': [mo2.full(), mo2.singleton(2)]}))
    assert data['space'] == mo2
    assert data['sets'] == [0b1111, 0b0100]


def test_lib_msgpack_product_space():
    from orthologic.lib.msgpack import pack
    from orthologic.lib.msgpack import unpack
    from orthologic.space import mo_space
    from orthologic.space import product_space

    first = mo_space(1)
    second = mo_space(2)
    space = unpack(pack(product_space(first, second)))
    assert len(space) == 8
    assert space.factors == (first, second)
    assert space.get_names()[:2] == product_space(first, second).get_names()[:2]
