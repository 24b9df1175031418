# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import argparse
import logging

import pytest


def test_lib_parse_args_check():
    from orthologic.lib.cli import CHECK_NAMES
    from orthologic.lib.cli import parse_args
    from orthologic.space import DEFAULT_CAP

    input_ = parse_args(['-D', '-L', '7', 'check', '--json', '--timing', 'mo2.space'])
    assert input_.get_command() == 'check'
    assert input_.get_file() == 'mo2.space'
    assert input_.get_source() == 'mo2.space'
    assert not input_.is_snapshot()
    assert input_.get_cap() == DEFAULT_CAP
    assert input_.is_json()
    assert not input_.expects_violations()
    assert input_.get_checks() == list(CHECK_NAMES)
    assert input_.is_timing_enabled()
    assert input_.get_save_path() is None
    assert input_.get_random() == 0
    assert input_.is_debug()
    assert input_.has_logging()
    assert input_.get_log_level() == logging.DEBUG


def test_lib_parse_args_defaults():
    from orthologic.lib.cli import parse_args

    input_ = parse_args(['lattice', '--cap', '50', '--save', 'out.msgpack', 'snapshot.msgpack'])
    assert input_.get_command() == 'lattice'
    assert input_.is_snapshot()
    assert input_.get_cap() == 50
    assert input_.get_save_path() == 'out.msgpack'
    assert not input_.is_json()
    assert not input_.is_timing_enabled()
    assert not input_.is_debug()
    assert not input_.has_logging()
    assert input_.get_log_level() == logging.INFO


def test_lib_parse_args_sasaki():
    from orthologic.lib.cli import parse_args

    input_ = parse_args(['sasaki', '--random', '5', '--seed', '7', '--max-states', '4', '--expect-violations'])
    assert input_.get_file() is None
    assert input_.get_random() == 5
    assert input_.get_seed() == 7
    assert input_.get_max_states() == 4
    assert input_.expects_violations()
    assert input_.get_source() == 'random 5 seed 7'

    input_ = parse_args(['sasaki', 'product.space'])
    assert input_.get_random() == 0
    assert input_.get_seed() == 0
    assert input_.get_max_states() == 6
    assert input_.get_source() == 'product.space'


def test_lib_parse_args_oracle():
    from orthologic.lib.cli import parse_args

    input_ = parse_args(['oracle', '2', '3'])
    assert input_.get_oracle_sizes() == [2, 3]
    assert input_.get_source() == 'oracle 2 3'
    assert input_.get_file() is None


@pytest.mark.parametrize('argv', [
    [],
    ['check'],
    ['check', '--cap', '-1', 'mo2.space'],
    ['check', '--checks', 'sasaki,unknown', 'mo2.space'],
    ['-L', '8', 'check', 'mo2.space'],
    ['oracle', '5', '1'],
    ['oracle', '1'],
    ['sasaki', '--random', 'many'],
    ['check', '--exp', 'mo2.space'],
])
def test_lib_parse_args_invalid(capsys, argv):
    from orthologic.lib.cli import parse_args

    with pytest.raises(SystemExit) as excinfo:
        parse_args(argv)

    assert excinfo.value.code == 2


def test_lib_positive_int():
    from orthologic.lib.cli import positive_int

    assert positive_int('3') == 3

    with pytest.raises(argparse.ArgumentTypeError):
        positive_int('0')

    with pytest.raises(argparse.ArgumentTypeError):
        positive_int('three')


def test_lib_oracle_size():
    from orthologic.lib.cli import ORACLE_MAX
    from orthologic.lib.cli import oracle_size

    assert oracle_size('1') == 1
    assert oracle_size(str(ORACLE_MAX)) == ORACLE_MAX

    with pytest.raises(argparse.ArgumentTypeError):
        oracle_size(str(ORACLE_MAX + 1))


def test_lib_check_list():
    from orthologic.lib.cli import check_list

    # Checks keep the reporting order
    assert check_list('sasaki, covering') == ['covering', 'sasaki']
    assert check_list('atomistic,') == ['atomistic']

    with pytest.raises(argparse.ArgumentTypeError):
        check_list(',')

    with pytest.raises(argparse.ArgumentTypeError):
        check_list('covering,modular')


def test_lib_input_values():
    from orthologic.lib.cli import CHECK_NAMES
    from orthologic.lib.cli import Input
    from orthologic.lib.logging import NOTICE

    input_ = Input(command='check', file=None, log_level=4)
    assert input_.get_source() == '-'
    assert input_.get_checks() == list(CHECK_NAMES)
    assert input_.get_log_level() == NOTICE
    assert input_.has_logging()
