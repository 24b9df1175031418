# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import logging

import pytest


def test_lib_logging_formatter():
    from orthologic.lib.logging import OrthologicFormatter

    class Record(object):
        pass

    record = Record()
    record.created = 1485622839.2490458  # Non GMT timestamp
    assert OrthologicFormatter().formatTime(record) == '2017-01-28T17:00:39.249'


def test_lib_logging_value_to_log_string(mo2):
    from orthologic.lib.logging import value_to_log_string

    assert value_to_log_string(None) == 'NULL'
    assert value_to_log_string(True) == 'TRUE'
    assert value_to_log_string(False) == 'FALSE'
    assert value_to_log_string('value') == 'value'
    assert value_to_log_string(42) == '42'
    assert value_to_log_string(mo2.subset(['p1'])) == '{p1}'

    # Dictionaries, lists and tuples are serialized as pretty JSON
    assert value_to_log_string({'a': 1}) == '{\n  "a": 1\n}'
    assert value_to_log_string(['1', '2']) == '[\n  "1",\n  "2"\n]'
    assert value_to_log_string((1,)) == '[\n  1\n]'

    # Check maximum characters
    max_chars = 100000
    assert len(value_to_log_string('*' * max_chars)) == max_chars
    assert len(value_to_log_string('*' * (max_chars + 10))) == max_chars
    assert value_to_log_string('abcdef', max_chars=3) == 'abc'


def test_lib_logging_setup_orthologic_logging(logs):
    from orthologic.lib.logging import OrthologicFormatter

    logger = logging.getLogger('orthologic')
    assert len(logger.handlers) == 1
    assert logger.level == logging.DEBUG
    assert not logger.propagate
    assert isinstance(logger.handlers[0].formatter, OrthologicFormatter)
    assert logging.getLevelName(logging.WARNING + 1) == 'NOTICE'

    # Basic check for logging format
    message = 'Test message'
    logging.getLogger('orthologic.lattice').info(message)
    out = logs.getvalue()
    assert len(out) > 0
    out_parts = out.split(' ')
    assert out_parts[0].endswith('Z')  # Time
    assert out_parts[1] == 'check'  # Command
    assert out_parts[2] == '[INFO]'  # Level
    assert ' '.join(out_parts[3:]).strip() == message


def test_lib_logging_setup_again(logs):
    from orthologic.lib.logging import setup_orthologic_logging

    # A second setup keeps the handler and changes the command name
    setup_orthologic_logging('oracle', logging.INFO)
    logger = logging.getLogger('orthologic')
    assert len(logger.handlers) == 1
    assert logger.level == logging.INFO

    logger.debug('Hidden message')
    logger.info('Test message')
    output = logs.getvalue()
    assert 'Hidden message' not in output
    assert ' oracle [INFO] Test message' in output


def test_lib_logging_syslog_levels():
    from orthologic.lib.logging import ALERT
    from orthologic.lib.logging import EMERGENCY
    from orthologic.lib.logging import NOTICE
    from orthologic.lib.logging import SYSLOG_NUMERIC

    assert SYSLOG_NUMERIC[0] == EMERGENCY
    assert SYSLOG_NUMERIC[1] == ALERT
    assert SYSLOG_NUMERIC[4] == NOTICE
    assert SYSLOG_NUMERIC[7] == logging.DEBUG
    assert NOTICE < logging.ERROR


@pytest.mark.parametrize('method, level', [
    ('debug', 'DEBUG'),
    ('info', 'INFO'),
    ('warning', 'WARNING'),
    ('error', 'ERROR'),
    ('critical', 'CRITICAL'),
])
def test_lib_logging_logger(logs, method, level):
    from orthologic.lib.logging import Logger

    logger = Logger('orthologic')
    getattr(logger, method)('Test message')
    output = logs.getvalue().rstrip('\n')
    assert 'Test message' in output
    assert f'[{level}]' in output
    assert '|' not in output
    assert '\n' not in output


@pytest.mark.parametrize('method, level', [
    ('debug', 'DEBUG'),
    ('info', 'INFO'),
    ('warning', 'WARNING'),
    ('error', 'ERROR'),
    ('critical', 'CRITICAL'),
])
def test_lib_logging_logger_source(logs, method, level):
    from orthologic.lib.logging import Logger

    logger = Logger('orthologic')
    getattr(logger, method)('Test message', source='mo2.space')
    output = logs.getvalue().rstrip('\n')
    assert output.endswith(f'[{level}] Test message |mo2.space|')


def test_lib_logging_logger_log(logs):
    from orthologic.lib.logging import NOTICE
    from orthologic.lib.logging import Logger

    Logger('orthologic').log(NOTICE, 'Test message', source='-')
    assert logs.getvalue().rstrip('\n').endswith('[NOTICE] Test message |-|')


def test_lib_logging_logger_exception(logs):
    from orthologic.lib import cli
    from orthologic.lib.logging import Logger

    cli.DEBUG = False
    logger = Logger('orthologic')
    try:
        raise ValueError('boom')
    except ValueError:
        logger.exception('Test message')

    output = logs.getvalue().rstrip('\n')
    assert 'Test message' in output
    assert '[ERROR]' in output
    assert '\n' not in output


def test_lib_logging_logger_exception_debug(logs):
    from orthologic.lib import cli
    from orthologic.lib.logging import Logger

    # Exception tracebacks are displayed when DEBUG is enabled
    cli.DEBUG = True
    logger = Logger('orthologic')
    try:
        raise ValueError('boom')
    except ValueError:
        logger.exception('Test message', source='mo2.space')
    finally:
        cli.DEBUG = False

    output = logs.getvalue().rstrip('\n')
    assert 'Test message |mo2.space|' in output
    assert '[ERROR]' in output
    assert '\n' in output
    assert 'ValueError: boom' in output


def test_lib_logging_source_logger(logs):
    from orthologic.lib.logging import SourceLogger

    logger = SourceLogger('orthologic', 'product.space')
    assert logger.source == 'product.space'
    logger.info('Test message')
    logger.warning('Other message')
    output = logs.getvalue()
    assert '[INFO] Test message |product.space|' in output
    assert '[WARNING] Other message |product.space|' in output

    # Inputs without a name use a placeholder
    assert SourceLogger('orthologic', '').source == '-'


@pytest.mark.parametrize('method, level', [
    ('debug', 'DEBUG'),
    ('error', 'ERROR'),
    ('critical', 'CRITICAL'),
    ('exception', 'ERROR'),
])
def test_lib_logging_source_logger_levels(logs, method, level):
    from orthologic.lib.logging import SourceLogger

    logger = SourceLogger('orthologic', 'mo2.space')
    getattr(logger, method)('Test message')
    assert f'[{level}] Test message |mo2.space|' in logs.getvalue()
