# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import pytest


def test_report_check_lattice(mo2_lattice):
    from orthologic.report import OK
    from orthologic.report import check_lattice

    report = check_lattice(mo2_lattice, 'mo2.space')
    assert report.source == 'mo2.space'
    assert not report.has_violations()
    assert [result.status for result in report.get_results()] == [OK] * 5
    assert report.get_notes() == []
    assert report.render() == '\n'.join([
        'source: mo2.space',
        'states: 4',
        'elements: 6',
        'atoms: 4',
        't1: True',
        'nontrivial: True',
        'superselected_pairs: 0',
        'superselected_non_orthogonal: 0',
        'orthomodularity: ok',
        'covering: ok',
        'exchange: ok',
        'atomistic: ok',
        'sasaki: ok',
    ])

    data = report.to_dict()
    assert data['source'] == 'mo2.space'
    assert data['statistics']['elements'] == 6
    assert data['checks'][0] == {'name': 'orthomodularity', 'status': 'ok'}
    assert data['notes'] == []


def test_report_check_product(product_lattice):
    from orthologic.report import OK
    from orthologic.report import SASAKI_WITNESS_LIMIT
    from orthologic.report import VIOLATED
    from orthologic.report import check_lattice

    report = check_lattice(product_lattice, 'product.space')
    assert report.has_violations()

    statistics = report.get_statistics()
    assert statistics['states'] == 16
    assert statistics['elements'] == 114
    assert statistics['atoms'] == 16
    assert statistics['superselected_pairs'] == 72
    assert statistics['superselected_non_orthogonal'] == 32
    assert statistics['families'] == {'T': 2, 'A1': 4, 'A2': 4, 'S': 16, 'U': 16, 'P': 72}

    assert report.get_result('orthomodularity').status == VIOLATED
    assert report.get_result('covering').status == VIOLATED
    assert report.get_result('exchange').status == VIOLATED
    assert report.get_result('atomistic').status == OK

    sasaki = report.get_result('sasaki')
    assert sasaki.status == VIOLATED
    assert len(sasaki.witnesses) == SASAKI_WITNESS_LIMIT
    assert sasaki.total > SASAKI_WITNESS_LIMIT
    assert sasaki.to_dict()['total'] == sasaki.total
    assert f'sasaki: violated ({sasaki.total} witnesses, first 10 shown)' in report.render()
    assert 'families: T=2 A1=4 A2=4 S=16 U=16 P=72' in report.render()

    notes = report.get_notes()
    assert len(notes) == 1
    assert 'crossed form' in notes[0]


def test_report_classical_note():
    from orthologic.lattice import PropertyLattice
    from orthologic.report import check_lattice
    from orthologic.space import mo_space
    from orthologic.space import product_space

    lattice = PropertyLattice.from_space(product_space(mo_space(1), mo_space(2)))
    report = check_lattice(lattice, '-', checks=['atomistic'])
    assert len(report.get_results()) == 1
    assert report.get_notes()[0].startswith('classical component')


def test_report_symbolic_product(mo2_lattice, product_lattice):
    from orthologic.report import symbolic_product
    from orthologic.separated import SeparatedProduct

    assert symbolic_product(mo2_lattice) is None
    assert isinstance(symbolic_product(product_lattice), SeparatedProduct)


def test_report_run_check_unknown(mo2_lattice):
    from orthologic.report import run_check

    with pytest.raises(ValueError):
        run_check(mo2_lattice, 'invalid')


def test_report_run_check_skipped(mocker, mo2_lattice):
    from orthologic.lattice import OrthoLawError
    from orthologic.report import SKIPPED
    from orthologic.report import run_check

    mocker.patch('orthologic.axioms.check_orthomodular', side_effect=OrthoLawError('{p1}', 'involution'))
    result = run_check(mo2_lattice, 'orthomodularity')
    assert result.status == SKIPPED
    assert result.reason == 'Orthocomplement fails for {p1}: involution'
    assert result.to_dict() == {
        'name': 'orthomodularity',
        'status': 'skipped',
        'reason': 'Orthocomplement fails for {p1}: involution',
    }
    assert result.render() == ['orthomodularity: skipped (Orthocomplement fails for {p1}: involution)']


def test_report_run_checks_timing(mocker, mo2_lattice):
    from orthologic.report import run_checks

    mocker.patch('orthologic.report.time.perf_counter', side_effect=[1.0, 1.25])
    (result,) = run_checks(mo2_lattice, ['covering'], timing=True)
    assert result.seconds == 0.25
    assert result.to_dict() == {'name': 'covering', 'status': 'ok', 'seconds': 0.25}
    assert result.render() == ['covering: ok [0.250s]']


def test_report_violated_result(product_lattice):
    from orthologic.report import run_check

    result = run_check(product_lattice, 'orthomodularity')
    lines = result.render()
    assert lines[0] == 'orthomodularity: violated'
    assert lines[1].startswith('  witness: {(p1,p1)} <= {(p1,p1), (p2,p2)}')
    assert result.to_dict()['witnesses'][0]['elements'] == [1, 17]


def test_report_statistics():
    from orthologic.report import CheckReport

    report = CheckReport('-', {'elements': 2})
    report.set_statistic('atoms', 1)
    report.add_note('something')
    assert report.get_statistics() == {'elements': 2, 'atoms': 1}
    assert report.get_result('covering') is None
    assert report.render() == 'source: -\nelements: 2\natoms: 1\nnote: something'
