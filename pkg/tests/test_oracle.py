# Exact lattice laboratory for orthogonality spaces and their products
# Copyright (c) 2026 The orthologic authors. All rights reserved.
#
# Distributed under the MIT license.
#
# For the full copyright and license information, please view the LICENSE
# file that was distributed with this source code.
import pytest


@pytest.mark.parametrize('first', [1, 2, 3])
@pytest.mark.parametrize('second', [1, 2, 3])
def test_oracle_engines_agree(first, second):
    from orthologic.oracle import oracle_equivalence

    report = oracle_equivalence(first, second)
    assert report.ok
    assert report.mismatch is None
    assert report.elements == report.symbolic_elements
    assert report.classical == (first == 1 or second == 1)
    assert report.printed_pair_differences == report.printed_pair_rows == report.histogram['P']


def test_oracle_mo2_product():
    from orthologic.oracle import oracle_equivalence

    report = oracle_equivalence(2, 2)
    assert report.elements == 114
    assert report.histogram == {'T': 2, 'A1': 4, 'A2': 4, 'S': 16, 'U': 16, 'P': 72}
    assert report.comparisons == 114 + 2 * 114 * 114 + 114 * 16
    assert report.printed_pair_example == (
        'Pair{(p1,p1),(p2,p2)}: computed {(p1*,p2*), (p2*,p1*)}, printed {(p1*,p2*), (p2*,p2*)}'
    )

    data = report.to_dict()
    assert data['components'] == [2, 2]
    assert data['ok'] is True
    assert data['elements'] == 114
    assert data['mismatch'] is None
    assert data['printed_pair_perp']['differences'] == 72

    lines = report.render().split('\n')
    assert lines[0] == 'oracle MO(2) x MO(2): agreement'
    assert lines[1] == 'elements: 114 enumerated, 114 symbolic'
    assert lines[2] == 'families: T=2 A1=4 A2=4 S=16 U=16 P=72'
    assert lines[4] == 'pair perp: computed crossed form verified; the printed row differs on 72 of 72 pairs'


def test_oracle_mo3_product():
    from orthologic.oracle import oracle_equivalence

    report = oracle_equivalence(3, 3)
    assert report.elements == 536


def test_oracle_classical_note():
    from orthologic.oracle import oracle_equivalence

    report = oracle_equivalence(1, 1)
    assert report.elements == 16
    assert 'note: classical component' in report.render()


@pytest.mark.parametrize('sizes', [(0, 2), (2, 5)])
def test_oracle_bounds(sizes):
    from orthologic.oracle import oracle_equivalence

    with pytest.raises(ValueError):
        oracle_equivalence(*sizes)


def test_oracle_reports_the_first_mismatch(mocker):
    from orthologic.oracle import oracle_equivalence
    from orthologic.separated import SeparatedProduct

    mocker.patch.object(SeparatedProduct, 'perp', lambda self, element: element)
    report = oracle_equivalence(1, 1)
    assert not report.ok
    assert str(report.mismatch) == 'perp(Bottom): expected Top, got Bottom'
    assert report.to_dict()['mismatch'] == {
        'operation': 'perp',
        'arguments': 'Bottom',
        'expected': 'Top',
        'actual': 'Bottom',
    }
    assert 'counterexample: perp(Bottom): expected Top, got Bottom' in report.render()


def test_oracle_classification_failure(mocker):
    from orthologic.oracle import oracle_equivalence
    from orthologic.separated import ClassificationError
    from orthologic.separated import SeparatedProduct

    mocker.patch.object(SeparatedProduct, 'classify', side_effect=ClassificationError('{}'))
    report = oracle_equivalence(1, 1)
    assert not report.ok
    assert report.mismatch.operation == 'classify'
    assert report.comparisons == 0
