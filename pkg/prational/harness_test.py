# Copyright 2024 The prational Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

import tempfile

import numpy as np
import pytest

from prational.errors import DomainError
from prational.harness import (Cell, TableRow, cell_of, density_scan, evaluate_cell, load_table_expectations,
                               render_csv, render_text, reproduce_table)
from prational.rationality import Status, verdict
from prational.records import FieldRecord, build_field, data_path, load_records
from prational.tracker import DensityTracker


FIELDS = load_records(data_path('fields.csv'))
EXAMPLES = {r.label: r for r in load_records(data_path('examples.csv'))}
EXPECTED = load_table_expectations(data_path('table_expected.csv'))


def test_expectations():
    assert len(EXPECTED) == 47
    assert sum(1 for row in EXPECTED.values() if row.table == 1) == 35
    row = EXPECTED['x^3-26']
    assert row.tor == (11,) and row.not_p_rational == ('11',) and row.poly == (-26, 0, 0, 1)
    assert EXPECTED['x^4-x^3+x^2-x+1'].not_applicable == (5,)
    assert EXPECTED['x^4+1'].tor == (13, 31)


def test_reproduce_table():
    rows = reproduce_table(FIELDS, 5, 100)
    assert [row.label for row in rows] == [r.label for r in FIELDS]
    by_label = {row.label: row for row in rows}
    assert sorted(by_label) == sorted(EXPECTED)
    for label, want in EXPECTED.items():
        row = by_label[label]
        assert row.poly == want.poly
        assert row.not_applicable == want.not_applicable
        assert row.class_divisors == want.p_divides_h
        assert row.torsion == want.tor
        assert row.not_p_rational == want.not_p_rational
        assert not row.errors
    # class number divisible by p with no auxiliary ideal stays undecided
    assert by_label['x^3-x^2+9x-21'].undetermined == (7,)
    assert by_label['x^3-x^2+7x-6'].not_p_rational == ('5?',)
    assert reproduce_table(FIELDS[:8], 5, 40, worker_count=4) == reproduce_table(FIELDS[:8], 5, 40)
    with pytest.raises(DomainError):
        reproduce_table(FIELDS, 3, 100)


def test_cells():
    record = next(r for r in FIELDS if r.label == 'x^4-x^3+x^2-x+1')
    K, unit = build_field(record)
    assert cell_of(verdict(K, 5, record, unit)) is Cell.NOT_APPLICABLE
    assert evaluate_cell(record, 11) is Cell.P_RATIONAL
    x26 = next(r for r in FIELDS if r.label == 'x^3-26')
    assert evaluate_cell(x26, 11) is Cell.TORSION_NONTRIVIAL
    # Z[a] for a^3 = 250 is not 5-maximal; the failure is reported as a cell
    broken = FieldRecord('x^3-250', (-250, 0, 0, 1), 1, (-5, 1), 5)
    assert evaluate_cell(broken, 5) is Cell.ERROR


def test_row_rendering():
    row = TableRow('f', (1, 0, 0, 0, 1), ((5, Cell.UNDETERMINED), (7, Cell.TORSION_NONTRIVIAL), (11, Cell.P_RATIONAL),
                                         (13, Cell.ERROR)), (5,))
    assert row.not_p_rational == ('5?', '7', '13!')
    assert row.exceptional
    plain = TableRow('g', (1, 0, 1), ((5, Cell.P_RATIONAL),))
    assert not plain.exceptional
    text = render_text([row, plain], 5, 13)
    lines = text.splitlines()
    assert lines[0].split() == ['field', 'not', 'applicable', 'p|h', 'tor', 'not', 'p-rational']
    assert lines[1].split() == ['f', '-', '5', '7', '5?,7,13!']
    assert lines[-1] == 'p-rational for every prime 5 <= p <= 13: g'
    csv_text = render_csv([row, plain])
    assert csv_text.splitlines() == ['label,poly,not_applicable,p_divides_h,tor,not_p_rational',
                                     'f,1;0;0;0;1,,5,7,5?;7;13!', 'g,1;0;1,,,,']


def test_density_scan():
    record = next(r for r in FIELDS if r.label == 'x^4+1')
    with tempfile.TemporaryDirectory() as directory:
        tracker = DensityTracker(directory)
        result = density_scan(record, 50, tracker=tracker)
        assert result.count == 11 and result.undetermined == 0
        assert [p for p, status in result.per_prime if status is Status.NOT_P_RATIONAL] == [13, 31]
        assert abs(result.ratio - 11 / np.log(50)) < 1e-12
        assert tracker.xs == [p for p, _ in result.per_prime]
        assert tracker.tracks['count'][-1] == 11
    with pytest.raises(DomainError):
        density_scan(record, 4)


def test_density_scan_inert_quartic():
    # x^4 - 2x^2 + 3 has d = 2^10 * 3 and no torsion obstruction below 100
    record = EXAMPLES['quartic-inert-5']
    result = density_scan(record, 60, pmin=3)
    assert [p for p, _ in result.per_prime] == [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert all(status is Status.P_RATIONAL for _, status in result.per_prime)
    assert result.count == 15 and result.undetermined == 0
    assert result.label == 'quartic-inert-5'


if __name__ == '__main__':
    test_expectations()
    test_reproduce_table()
    test_cells()
    test_row_rendering()
    test_density_scan()
    test_density_scan_inert_quartic()
