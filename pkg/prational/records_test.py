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

import json
import os
import tempfile

import pytest

from prational.errors import RecordError
from prational.records import (COLUMNS, AuxIdeal, build_field, data_path, load_prime_table, load_records,
                               records_to_csv, write_records)


HEADER = ','.join(COLUMNS)


def _write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        f.write(text)
    return path


def test_bundled_records():
    fields = load_records(data_path('fields.csv'))
    assert len(fields) == 47
    assert sum(1 for r in fields if r.degree == 3) == 35
    by_label = {r.label: r for r in fields}
    assert by_label['x^3-26'].class_number == 3 and by_label['x^3-26'].degree == 3
    assert by_label['x^4+9'].unit_denominator == 3
    assert by_label['x^4+1'].torsion_generator == (0, 1)
    assert by_label['x^3-x^2+x-24'].unit_denominator == 3
    assert by_label['x^4-x^3-2x^2-3x+9'].torsion_order == 6
    assert by_label['x^4+9'].class_number == 2
    examples = {r.label: r for r in load_records(data_path('examples.csv'))}
    assert examples['cubic-19427'].aux_ideal == AuxIdeal(2, (1, 1), (-604, 265, -77))
    assert examples['quartic-inert-5'].aux_ideal is None


def test_write_and_reload():
    records = load_records(data_path('fields.csv')) + load_records(data_path('examples.csv'))
    text = records_to_csv(records)
    assert text.splitlines()[0] == HEADER
    with tempfile.TemporaryDirectory() as directory:
        path = os.path.join(directory, 'records.csv')
        write_records(records, path)
        assert load_records(path) == records


def test_json_records():
    rows = [{'label': 'inert', 'poly': [3, 0, -2, 0, 1], 'h': 1, 'unit': [-2, -1, 1, 1]}]
    with tempfile.TemporaryDirectory() as directory:
        path = _write(directory, 'records.json', json.dumps(rows))
        records = load_records(path)
        assert len(records) == 1 and records[0].poly == (3, 0, -2, 0, 1)
        assert records[0].torsion_order == 2 and records[0].unit_denominator == 1
        path = _write(directory, 'bad.json', '{"label": "x"}')
        with pytest.raises(RecordError):
            load_records(path)


def test_malformed_rows():
    with tempfile.TemporaryDirectory() as directory:
        path = _write(directory, 'bad.csv', 'label,poly,h,unit\ncubic,27;-4;0;1,3,one;two\n')
        with pytest.raises(RecordError) as e:
            load_records(path)
        assert e.value.line == 2 and e.value.path == path
        path = _write(directory, 'missing.csv', 'label,h\ncubic,3\n')
        with pytest.raises(RecordError):
            load_records(path)
        path = _write(directory, 'degree.csv', 'label,degree,poly,unit\ncubic,4,27;-4;0;1,1;1\n')
        with pytest.raises(RecordError):
            load_records(path)
        with pytest.raises(RecordError):
            load_records(os.path.join(directory, 'absent.csv'))


def test_invalid_fields_are_skipped():
    text = '# comment\nlabel,poly,h,unit\nreducible,0;-1;0;1,1,0;1;0\nnot a unit,27;-4;0;1,3,0;1;0\n' \
           'inert,3;0;-2;0;1,1,-2;-1;1;1\n'
    with tempfile.TemporaryDirectory() as directory:
        records = load_records(_write(directory, 'mixed.csv', text))
    assert [r.label for r in records] == ['inert']


def test_build_field():
    record = load_records(data_path('examples.csv'))[1]
    K, unit = build_field(record)
    assert K.degree == 4 and K.signature == (0, 2)
    assert unit.unit == K.from_power(record.unit)
    assert build_field(record) is build_field(record)


def test_prime_table():
    assert load_prime_table(data_path('pure_cubic_h.csv'), ['h']) == {2791: 31876011}
    with tempfile.TemporaryDirectory() as directory:
        path = _write(directory, 'ggc.csv', 'p,h1,hL\n17,1,1\n41,2,2\n')
        assert load_prime_table(path, ['h1', 'hL']) == {17: (1, 1), 41: (2, 2)}
        with pytest.raises(RecordError):
            load_prime_table(path, ['h'])
        path = _write(directory, 'bad.csv', 'p,h\n17,x\n')
        with pytest.raises(RecordError):
            load_prime_table(path, ['h'])


if __name__ == '__main__':
    test_bundled_records()
    test_write_and_reload()
    test_json_records()
    test_malformed_rows()
    test_invalid_fields_are_skipped()
    test_build_field()
    test_prime_table()
