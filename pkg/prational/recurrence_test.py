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

import pytest
from sympy import primerange

from prational.errors import DomainError
from prational.numberfield import split_prime
from prational.records import build_field, data_path, load_records
from prational.recurrence import RecurrenceSpec, Shape, cross_check, f_index_mod, screen, splitting_shape


FIELDS = {r.label: r for r in load_records(data_path('fields.csv'))}
K, UNIT = build_field(FIELDS['x^3-26'])
# 3 - a has minimal polynomial x^3 - 9x^2 + 27x - 1
SPEC = RecurrenceSpec(9, -27, 1)


def test_f_index_mod():
    tribonacci = RecurrenceSpec(1, 1, 1)
    assert [f_index_mod(tribonacci, n, 10 ** 6) for n in range(10)] == [0, 0, 1, 1, 2, 4, 7, 13, 24, 44]
    assert f_index_mod(tribonacci, 9, 10) == 4
    with pytest.raises(DomainError):
        f_index_mod(tribonacci, -1, 10)


def test_str_signs():
    assert str(RecurrenceSpec(1, 1, 1)) == 'F(n+3) = F(n+2) + F(n+1) + F(n)'
    assert str(RecurrenceSpec(-2, 0, 1)) == 'F(n+3) = -2 F(n+2) + F(n)'
    assert str(RecurrenceSpec(0, -1, -5)) == 'F(n+3) = -F(n+1) - 5 F(n)'


def test_from_unit():
    assert RecurrenceSpec.from_unit(K, UNIT.unit) == SPEC
    assert SPEC.companion_poly.coefficients == (-1, 27, -9, 1)
    assert str(SPEC) == 'F(n+3) = 9 F(n+2) - 27 F(n+1) + F(n)'
    L, unit = build_field(FIELDS['x^4+1'])
    with pytest.raises(DomainError):
        RecurrenceSpec.from_unit(L, unit.unit)


def test_splitting_shape():
    assert splitting_shape(split_prime(K, 19)) is Shape.SPLIT
    assert splitting_shape(split_prime(K, 5)) is Shape.MIXED
    assert splitting_shape(split_prime(K, 7)) is Shape.INERT
    with pytest.raises(DomainError):
        splitting_shape(split_prime(K, 13))


def test_screen():
    result = screen(SPEC, 3)
    assert not result.applicable and not result.nonzero
    result = screen(SPEC, 19)
    assert result.applicable and result.shape is Shape.SPLIT and result.index == 18
    result = screen(SPEC, 7)
    assert result.shape is Shape.INERT and result.index == 342
    assert result.value == f_index_mod(SPEC, 342, 49)
    with pytest.raises(DomainError):
        screen(SPEC, 2)


def test_cross_check():
    for p in primerange(5, 60):
        report = cross_check(K, UNIT, SPEC, int(p))
        assert not report.violation
        if report.nonzero:
            assert report.witness
    # no torsion witness at 11, so the screen must vanish there
    report = cross_check(K, UNIT, SPEC, 11)
    assert report.condition2 is not None and not report.witness
    assert report.screen.value == 0
    report = cross_check(K, UNIT, SPEC, 13)
    assert report.condition2 is None and not report.screen.applicable
    with pytest.raises(DomainError):
        cross_check(K, UNIT, RecurrenceSpec(1, 1, 1), 5)


if __name__ == '__main__':
    test_f_index_mod()
    test_str_signs()
    test_from_unit()
    test_splitting_shape()
    test_screen()
    test_cross_check()
