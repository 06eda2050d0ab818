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

from prational.errors import DomainError
from prational.numberfield import make_field, split_prime
from prational.records import build_field, data_path, load_records
from prational.ring import IntPoly
from prational.torsion import (applicability_guard, condition2, condition2_split_crt_check,
                               prop24_equivalence_check)


EXAMPLES = {r.label: r for r in load_records(data_path('examples.csv'))}
FIELDS = {r.label: r for r in load_records(data_path('fields.csv'))}


def test_guard():
    K, _ = build_field(FIELDS['x^4-x^3+x^2-x+1'])
    guard = applicability_guard(K, 5, split_prime(K, 5))
    assert not guard and guard.reason == 'totally ramified'
    assert applicability_guard(K, 11, split_prime(K, 11))
    assert applicability_guard(K, 2, ()).reason == 'p = 2'

    K, _ = build_field(EXAMPLES['quartic-inert-5'])
    assert applicability_guard(K, 3, split_prime(K, 3)).reason == '3 ramified'

    real = make_field(IntPoly((1, -3, 0, 1)))
    assert not applicability_guard(real, 5, split_prime(real, 5))


def test_inert_quartic_residue():
    K, unit = build_field(EXAMPLES['quartic-inert-5'])
    report = condition2(K, 5, unit)
    assert len(report.entries) == 1
    entry = report.entries[0]
    assert entry.factor.f == 4 and entry.exponent == 624 and entry.modulus == 25
    assert entry.residue.coords == (1, 5, 0, 15)
    assert not entry.congruent
    assert report.holds and report.witness == entry.factor


def test_nontrivial_torsion():
    K, unit = build_field(FIELDS['x^3-26'])
    report = condition2(K, 11, unit)
    assert not report.holds and report.witness is None
    assert condition2(K, 13, unit).holds


def test_roots_of_unity_twists():
    K, unit = build_field(FIELDS['x^4+1'])
    assert unit.torsion_order == 8
    assert not condition2(K, 13, unit).holds
    assert condition2(K, 17, unit).holds


def test_global_congruence_agrees():
    K, unit = build_field(FIELDS['x^3-26'])
    factors = split_prime(K, 19)
    assert [(pf.e, pf.f) for pf in factors] == [(1, 1)] * 3
    assert condition2_split_crt_check(K, 19, unit) == condition2(K, 19, unit).holds
    for pf in factors:
        assert prop24_equivalence_check(K, 19, unit, pf)
    with pytest.raises(DomainError):
        condition2_split_crt_check(K, 5, unit)
    with pytest.raises(DomainError):
        prop24_equivalence_check(K, 5, unit, factors[0])


if __name__ == '__main__':
    test_guard()
    test_inert_quartic_residue()
    test_nontrivial_torsion()
    test_roots_of_unity_twists()
    test_global_congruence_agrees()
