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

from dataclasses import replace

import pytest

from prational.errors import DomainError, PrecisionError, RecordError
from prational.numberfield import ideal_from_two_generators, mul, principal_ideal, split_prime
from prational.rationality import (Branch, Reason, Status, _log_index_at, condition1, log_index_split_cyclic,
                                  verdict)
from prational.records import build_field, data_path, load_records
from prational.ring import ModPoly


EXAMPLES = {r.label: r for r in load_records(data_path('examples.csv'))}
FIELDS = {r.label: r for r in load_records(data_path('fields.csv'))}

CUBIC = EXAMPLES['cubic-19427']
K, UNIT = build_field(CUBIC)
Q = ideal_from_two_generators(K, 2, ModPoly((1, 1), 2))
G = K.from_power(CUBIC.aux_ideal.power_generator)


def test_split_cyclic_index():
    assert log_index_split_cyclic(K, 3, Q, G, UNIT) == 3
    assert log_index_split_cyclic(K, 3, Q, G, UNIT, roots=(2, 0, 1)) == 3
    assert log_index_split_cyclic(K, 3, Q, G, UNIT, precision=8) == 3


def test_split_cyclic_index_ignores_higher_order_terms():
    # g (1 + 9a) moves every log(g_i^2) / 6 by a multiple of 3
    roots = [(-pf.generator.coefficients[0]) % 3 for pf in split_prime(K, 3)]
    shifted = mul(K, G, K.from_power((1, 9)))
    assert _log_index_at(K, 3, G, UNIT, roots, 8) == 3
    assert _log_index_at(K, 3, shifted, UNIT, roots, 8) == 3


def test_split_cyclic_index_of_principal_ideal():
    two = principal_ideal(K, K.element((2,)))
    assert log_index_split_cyclic(K, 3, two, K.element((8,)), UNIT) == 1


def test_split_cyclic_index_rejects_bad_input():
    with pytest.raises(DomainError):
        log_index_split_cyclic(K, 3, Q, K.element((2,)), UNIT)
    with pytest.raises(DomainError):
        log_index_split_cyclic(K, 5, Q, G, UNIT)
    with pytest.raises(DomainError):
        log_index_split_cyclic(K, 3, Q, G, UNIT, roots=(0, 1, 1))
    # at 3-adic precision 2 the unit logarithm has valuation 1 and cannot be told apart from 0
    with pytest.raises(PrecisionError):
        log_index_split_cyclic(K, 3, Q, G, UNIT, precision=2, precision_cap=2)


def test_condition1_branches():
    report = condition1(K, 3, CUBIC, UNIT)
    assert report.branch is Branch.SPLIT_CYCLIC_INDEX and report.index == 3 and report.holds
    report = condition1(K, 5, CUBIC, UNIT)
    assert report.branch is Branch.TRIVIAL_CLASS_NUMBER and report.holds
    report = condition1(K, 3, replace(CUBIC, aux_ideal=None), UNIT)
    assert report.branch is Branch.UNDETERMINED and report.holds is None
    report = condition1(K, 3, replace(CUBIC, class_number=9), UNIT)
    assert report.branch is Branch.UNDETERMINED
    report = condition1(K, 3, CUBIC, UNIT, precision_cap=2)
    assert report.branch is Branch.UNDETERMINED
    with pytest.raises(RecordError):
        condition1(K, 3, replace(CUBIC, class_number=None), UNIT)


def test_three_rational_cubic():
    v = verdict(K, 3, CUBIC, UNIT)
    assert v.status is Status.P_RATIONAL and v.is_p_rational
    assert v.reasons == (Reason.CLASS_NUMBER_DIVISIBLE,)
    assert v.condition2.holds
    v = verdict(K, 3, CUBIC, UNIT, precision_cap=2)
    assert v.status is Status.UNDETERMINED
    assert Reason.CONDITION1_UNDETERMINED in v.reasons


def test_inert_quartic():
    record = EXAMPLES['quartic-inert-5']
    L, unit = build_field(record)
    v = verdict(L, 5, record, unit)
    assert v.status is Status.P_RATIONAL and v.reasons == ()
    assert v.condition1.branch is Branch.TRIVIAL_CLASS_NUMBER
    v = verdict(L, 3, record, unit)
    assert v.status is Status.NOT_APPLICABLE and v.reasons == (Reason.GUARD,)
    assert v.condition1 is None and v.condition2 is None


def test_torsion_verdict():
    record = FIELDS['x^3-26']
    L, unit = build_field(record)
    v = verdict(L, 11, record, unit)
    assert v.status is Status.NOT_P_RATIONAL and not v.is_p_rational
    assert v.reasons == (Reason.TORSION_NONTRIVIAL,)
    with pytest.raises(DomainError):
        verdict(L, 4, record, unit)
    with pytest.raises(RecordError):
        verdict(L, 11, replace(record, class_number=None), unit)


if __name__ == '__main__':
    test_split_cyclic_index()
    test_split_cyclic_index_ignores_higher_order_terms()
    test_split_cyclic_index_of_principal_ideal()
    test_split_cyclic_index_rejects_bad_input()
    test_condition1_branches()
    test_three_rational_cubic()
    test_inert_quartic()
    test_torsion_verdict()
