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

from fractions import Fraction

import pytest

from prational.errors import DomainError
from prational.families import (GgcVerdict, class_number_dirichlet, class_number_forms, field_discriminant,
                                ggc_evaluate, ggc_scan, imag_quadratic_class_number, kuroda_check, lemma_a_scan,
                                lemma_b_bound, pure_cubic_instance, pure_cubic_row, pure_cubic_scan,
                                roots_of_unity_count, squarefree_part)
from prational.recurrence import Shape


def test_pure_cubic_instance():
    assert pure_cubic_instance(7).shape is Shape.SPLIT
    assert pure_cubic_instance(5).shape is Shape.MIXED
    instance = pure_cubic_instance(5)
    assert instance.field.poly.coefficients == (-124, 0, 0, 1)
    assert instance.unit.unit == instance.field.element((25, 5, 1))
    with pytest.raises(DomainError):
        pure_cubic_instance(3)


def test_pure_cubic_scan():
    rows = pure_cubic_scan(5, 30)
    assert [row.p for row in rows] == [5, 7, 11, 13, 17, 19, 23, 29]
    for row in rows:
        assert row.condition2_holds and row.witness is not None
        assert row.closed_form_ok
        assert row.class_flag == 'h-unknown'
        assert row.shape is (Shape.SPLIT if row.p % 3 == 1 else Shape.MIXED)
    assert pure_cubic_scan(5, 30, worker_count=3) == rows
    with pytest.raises(DomainError):
        pure_cubic_scan(3, 30)


def test_pure_cubic_class_number_flag():
    row = pure_cubic_row(2791, {2791: 31876011})
    assert row.class_flag == 'p|h' and row.class_number == 31876011
    assert row.condition2_holds
    assert pure_cubic_row(5, {5: 1}).class_flag == 'p-coprime'


def test_quadratic_helpers():
    assert squarefree_part(-288) == -2
    assert squarefree_part(12) == 3
    assert field_discriminant(-2) == -8
    assert field_discriminant(-3) == -3
    assert roots_of_unity_count(-4) == 4 and roots_of_unity_count(-3) == 6 and roots_of_unity_count(-8) == 2
    with pytest.raises(DomainError):
        squarefree_part(0)


def test_class_numbers():
    for D, h in [(-3, 1), (-4, 1), (-7, 1), (-8, 1), (-15, 2), (-20, 2), (-23, 3), (-24, 2), (-47, 5), (-56, 4)]:
        assert class_number_forms(D) == h
        assert class_number_dirichlet(D) == h
    assert imag_quadratic_class_number(-5) == 2
    with pytest.raises(DomainError):
        class_number_forms(-6)
    with pytest.raises(DomainError):
        imag_quadratic_class_number(5)


def test_class_numbers_odd_discriminants():
    # chi_D(2) is +1 for D = 1 mod 8 and -1 for D = 5 mod 8
    for D, h in [(-71, 7), (-95, 8), (-119, 10), (-43, 1), (-163, 1)]:
        assert class_number_dirichlet(D) == h
        assert class_number_forms(D) == h


def test_lemma_b_bound():
    assert abs(lemma_b_bound(24, 2) - 3.595) < 1e-3
    with pytest.raises(DomainError):
        lemma_b_bound(2, 2)


def test_kuroda_check():
    assert kuroda_check(1, 2, 1, 1).q == 1
    result = kuroda_check(1, 1, 1, 1)
    assert result.q == 2 and result.valid
    result = kuroda_check(1, 3, 1, 1)
    assert result.q == Fraction(2, 3) and not result.valid
    with pytest.raises(DomainError):
        kuroda_check(0, 1, 1, 1)


def test_lemma_a_scan():
    candidates = lemma_a_scan(100, 1.0)
    assert [(c.p, c.n, c.m) for c in candidates] == [(17, 4, 3)]
    assert all(c.residue_class == 1 for c in candidates)
    with pytest.raises(DomainError):
        lemma_a_scan(10, 1.0)
    with pytest.raises(DomainError):
        lemma_a_scan(1000, 1.0, xmax_cap=100)


def test_ggc():
    candidate = ggc_evaluate(lemma_a_scan(100, 1.0)[0], {17: (1, 1)})
    assert candidate.radicand == -2 and candidate.discriminant == -8
    assert candidate.hK2 == 1 and candidate.omega == 2
    assert candidate.real_unit_norm == 1
    assert candidate.verdict is GgcVerdict.GGC_HOLDS
    assert candidate.kuroda.q == 2
    candidates = ggc_scan(1000, 1.0)
    assert candidates[0].p == 17
    for c in candidates:
        assert c.hK2 <= c.bound
        assert (c.verdict is GgcVerdict.GGC_HOLDS) == (c.hK2 % c.p != 0)


if __name__ == '__main__':
    test_pure_cubic_instance()
    test_pure_cubic_scan()
    test_pure_cubic_class_number_flag()
    test_quadratic_helpers()
    test_class_numbers()
    test_class_numbers_odd_discriminants()
    test_lemma_b_bound()
    test_kuroda_check()
    test_lemma_a_scan()
    test_ggc()
