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

import random

import pytest

from prational.errors import InvariantViolation
from prational.invariants import SUITES, bundled_records, run_suites


SEED = 20240229


def test_registry():
    assert list(SUITES)[:3] == ['discriminant', 'factorization', 'hensel']
    with pytest.raises(KeyError):
        SUITES['nonexistent']


@pytest.mark.parametrize('name', ['discriminant', 'factorization', 'hensel', 'padic_log', 'splitting', 'norm',
                                  'pow_mod', 'recurrence', 'class_numbers'])
def test_property_suites(name):
    assert SUITES[name](random.Random(SEED), 0.05) >= 0


def test_field_suites():
    results = run_suites(SEED, 0.02, ['condition2', 'cross_check', 'log_index', 'pure_cubic', 'ggc'])
    assert [passed for _, passed, _ in results] == [True] * 5


def test_table_suite():
    assert SUITES['table'](random.Random(SEED), 1.0) == 47


def test_failures_are_reported():
    def broken(rng, scale):
        raise InvariantViolation('always broken')

    SUITES['broken'] = broken
    try:
        results = run_suites(SEED, 1.0, ['broken'])
    finally:
        del SUITES['broken']
    assert results == [('broken', False, 'InvariantViolation: always broken')]


def test_bundled_records():
    assert len(bundled_records()) == 49


if __name__ == '__main__':
    test_registry()
    for suite in ['discriminant', 'factorization', 'hensel', 'padic_log', 'splitting', 'norm', 'pow_mod',
                  'recurrence', 'class_numbers']:
        test_property_suites(suite)
    test_field_suites()
    test_table_suite()
    test_failures_are_reported()
    test_bundled_records()
