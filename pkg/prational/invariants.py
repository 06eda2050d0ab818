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
"""Property suites run by ``prational selftest``.

Every suite takes a seeded :class:`random.Random` and a scale factor for its sample sizes, raises
:class:`~prational.errors.InvariantViolation` on the first failed property and returns the number of checks made.
"""

import itertools
import logging
import random

from sympy import primerange
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_irreducible_p, gf_monic, gf_mul, gf_pow

from .errors import DomainError, InvariantViolation, PrationalError, SplittingUndetermined
from .families import (class_number_dirichlet, class_number_forms, ggc_scan, lemma_b_bound, pure_cubic_instance,
                       pure_cubic_scan, roots_of_unity_count, squarefree_part)
from .harness import load_table_expectations, reproduce_table
from .numberfield import (UnitData, ideal_from_two_generators, ideal_multiply, ideal_power, inverse, make_field, mul,
                          neg, norm, pow_mod, prime_ideal, principal_ideal, split_prime)
from .rationality import log_index_split_cyclic
from .recurrence import RecurrenceSpec, cross_check, f_index_mod
from .records import build_field, data_path, load_prime_table, load_records
from .registry import Registry
from .ring import IntPoly, ModPoly, PadicApprox, discriminant, factor_mod_p, hensel_lift_root, padic_log
from .torsion import condition2, condition2_split_crt_check, prop24_equivalence_check


__all__ = ['SUITES', 'run_suites', 'bundled_records']


logger = logging.getLogger("prational")

SUITES = Registry('suite')

_SMALL_PRIMES = [int(p) for p in primerange(2, 500)]


def _check(condition, message, *args):
    if not condition:
        raise InvariantViolation(message % args)


def _count(n, scale):
    return max(1, int(round(n * scale)))


def bundled_records():
    return load_records(data_path('fields.csv')) + load_records(data_path('examples.csv'))


def _random_field(rng, degree):
    while True:
        coefficients = [rng.randint(-10, 10) for _ in range(degree)] + [1]
        if coefficients[0] == 0:
            continue
        try:
            return make_field(IntPoly(coefficients))
        except DomainError:
            continue


def _random_element(rng, K, bound=9):
    return K.element(tuple(rng.randint(-bound, bound) for _ in range(K.degree)))


@SUITES.register('discriminant')
def discriminant_suite(rng, scale):
    n = _count(500, scale)
    for _ in range(n):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        value = discriminant(IntPoly((b, a, 0, 1)))
        _check(value == -4 * a ** 3 - 27 * b ** 2, 'discriminant of x^3 + %dx + %d is %d', a, b, value)
    return n


@SUITES.register('factorization')
def factorization_suite(rng, scale):
    n = _count(300, scale)
    for _ in range(n):
        degree = rng.choice((3, 4))
        f = IntPoly([rng.randint(-20, 20) for _ in range(degree)] + [1])
        p = rng.choice(_SMALL_PRIMES)
        factors = factor_mod_p(f, p)
        product = [ZZ(1)]
        for g, e in factors:
            _check(gf_irreducible_p(g.to_gf(), p, ZZ), '%s is reducible mod %d', g, p)
            product = gf_mul(product, gf_pow(g.to_gf(), e, p, ZZ), p, ZZ)
        target = gf_monic(gf_from_int_poly(f.to_dense(), p), p, ZZ)[1]
        _check(product == target, 'factors of %s mod %d do not multiply back', f, p)
        _check(sum(g.degree * e for g, e in factors) == degree, 'degrees of %s mod %d do not add up', f, p)
    return n


@SUITES.register('hensel')
def hensel_suite(rng, scale):
    checks = 0
    for _ in range(_count(100, scale)):
        f = IntPoly([rng.randint(-30, 30) for _ in range(3)] + [1])
        p = rng.choice(_SMALL_PRIMES[:25])
        k = rng.randint(1, 8)
        df = f.derivative()
        for r0 in range(p):
            if f(r0) % p == 0 and df(r0) % p:
                r = hensel_lift_root(f, p, r0, k)
                _check(r.value % p == r0 and f(r.value) % p ** k == 0, 'lift of %d for %s mod %d^%d', r0, f, p, k)
                checks += 1
    return checks


@SUITES.register('padic_log')
def padic_log_suite(rng, scale):
    n = _count(200, scale)
    for _ in range(n):
        p = rng.choice(_SMALL_PRIMES[1:15])
        k = rng.randint(2, 8)
        m = p ** k
        u = PadicApprox(1 + p * rng.randrange(m), k, p)
        v = PadicApprox(1 + p * rng.randrange(m), k, p)
        _check(padic_log(u * v) == padic_log(u) + padic_log(v), 'log is not additive at %d^%d', p, k)
        t = rng.randint(1, k - 1)
        w = rng.randrange(1, m)
        while w % p == 0:
            w = rng.randrange(1, m)
        x = padic_log(PadicApprox(1 + p ** t * w, k, p))
        _check(x.valuation() == t, 'v(log(1 + %d^%d w)) = %d', p, t, x.valuation())
    return 2 * n


@SUITES.register('splitting')
def splitting_suite(rng, scale):
    checks = 0
    for _ in range(_count(1000, scale)):
        K = _random_field(rng, rng.choice((3, 4)))
        p = rng.choice(_SMALL_PRIMES)
        try:
            factors = split_prime(K, p)
        except SplittingUndetermined:
            continue
        _check(sum(pf.e * pf.f for pf in factors) == K.degree, 'sum of e f over %d in %s', p, K.poly)
        product = None
        for pf in factors:
            P = prime_ideal(K, pf)
            _check(P.norm == p ** pf.f, 'N(%s) = %d', pf, P.norm)
            _check(ideal_power(K, P, 2).norm == p ** (2 * pf.f), 'N(%s^2) is not p^(2f)', pf)
            power = ideal_power(K, P, pf.e)
            product = power if product is None else ideal_multiply(K, product, power)
        _check(product == principal_ideal(K, K.element((p,))), 'prime ideals over %d do not multiply to p', p)
        checks += 1
    return checks


@SUITES.register('norm')
def norm_suite(rng, scale):
    n = _count(500, scale)
    fields = [_random_field(rng, 3), _random_field(rng, 4)]
    for _ in range(n):
        K = rng.choice(fields)
        a, b = _random_element(rng, K), _random_element(rng, K)
        _check(norm(K, mul(K, a, b)) == norm(K, a) * norm(K, b), 'norm is not multiplicative in %s', K.poly)
    return n


@SUITES.register('pow_mod')
def pow_mod_suite(rng, scale):
    n = _count(200, scale)
    for _ in range(n):
        K = _random_field(rng, rng.choice((3, 4)))
        a = _random_element(rng, K, 5)
        e = rng.randint(1, 25)
        m = rng.choice(_SMALL_PRIMES[:10]) ** rng.randint(1, 3)
        exact = K.one()
        for _ in range(e):
            exact = mul(K, exact, a)
        expected = tuple(c % m for c in exact.coords)
        _check(pow_mod(K, a, e, m).coords == expected, 'pow_mod disagrees with repeated products mod %d', m)
    return n


@SUITES.register('recurrence')
def recurrence_suite(rng, scale):
    checks = 0
    for _ in range(_count(100, scale)):
        spec = RecurrenceSpec(rng.randint(-9, 9), rng.randint(-9, 9), rng.choice((-1, 1)))
        m = rng.randint(2, 10 ** 6)
        values = [0, 0, 1]
        while len(values) <= 2000:
            values.append((spec.a2 * values[-1] + spec.a1 * values[-2] + spec.a0 * values[-3]) % m)
        sample = list(range(60)) + rng.sample(range(60, 2001), 40)
        for i in sample:
            _check(f_index_mod(spec, i, m) == values[i] % m, 'F(%d) mod %d for %s', i, m, spec)
            checks += 1
    return checks


def _fundamental_discriminants(bound):
    for D in range(-3, -bound - 1, -1):
        if D % 4 == 1 and squarefree_part(D) == D:
            yield D
        elif D % 4 == 0 and (D // 4) % 4 in (2, 3) and squarefree_part(D // 4) == D // 4:
            yield D


@SUITES.register('class_numbers')
def class_number_suite(rng, scale):
    checks = 0
    for D in _fundamental_discriminants(200):
        h = class_number_forms(D)
        _check(h == class_number_dirichlet(D), 'forms and character sum disagree for D = %d', D)
        _check(h <= lemma_b_bound(-D, roots_of_unity_count(D)), 'h(%d) = %d exceeds the analytic bound', D, h)
        checks += 1
    return checks


def _condition2_checks(K, unit, p):
    report = condition2(K, p, unit)
    checks = 1
    factors = [entry.factor for entry in report.entries]
    if K.degree == 3 and len(factors) == 3 and all(pf.e == 1 and pf.f == 1 for pf in factors):
        _check(condition2_split_crt_check(K, p, unit) == report.holds, 'CRT form disagrees for %s at %d', K.poly, p)
        checks += 1
    for pf in factors:
        if pf.e == 1 and pf.f == 1:
            _check(prop24_equivalence_check(K, p, unit, pf), 'exponents p-1 and p^2-1 disagree at %s', pf)
            checks += 1
    for other in (UnitData(inverse(K, unit.unit), unit.torsion_order, unit.torsion_generator),
                  UnitData(neg(K, unit.unit), unit.torsion_order, unit.torsion_generator)):
        _check(condition2(K, p, other).holds == report.holds, 'choice of unit changes the test for %s at %d',
               K.poly, p)
        checks += 1
    return checks


@SUITES.register('condition2')
def condition2_suite(rng, scale):
    checks = 0
    pmax = max(7, int(100 * scale))
    fields = [build_field(record) for record in bundled_records()]
    fields += [(instance.field, instance.unit) for instance in (pure_cubic_instance(p) for p in (5, 7, 11, 13))]
    for K, unit in fields:
        for p in primerange(5, pmax + 1):
            try:
                checks += _condition2_checks(K, unit, int(p))
            except SplittingUndetermined:
                continue
    return checks


@SUITES.register('cross_check')
def cross_check_suite(rng, scale):
    checks = 0
    pmax = max(7, int(300 * scale))
    fields = [build_field(record) for record in bundled_records()]
    fields = [(K, unit) for K, unit in fields if K.degree == 3]
    fields += [(instance.field, instance.unit) for instance in (pure_cubic_instance(p) for p in (5, 7))]
    for K, unit in fields:
        spec = RecurrenceSpec.from_unit(K, unit.unit)
        for p in primerange(3, pmax + 1):
            try:
                report = cross_check(K, unit, spec, int(p))
            except SplittingUndetermined:
                continue
            _check(not report.violation, 'screen nonzero without witness for %s at %d', K.poly, p)
            checks += 1
    return checks


@SUITES.register('log_index')
def log_index_suite(rng, scale):
    record = next(r for r in load_records(data_path('examples.csv')) if r.aux_ideal is not None)
    K, unit = build_field(record)
    aux = record.aux_ideal
    Q = ideal_from_two_generators(K, aux.q, ModPoly(aux.generator_poly, aux.q))
    g = K.from_power(aux.power_generator)
    p = 3
    checks = 0
    for roots in itertools.permutations(range(p)):
        _check(log_index_split_cyclic(K, p, Q, g, unit, roots=roots) == p, 'index changes with root order %s', roots)
        checks += 1
    for precision in (4, 8, 16):
        _check(log_index_split_cyclic(K, p, Q, g, unit, precision=precision) == p, 'index changes at %d', precision)
        checks += 1
    # a principal ideal lands in the logarithms of the principal ideals
    two = principal_ideal(K, K.element((2,)))
    _check(log_index_split_cyclic(K, p, two, K.element((8,)), unit) == 1, 'principal ideal gives index p')
    return checks + 1


@SUITES.register('table')
def table_suite(rng, scale):
    expected = load_table_expectations(data_path('table_expected.csv'))
    rows = reproduce_table(load_records(data_path('fields.csv')), 5, 100)
    for row in rows:
        want = expected[row.label]
        _check(row.not_applicable == want.not_applicable, '%s: not applicable at %s', row.label, row.not_applicable)
        _check(row.class_divisors == want.p_divides_h, '%s: p | h at %s', row.label, row.class_divisors)
        _check(row.torsion == want.tor, '%s: torsion at %s, expected %s', row.label, row.torsion, want.tor)
        _check(row.not_p_rational == want.not_p_rational, '%s: not p-rational at %s', row.label, row.not_p_rational)
    return len(rows)


@SUITES.register('pure_cubic')
def pure_cubic_suite(rng, scale):
    pmax = max(5, int(499 * scale))
    rows = pure_cubic_scan(5, pmax)
    for row in rows:
        _check(row.condition2_holds, 'no torsion witness for p = %d', row.p)
        _check(row.closed_form_ok, 'eps^(p-1) mod p^2 differs from the closed form for p = %d', row.p)
    h_data = load_prime_table(data_path('pure_cubic_h.csv'), ['h'])
    checks = len(rows)
    if scale >= 1:
        for p, h in h_data.items():
            row = pure_cubic_scan(p, p, h_data)[0]
            _check(row.class_flag == 'p|h' and row.condition2_holds, 'class number flag for p = %d', p)
            checks += 1
    return checks


@SUITES.register('ggc')
def ggc_suite(rng, scale):
    xmax = max(100, int(1000 * scale))
    candidates = ggc_scan(xmax, 1.0)
    _check(any(c.p == 17 for c in candidates), 'p = 17 missing from the scan')
    for c in candidates:
        _check((c.p - 1) % (c.n * c.n) == 0 and (c.p + 1) % (c.m * c.m) == 0, 'square divisors of %d', c.p)
        _check(c.n > c.threshold and c.m > c.threshold, 'threshold for %d', c.p)
        _check((c.verdict.value == 'GgcHolds') == (c.hK2 % c.p != 0), 'verdict for %d', c.p)
        _check(c.hK2 <= c.bound, 'bound for %d', c.p)
    return len(candidates)


def run_suites(seed, scale=1.0, names=None):
    """ Runs the registered suites.

    Returns:
        List[Tuple[str, bool, str]]: (name, passed, message) per suite, in registration order.
    """
    results = []
    for name in (list(SUITES) if names is None else names):
        suite = SUITES[name]
        rng = random.Random('%s:%s' % (seed, name))
        try:
            checks = suite(rng, scale)
        except PrationalError as e:
            logger.error('suite %s failed: %s: %s', name, type(e).__name__, e)
            results.append((name, False, '%s: %s' % (type(e).__name__, e)))
            continue
        logger.debug('suite %s: %d checks', name, checks)
        results.append((name, True, '%d checks' % checks))
    return results
