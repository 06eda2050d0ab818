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
"""Third order recurrence screen.

For the minimal polynomial x^3 - a2 x^2 - a1 x - a0 of a unit eps of a cubic field, the sequence
F(n+3) = a2 F(n+2) + a1 F(n+1) + a0 F(n) with F(0) = F(1) = 0, F(2) = 1 is a sum of eps_i^n / f'(eps_i) over the
conjugates. F(p^f - 1) != 0 mod p^2 therefore forces eps^(p^f - 1) != 1 modulo the square of some prime over p.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .numberfield import characteristic_polynomial, mul, split_prime, sub
from .ring import IntPoly, check_prime, discriminant, factor_mod_p
from .torsion import Condition2Report, condition2


__all__ = ['RecurrenceSpec', 'Shape', 'ScreenResult', 'ConsistencyReport', 'f_index_mod', 'splitting_shape',
           'screen', 'cross_check']


logger = logging.getLogger("prational")


class Shape(enum.Enum):
    SPLIT = 'split-completely'
    MIXED = '1+2'
    INERT = 'inert'


# F index used by the screen is p^k - 1
_SHAPE_EXPONENT = {Shape.SPLIT: 1, Shape.MIXED: 2, Shape.INERT: 3}


@dataclass(frozen=True)
class RecurrenceSpec:
    a2: int
    a1: int
    a0: int

    @property
    def companion_poly(self):
        return IntPoly((-self.a0, -self.a1, -self.a2, 1))

    @classmethod
    def from_unit(cls, K, unit):
        """Reads (a2, a1, a0) off the characteristic polynomial of ``unit`` in the cubic field ``K``."""
        if K.degree != 3:
            raise DomainError('recurrences are defined for cubic fields only')
        chi = characteristic_polynomial(K, unit)
        if any(c.denominator != 1 for c in chi):
            raise DomainError('unit is not integral')
        c0, c1, c2 = (int(c) for c in chi[:3])
        if discriminant(IntPoly((c0, c1, c2, 1))) == 0:
            raise DomainError('unit does not generate the cubic field')
        return cls(-c2, -c1, -c0)

    def __str__(self):
        terms = []
        for c, name in ((self.a2, 'F(n+2)'), (self.a1, 'F(n+1)'), (self.a0, 'F(n)')):
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            body = name if abs(c) == 1 else '%d %s' % (abs(c), name)
            terms.append((sign, body))
        if not terms:
            return 'F(n+3) = 0'
        first_sign, first = terms[0]
        rhs = ('-' if first_sign == '-' else '') + first
        rhs += ''.join(' %s %s' % term for term in terms[1:])
        return 'F(n+3) = %s' % rhs


def f_index_mod(spec, n, modulus):
    """ F(n) mod ``modulus`` by square-and-multiply on the companion matrix.

    With v(n) = (F(n+2), F(n+1), F(n)) and v(n+1) = C v(n), F(n) is the bottom-left entry of C^n.
    """
    if n < 0:
        raise DomainError('negative index %d' % n)
    if modulus < 1:
        raise DomainError('modulus must be positive, got %d' % modulus)
    step = np.array([[spec.a2, spec.a1, spec.a0], [1, 0, 0], [0, 1, 0]], dtype=object) % modulus
    result = np.identity(3, dtype=object) % modulus
    while n:
        if n & 1:
            result = result.dot(step) % modulus
        n >>= 1
        if n:
            step = step.dot(step) % modulus
    return int(result[2, 0]) % modulus


def splitting_shape(factors):
    """Maps the prime factors of an unramified prime of a cubic field to a :class:`Shape`."""
    if any(pf.e != 1 for pf in factors):
        raise DomainError('%d is ramified' % factors[0].p)
    degrees = sorted(pf.f for pf in factors)
    if degrees == [1, 1, 1]:
        return Shape.SPLIT
    if degrees == [1, 2]:
        return Shape.MIXED
    if degrees == [3]:
        return Shape.INERT
    raise DomainError('residue degrees %s do not describe a cubic field' % degrees)


@dataclass(frozen=True)
class ScreenResult:
    p: int
    applicable: bool
    shape: Optional[Shape] = None
    index: Optional[int] = None
    value: Optional[int] = None
    reason: str = ''

    @property
    def nonzero(self):
        return bool(self.applicable and self.value)

    @property
    def implied_witness(self):
        return self.nonzero


def screen(spec, p, shape=None):
    """ Evaluates F(p - 1), F(p^2 - 1) or F(p^3 - 1) mod p^2 according to ``shape``.

    Args:
        spec (RecurrenceSpec): recurrence.
        p (int): odd prime.
        shape (Shape, optional): splitting of p in the cubic field; read off the companion polynomial mod p when
            omitted.

    Returns:
        ScreenResult: not applicable when p divides the discriminant of the companion polynomial.
    """
    check_prime(p)
    if p == 2:
        raise DomainError('the recurrence screen needs an odd prime')
    poly = spec.companion_poly
    if discriminant(poly) % p == 0:
        return ScreenResult(p, False, shape, reason='p | d(f)')
    if shape is None:
        shape = {3: Shape.SPLIT, 2: Shape.MIXED, 1: Shape.INERT}[len(factor_mod_p(poly, p))]
    index = p ** _SHAPE_EXPONENT[shape] - 1
    return ScreenResult(p, True, shape, index, f_index_mod(spec, index, p * p))


@dataclass(frozen=True)
class ConsistencyReport:
    p: int
    screen: ScreenResult
    condition2: Optional[Condition2Report]

    @property
    def nonzero(self):
        return self.screen.nonzero

    @property
    def witness(self):
        return self.condition2 is not None and self.condition2.holds

    @property
    def violation(self):
        return self.nonzero and not self.witness


def _is_root(K, spec, eps):
    square = mul(K, eps, eps)
    cube = mul(K, square, eps)
    value = sub(K, cube, mul(K, K.element((spec.a2,)), square))
    value = sub(K, value, mul(K, K.element((spec.a1,)), eps))
    value = sub(K, value, K.element((spec.a0,)))
    return value.is_zero()


def cross_check(K, unit, spec, p):
    """ Screens ``spec`` at ``p`` and runs the torsion test on the same unit; a nonzero screen without a witness is a
    violation.

    Raises:
        DomainError: when ``spec`` does not annihilate the unit or ``p`` is ramified.
    """
    eps = unit.unit
    if K.degree != 3 or not _is_root(K, spec, eps):
        raise DomainError('%s is not satisfied by the unit of %s' % (spec, K.poly))
    if discriminant(spec.companion_poly) % p == 0:
        return ConsistencyReport(p, screen(spec, p), None)
    factors = split_prime(K, p)
    result = screen(spec, p, splitting_shape(factors))
    report = ConsistencyReport(p, result, condition2(K, p, unit, factors))
    if report.violation:
        logger.error('screen nonzero without a torsion witness: %s at %d', K.poly, p)
    return report
