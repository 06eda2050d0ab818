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
"""Built-in families.

Pure cubic fields Q(a), a^3 = p^3 - 1, tested at the prime p itself with the unit p^2 + p a + a^2 = 1/(p - a); and
the biquadratic fields L = Q(sqrt(p^2 - 1), sqrt(-1)) for which p not dividing h(Q(sqrt(1 - p^2))) is enough for
Greenberg's generalized conjecture at p.
"""

import enum
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

import numpy as np
from sympy import factorint, primerange
from sympy.functions.combinatorial.numbers import kronecker_symbol

from .errors import DomainError, InvariantViolation
from .numberfield import NumberField, PrimeFactor, UnitData, FieldElement, make_field, make_unit, mul, norm, \
    pow_mod, split_prime
from .recurrence import Shape, splitting_shape
from .ring import IntPoly, check_prime
from .timer import timer
from .torsion import condition2
from .workers import map_ordered


__all__ = ['PureCubicInstance', 'PureCubicScanRow', 'GgcVerdict', 'GgcCandidate', 'KurodaResult',
           'pure_cubic_instance', 'pure_cubic_row', 'pure_cubic_scan', 'squarefree_part', 'field_discriminant',
           'roots_of_unity_count', 'class_number_forms', 'imag_quadratic_class_number', 'class_number_dirichlet',
           'lemma_b_bound', 'kuroda_check', 'lemma_a_scan', 'ggc_evaluate', 'ggc_scan']


logger = logging.getLogger("prational")


@dataclass(frozen=True)
class PureCubicInstance:
    p: int
    field: NumberField
    unit: UnitData
    factors: Tuple[PrimeFactor, ...]
    shape: Shape


@dataclass(frozen=True)
class PureCubicScanRow:
    p: int
    shape: Shape
    condition2_holds: bool
    witness: Optional[PrimeFactor]
    residue: FieldElement
    closed_form_ok: bool
    class_flag: str
    class_number: Optional[int] = None


def pure_cubic_instance(p):
    """ Field x^3 + 1 - p^3 with the unit p^2 + p a + a^2.

    Raises:
        InvariantViolation: when the unit is not the inverse of p - a or the splitting of p contradicts the
            p mod 3 law (split completely iff p = 1 mod 3, otherwise one prime of degree 1 and one of degree 2).
    """
    check_prime(p)
    if p < 5:
        raise DomainError('pure cubic family starts at p = 5, got %d' % p)
    K = make_field(IntPoly((1 - p ** 3, 0, 0, 1)))
    eps = K.element((p * p, p, 1))
    if mul(K, eps, K.element((p, -1))) != K.one():
        raise InvariantViolation('(p - a)(p^2 + p a + a^2) != 1 for p = %d' % p)
    factors = split_prime(K, p)
    shape = splitting_shape(factors)
    expected = Shape.SPLIT if p % 3 == 1 else Shape.MIXED
    if shape is not expected:
        raise InvariantViolation('%d splits as %s, expected %s' % (p, shape.value, expected.value))
    return PureCubicInstance(p, K, make_unit(K, eps), factors, shape)


def _closed_form_residue(K, p):
    # eps^(p-1) = a^(2p-2) (1 + p a^2) mod p^2, from a^3 = -1 mod p^2
    modulus = p * p
    return pow_mod(K, mul(K, pow_mod(K, K.alpha(), 2 * p - 2, modulus), K.element((1, 0, p))), 1, modulus)


def pure_cubic_row(p, class_numbers=None):
    instance = pure_cubic_instance(p)
    K = instance.field
    report = condition2(K, p, instance.unit, instance.factors)
    residue = pow_mod(K, instance.unit.unit, p - 1, p * p)
    h = (class_numbers or {}).get(p)
    if h is None:
        flag = 'h-unknown'
    elif h % p == 0:
        flag = 'p|h'
    else:
        flag = 'p-coprime'
    return PureCubicScanRow(p, instance.shape, report.holds, report.witness, residue,
                            residue == _closed_form_residue(K, p), flag, h)


@timer
def pure_cubic_scan(pmin, pmax, class_numbers=None, worker_count=1, report_progress=False):
    """ Torsion test for Q(cbrt(p^3 - 1)) at p for every prime in [pmin, pmax].

    Args:
        pmin (int): first prime, at least 5.
        pmax (int): last prime.
        class_numbers (Dict[int, int], optional): ingested h(Q(cbrt(p^3 - 1))) keyed by p.

    Returns:
        List[PureCubicScanRow]
    """
    if pmin < 5 or pmax < pmin:
        raise DomainError('need 5 <= pmin <= pmax, got %d, %d' % (pmin, pmax))
    return map_ordered(lambda p: pure_cubic_row(p, class_numbers), [int(p) for p in primerange(pmin, pmax + 1)],
                       worker_count, report_progress)


def squarefree_part(n):
    if n == 0:
        raise DomainError('0 has no squarefree part')
    result = -1 if n < 0 else 1
    for q, e in factorint(abs(n)).items():
        if e % 2:
            result *= q
    return result


def field_discriminant(radicand):
    """Discriminant of Q(sqrt(radicand)) for a squarefree radicand."""
    return radicand if radicand % 4 == 1 else 4 * radicand


def roots_of_unity_count(D):
    return {-4: 4, -3: 6}.get(D, 2)


def class_number_forms(D):
    """ Number of reduced primitive forms (a, b, c) of discriminant ``D`` < 0.

    Reduced means |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise DomainError('%d is not a negative discriminant' % D)
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b - D
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                h += 1
        a += 1
    return h


def imag_quadratic_class_number(radicand):
    """Class number of Q(sqrt(radicand)), radicand negative and squarefree."""
    if radicand >= 0:
        raise DomainError('radicand must be negative, got %d' % radicand)
    if squarefree_part(radicand) != radicand:
        raise InvariantViolation('radicand %d is not squarefree' % radicand)
    return class_number_forms(field_discriminant(radicand))


def class_number_dirichlet(D):
    """Class number of the imaginary quadratic field of fundamental discriminant ``D`` from the character sum
    h = -w / (2 |D|) sum k chi_D(k)."""
    if D >= 0:
        raise DomainError('%d is not negative' % D)
    total = sum(int(kronecker_symbol(D, k)) * k for k in range(1, -D))
    h = Fraction(-roots_of_unity_count(D) * total, 2 * -D)
    if h.denominator != 1 or h <= 0:
        raise DomainError('%d is not a fundamental discriminant' % D)
    return int(h)


def lemma_b_bound(dK, omega):
    """Upper bound omega sqrt(d) / (4 pi) (log d + 2 + gamma - log pi) for the class number of an imaginary quadratic
    field of discriminant -d."""
    if dK < 3:
        raise DomainError('discriminant %d too small' % dK)
    return float(omega * np.sqrt(dK) / (4 * np.pi) * (np.log(dK) + 2 + np.euler_gamma - np.log(np.pi)))


@dataclass(frozen=True)
class KurodaResult:
    q: Fraction
    valid: bool


def kuroda_check(h1, h2, h3, hL):
    """Unit index q = 2 h(L) / (h1 h2 h3) of a biquadratic field; valid when q is 1 or 2."""
    if min(h1, h2, h3, hL) < 1:
        raise DomainError('class numbers must be positive')
    q = Fraction(2 * hL, h1 * h2 * h3)
    result = KurodaResult(q, q in (1, 2))
    if not result.valid:
        logger.warning('unit index %s outside {1, 2} for h = (%d, %d, %d), h(L) = %d', q, h1, h2, h3, hL)
    return result


class GgcVerdict(enum.Enum):
    GGC_HOLDS = 'GgcHolds'
    UNKNOWN = 'Unknown'


@dataclass(frozen=True)
class GgcCandidate:
    p: int
    n: int
    m: int
    threshold: float
    residue_class: int = 1
    radicand: Optional[int] = None
    discriminant: Optional[int] = None
    omega: Optional[int] = None
    hK2: Optional[int] = None
    bound: Optional[float] = None
    real_unit_norm: Optional[Fraction] = None
    verdict: Optional[GgcVerdict] = None
    kuroda: Optional[KurodaResult] = None


def _square_root_part(n):
    result = 1
    for q, e in factorint(n).items():
        result *= q ** (e // 2)
    return result


def lemma_a_scan(xmax, T, xmax_cap=10 ** 7):
    """ Primes p = 1 mod 4 up to ``xmax`` whose largest n, m with n^2 | p - 1 and m^2 | p + 1 both exceed
    (log p)^T.

    Returns:
        List[GgcCandidate]: candidates without class number data.
    """
    if xmax < 13:
        raise DomainError('xmax must be at least 13, got %d' % xmax)
    if xmax > xmax_cap:
        raise DomainError('xmax %d exceeds the factorization cap %d' % (xmax, xmax_cap))
    if T < 0:
        raise DomainError('T must be nonnegative, got %s' % T)
    candidates = []
    for p in primerange(5, xmax + 1):
        if p % 4 != 1:
            continue
        threshold = float(np.log(p)) ** T
        n, m = _square_root_part(p - 1), _square_root_part(p + 1)
        if n > threshold and m > threshold:
            candidates.append(GgcCandidate(int(p), n, m, threshold, int(p) % 4))
    return candidates


def ggc_evaluate(candidate, ingested=None):
    """ Fills in the class number data of a Lemma A candidate.

    Args:
        candidate (GgcCandidate): output of :func:`lemma_a_scan`.
        ingested (Dict[int, Tuple[int, int]], optional): (h(Q(sqrt(p^2 - 1))), h(L)) keyed by p, used for the
            unit index check.

    Raises:
        InvariantViolation: when h(Q(sqrt(1 - p^2))) exceeds the analytic bound or p + sqrt(p^2 - 1) is not a unit.
    """
    p = candidate.p
    radicand = squarefree_part(1 - p * p)
    D = field_discriminant(radicand)
    h = class_number_forms(D)
    omega = roots_of_unity_count(D)
    bound = lemma_b_bound(-D, omega)
    if h > bound:
        raise InvariantViolation('h = %d exceeds the bound %.3f for D = %d' % (h, bound, D))
    K1 = make_field(IntPoly((1 - p * p, 0, 1)))
    unit_norm = norm(K1, K1.element((p, 1)))
    if unit_norm != 1:
        raise InvariantViolation('p + sqrt(p^2 - 1) has norm %s for p = %d' % (unit_norm, p))
    kuroda = None
    if ingested and p in ingested:
        h1, hL = ingested[p]
        kuroda = kuroda_check(h1, h, 1, hL)
    verdict = GgcVerdict.GGC_HOLDS if h % p else GgcVerdict.UNKNOWN
    return replace(candidate, radicand=radicand, discriminant=D, omega=omega, hK2=h, bound=bound,
                   real_unit_norm=unit_norm, verdict=verdict, kuroda=kuroda)


@timer
def ggc_scan(xmax, T, ingested=None, xmax_cap=10 ** 7, worker_count=1):
    return map_ordered(lambda c: ggc_evaluate(c, ingested), lemma_a_scan(xmax, T, xmax_cap), worker_count)
