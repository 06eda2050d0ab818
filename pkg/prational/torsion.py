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
"""Torsion test: looks for a prime P over p with eps^(p^f - 1) != 1 mod P^(e+1)."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DomainError, InvariantViolation
from .numberfield import (FieldElement, PrimeFactor, ideal_contains, mul, pow_mod, power, prime_ideal,
                          prime_ideal_power, split_prime, sub)


__all__ = ['Applicability', 'PrimeEntry', 'Condition2Report', 'applicability_guard', 'condition2',
           'condition2_split_crt_check', 'prop24_equivalence_check']


logger = logging.getLogger("prational")


@dataclass(frozen=True)
class Applicability:
    ok: bool
    reason: str = ''

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class PrimeEntry:
    """One prime over p: the exponent p^f - 1, the residue of eps^(p^f - 1) mod p^(e+1) and whether it is congruent to
    1 modulo P^(e+1)."""
    factor: PrimeFactor
    exponent: int
    residue: FieldElement
    modulus: int
    congruent: bool


@dataclass(frozen=True)
class Condition2Report:
    p: int
    entries: Tuple[PrimeEntry, ...]

    @property
    def witness(self):
        # type: () -> Optional[PrimeFactor]
        for entry in self.entries:
            if not entry.congruent:
                return entry.factor
        return None

    @property
    def holds(self):
        return self.witness is not None


def applicability_guard(K, p, factors):
    """ Rejects the (K, p) pairs the unit criterion does not cover.

    Args:
        K (NumberField): the field.
        p (int): the prime.
        factors (Sequence[PrimeFactor]): splitting of p, may be empty when ``p == 2`` or K is not eligible.

    Returns:
        Applicability: falsy with a reason when the criterion does not apply.
    """
    if not K.eligible:
        return Applicability(False, 'signature %s of degree %d' % (tuple(K.signature), K.degree))
    if p == 2:
        return Applicability(False, 'p = 2')
    if p == 3 and any(pf.e > 1 for pf in factors):
        return Applicability(False, '3 ramified')
    if K.degree == 4 and p == 5 and len(factors) == 1 and factors[0].e == 4:
        return Applicability(False, 'totally ramified')
    if K.degree == 3 and p < 5 and sorted(pf.e for pf in factors) == [1, 2]:
        return Applicability(False, 'ramified split needs p >= 5')
    return Applicability(True)


def _twists(K, unit):
    if unit.torsion_generator is None or unit.torsion_order <= 2:
        return [unit.unit]
    return [mul(K, unit.unit, power(K, unit.torsion_generator, j)) for j in range(unit.torsion_order)]


def _congruent_to_one(K, ideal, residue):
    return ideal_contains(K, ideal, sub(K, residue, K.one()))


def condition2(K, p, unit, factors=None):
    """ Evaluates the unit congruence at every prime over ``p``.

    For P with ramification index e and residue degree f the residue r = eps^(p^f - 1) is computed mod p^(e+1) and
    r - 1 is tested against P^(e+1). With a torsion generator of order w > 2 an entry is congruent only when every
    eps * zeta^j is.

    Args:
        K (NumberField): the field.
        p (int): odd prime.
        unit (UnitData): validated unit data.
        factors (Sequence[PrimeFactor], optional): output of :func:`split_prime`, recomputed when omitted.

    Returns:
        Condition2Report

    Raises:
        InvariantViolation: when r - 1 is not even in P (the residue field has p^f elements).
    """
    if factors is None:
        factors = split_prime(K, p)
    twists = _twists(K, unit)
    entries = []
    for pf in factors:
        exponent = p ** pf.f - 1
        modulus = p ** (pf.e + 1)
        target = prime_ideal_power(K, pf, pf.e + 1)
        residues = [pow_mod(K, twist, exponent, modulus) for twist in twists]
        for residue in residues:
            if not _congruent_to_one(K, prime_ideal(K, pf), residue):
                raise InvariantViolation('eps^%d - 1 is not in %s for %s' % (exponent, pf, K.poly))
        congruent = all(_congruent_to_one(K, target, residue) for residue in residues)
        entries.append(PrimeEntry(pf, exponent, residues[0], modulus, congruent))
    report = Condition2Report(p, tuple(entries))
    logger.debug('condition 2 for %s at %d: %s', K.poly, p, 'holds' if report.holds else 'fails')
    return report


def condition2_split_crt_check(K, p, unit):
    """Single global congruence eps^(p-1) != 1 mod p^2 for a cubic field where ``p`` splits completely."""
    factors = split_prime(K, p)
    if K.degree != 3 or len(factors) != 3 or any(pf.e != 1 or pf.f != 1 for pf in factors):
        raise DomainError('%d does not split completely in the cubic field %s' % (p, K.poly))
    modulus = p * p
    difference = sub(K, pow_mod(K, unit.unit, p - 1, modulus), K.one())
    return any(c % modulus for c in difference.coords)


def prop24_equivalence_check(K, p, unit, factor):
    """Whether eps^(p-1) = 1 and eps^(p^2-1) = 1 modulo P^2 agree for a degree one unramified P."""
    if factor.p != p or factor.e != 1 or factor.f != 1:
        raise DomainError('%s is not an unramified degree one prime over %d' % (factor, p))
    target = prime_ideal_power(K, factor, 2)
    modulus = p * p
    low = _congruent_to_one(K, target, pow_mod(K, unit.unit, p - 1, modulus))
    high = _congruent_to_one(K, target, pow_mod(K, unit.unit, p * p - 1, modulus))
    return low == high
