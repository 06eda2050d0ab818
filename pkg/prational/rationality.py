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
"""Class field side of the criterion and the final verdict.

When p does not divide h(K) the Hilbert p-class field is K itself. When h(K) has a single factor p and p splits
completely, containment in the compositum of the Z_p-extensions is decided by the index of the p-adic logarithm
lattice of an auxiliary non-principal ideal, see :func:`log_index_split_cyclic`. Everything else is left
undetermined.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DomainError, PrecisionError, RecordError, UnsupportedError
from .numberfield import embed, ideal_contains, ideal_from_two_generators, ideal_power, norm, split_prime
from .ring import ModPoly, PadicApprox, check_prime, hensel_lift_root, padic_log
from .torsion import Applicability, Condition2Report, applicability_guard, condition2


__all__ = ['Branch', 'Status', 'Reason', 'Condition1Report', 'Verdict', 'condition1', 'log_index_split_cyclic',
           'verdict']


logger = logging.getLogger("prational")


class Branch(enum.Enum):
    TRIVIAL_CLASS_NUMBER = 'trivialClassNumber'
    SPLIT_CYCLIC_INDEX = 'splitCyclicIndex'
    UNDETERMINED = 'undetermined'


class Status(enum.Enum):
    P_RATIONAL = 'pRational'
    NOT_P_RATIONAL = 'notPRational'
    UNDETERMINED = 'undetermined'
    NOT_APPLICABLE = 'notApplicable'


class Reason(enum.Enum):
    CLASS_NUMBER_DIVISIBLE = 'classNumberDivisible'
    TORSION_NONTRIVIAL = 'torsionNontrivial'
    GUARD = 'guard'
    CONDITION1_UNDETERMINED = 'condition1Undetermined'
    CONDITION1_FAILS = 'condition1Fails'


@dataclass(frozen=True)
class Condition1Report:
    branch: Branch
    index: Optional[int] = None
    holds: Optional[bool] = None


@dataclass(frozen=True)
class Verdict:
    p: int
    status: Status
    reasons: Tuple[Reason, ...]
    guard: Applicability
    condition1: Optional[Condition1Report] = None
    condition2: Optional[Condition2Report] = None
    factors: tuple = ()

    @property
    def is_p_rational(self):
        return self.status is Status.P_RATIONAL


def _completely_split(K, factors):
    return len(factors) == K.degree and all(pf.e == 1 and pf.f == 1 for pf in factors)


def _check_log_index_input(K, p, Q, g, factors):
    if p == 2:
        raise UnsupportedError('log index needs an odd prime')
    if Q.norm % p == 0:
        raise DomainError('auxiliary ideal has norm %d divisible by %d' % (Q.norm, p))
    if not _completely_split(K, factors):
        raise DomainError('%d does not split completely in %s' % (p, K.poly))
    if not g.is_integral() or not ideal_contains(K, ideal_power(K, Q, p), g):
        raise DomainError('g does not lie in Q^%d' % p)
    if abs(norm(K, g)) != Q.norm ** p:
        raise DomainError('|N(g)| = %s but N(Q)^%d = %d, g does not generate Q^%d' % (abs(norm(K, g)), p,
                                                                                        Q.norm ** p, p))


def _log_index_at(K, p, g, unit, roots, k):
    modulus = p ** k
    lifted = [hensel_lift_root(K.poly, p, r, k).value for r in roots]
    g_images = [embed(K, g, r, modulus) for r in lifted]
    eps_images = [embed(K, unit.unit, r, modulus) for r in lifted]

    exponent = p - 1
    u = [padic_log(PadicApprox(pow(x, exponent, modulus), k, p)).divide_by_prime().divide_by_unit(exponent)
         for x in g_images]

    logs = [padic_log(PadicApprox(pow(x, p - 1, modulus), k, p)) for x in eps_images]
    lowest = min(x.valuation() for x in logs)
    if lowest >= k - 1:
        raise PrecisionError('unit logarithm not resolved at %d-adic precision %d' % (p, k))
    slope = [(x.value // p ** lowest) % p for x in logs]
    j = next(i for i, x in enumerate(slope) if x)
    t = u[j].value * pow(slope[j], -1, p) % p
    if all((x.value - t * y) % p == 0 for x, y in zip(u, slope)):
        return 1
    return p


def log_index_split_cyclic(K, p, Q, g, unit, precision=2, precision_cap=16, roots=None):
    """ Index of the logarithm lattice of the ideals prime to p over that of the principal ones, for a completely split
    ``p`` and a p-class group of order p generated by ``Q``.

    Every root of f mod p is lifted to the working precision, g and the unit are embedded at each lift, and
    u_i = log(g_i^(p-1)) / ((p-1) p) is compared mod p with the line spanned by the normalized logarithms of
    eps^(p-1). The index is 1 when u lies on that line and p otherwise.

    Args:
        K (NumberField): the field.
        p (int): odd prime splitting completely.
        Q (IdealHNF): auxiliary ideal of norm prime to p.
        g (FieldElement): generator of Q^p.
        unit (UnitData): fundamental unit.
        precision (int): starting p-adic precision, doubled while the unit logarithm is unresolved.
        precision_cap (int): largest precision tried.
        roots (Sequence[int], optional): ordering of the roots of f mod p, defaults to the order of the prime labels.

    Returns:
        int: 1 or p.

    Raises:
        DomainError: when g does not generate Q^p or p is not completely split.
        PrecisionError: when the cap is reached without resolving the unit logarithm.
    """
    check_prime(p)
    factors = split_prime(K, p)
    _check_log_index_input(K, p, Q, g, factors)
    default = [(-pf.generator.coefficients[0]) % p if pf.generator.coefficients else 0 for pf in factors]
    if roots is None:
        roots = default
    elif sorted(r % p for r in roots) != sorted(default):
        raise DomainError('%s are not the roots of %s mod %d' % (list(roots), K.poly, p))

    k = max(precision, 2)
    while True:
        try:
            return _log_index_at(K, p, g, unit, roots, k)
        except PrecisionError:
            if k >= precision_cap:
                raise
            k = min(2 * k, precision_cap)
            logger.debug('raising %d-adic precision to %d for %s', p, k, K.poly)


def condition1(K, p, record, unit, factors=None, precision=2, precision_cap=16):
    """ Decides whether the Hilbert p-class field of K lies in the compositum of its Z_p-extensions.

    Args:
        K (NumberField): the field.
        p (int): prime.
        record: anything with ``class_number``, ``label`` and ``aux_ideal`` attributes, usually a
            :class:`~prational.records.FieldRecord`.
        unit (UnitData): fundamental unit.
        factors (Sequence[PrimeFactor], optional): splitting of p.

    Returns:
        Condition1Report
    """
    h = record.class_number
    if h is None:
        raise RecordError('class number missing for %s' % record.label)
    if h % p:
        return Condition1Report(Branch.TRIVIAL_CLASS_NUMBER, holds=True)
    if factors is None:
        factors = split_prime(K, p)
    aux = record.aux_ideal
    if h % (p * p) == 0 or aux is None or aux.q == p or not _completely_split(K, factors):
        return Condition1Report(Branch.UNDETERMINED)
    Q = ideal_from_two_generators(K, aux.q, ModPoly(tuple(aux.generator_poly), aux.q))
    g = K.from_power(aux.power_generator)
    try:
        index = log_index_split_cyclic(K, p, Q, g, unit, precision, precision_cap)
    except PrecisionError as e:
        logger.warning('%s: %s', record.label, e)
        return Condition1Report(Branch.UNDETERMINED)
    return Condition1Report(Branch.SPLIT_CYCLIC_INDEX, index, index == p)


def verdict(K, p, record, unit, precision=2, precision_cap=16):
    """ Full decision for (K, p).

    Returns:
        Verdict: ``NOT_APPLICABLE`` when the guard rejects the pair, ``NOT_P_RATIONAL`` when the torsion test or the
        class field test fails, ``UNDETERMINED`` when the class field test cannot be decided and ``P_RATIONAL``
        otherwise.
    """
    check_prime(p)
    if record.class_number is None:
        raise RecordError('class number missing for %s' % record.label)
    factors = () if p == 2 or not K.eligible else split_prime(K, p)
    guard = applicability_guard(K, p, factors)
    if not guard:
        logger.info('%s at %d not applicable: %s', record.label, p, guard.reason)
        return Verdict(p, Status.NOT_APPLICABLE, (Reason.GUARD,), guard, factors=factors)

    c2 = condition2(K, p, unit, factors)
    c1 = condition1(K, p, record, unit, factors, precision, precision_cap)

    reasons = []
    if record.class_number % p == 0:
        reasons.append(Reason.CLASS_NUMBER_DIVISIBLE)
    if not c2.holds:
        reasons.append(Reason.TORSION_NONTRIVIAL)
    if c1.holds is None:
        reasons.append(Reason.CONDITION1_UNDETERMINED)
    elif not c1.holds:
        reasons.append(Reason.CONDITION1_FAILS)

    if not c2.holds or c1.holds is False:
        status = Status.NOT_P_RATIONAL
    elif c1.holds is None:
        status = Status.UNDETERMINED
    else:
        status = Status.P_RATIONAL
    return Verdict(p, status, tuple(reasons), guard, c1, c2, factors)
