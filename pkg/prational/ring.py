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
"""Exact integer and modular polynomial arithmetic.

Polynomials are stored constant term first. sympy's dense representation is the other way around, conversion
happens at the boundary (:meth:`IntPoly.to_dense`, :meth:`ModPoly.to_gf`).
"""

from dataclasses import dataclass
from itertools import count
from typing import Tuple

from sympy import Poly, Symbol, isprime
from sympy.polys.densebasic import dup_degree
from sympy.polys.densetools import dup_diff
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_discriminant, dup_gcd
from sympy.polys.galoistools import gf_ddf_zassenhaus, gf_degree, gf_edf_zassenhaus, gf_from_int_poly, gf_gcd, \
    gf_pow_mod, gf_quo, gf_sqf_list, gf_sub_ground

from .errors import DomainError, NotSimpleRootError, UnsupportedError


__all__ = ['IntPoly', 'ModPoly', 'PadicApprox', 'discriminant', 'factor_mod_p', 'count_real_roots',
           'hensel_lift_root', 'padic_log', 'format_polynomial', 'check_prime']


_x = Symbol('x')
_SUPERSCRIPTS = str.maketrans('0123456789', '⁰¹²³⁴⁵⁶⁷⁸⁹')


def format_polynomial(coefficients, symbol='x', unicode=False, ascending=False):
    """ Renders integer coefficients (constant term first) as text.

    Args:
        coefficients (Sequence[int]): Coefficients, constant term first.
        symbol (str): Name of the variable.
        unicode (bool): Use superscript digits for exponents instead of ``^``.
        ascending (bool): Print the constant term first.

    Returns:
        str: e.g. ``x^3 - 4x + 27`` or ``1 + 5α + 15α³``.
    """
    degrees = range(len(coefficients)) if ascending else range(len(coefficients) - 1, -1, -1)
    terms = []
    for degree in degrees:
        c = coefficients[degree]
        if c == 0:
            continue
        magnitude = abs(c)
        if degree == 0:
            body = str(magnitude)
        else:
            if degree == 1:
                power = symbol
            elif unicode:
                power = symbol + str(degree).translate(_SUPERSCRIPTS)
            else:
                power = '%s^%d' % (symbol, degree)
            body = power if magnitude == 1 else '%d%s' % (magnitude, power)
        terms.append(('-' if c < 0 else '+', body))
    if not terms:
        return '0'
    sign, body = terms[0]
    text = '-' + body if sign == '-' else body
    for sign, body in terms[1:]:
        text += ' %s %s' % (sign, body)
    return text


def check_prime(p):
    if not isinstance(p, int) or not isprime(p):
        raise DomainError('%r is not a prime' % (p,))


@dataclass(frozen=True)
class IntPoly:
    """Polynomial over the integers. ``coefficients[i]`` is the coefficient of x^i; trailing zeros are stripped."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_dense(cls, dense):
        return cls(tuple(int(c) for c in reversed(dense)))

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self):
        return not self.coefficients

    def is_monic(self):
        return self.leading_coefficient == 1

    def to_dense(self):
        return [ZZ(c) for c in reversed(self.coefficients)]

    def derivative(self):
        return IntPoly(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def reduce(self, modulus):
        return ModPoly(self.coefficients, modulus)

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __str__(self):
        return format_polynomial(self.coefficients)


@dataclass(frozen=True)
class ModPoly:
    """Polynomial with coefficients in [0, modulus), constant term first."""
    coefficients: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError('modulus must be positive, got %d' % self.modulus)
        coefficients = [int(c) % self.modulus for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_gf(cls, f, p):
        return cls(tuple(int(c) for c in reversed(f)), p)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def to_gf(self):
        return [ZZ(c) for c in reversed(self.coefficients)]

    def lift(self):
        return IntPoly(self.coefficients)

    def symmetric(self):
        """Coefficients mapped to the balanced range (-m/2, m/2]."""
        half = self.modulus // 2
        return tuple(c - self.modulus if c > half else c for c in self.coefficients)

    def sort_key(self):
        # negated coefficients put x - r in increasing order of r
        return self.degree, tuple((-c) % self.modulus for c in self.coefficients)

    def __str__(self):
        return format_polynomial(self.symmetric())


@dataclass(frozen=True)
class PadicApprox:
    """An element of Z_p known modulo p^precision."""
    value: int
    precision: int
    prime: int

    def __post_init__(self):
        if self.precision < 1:
            raise DomainError('precision must be at least 1, got %d' % self.precision)
        object.__setattr__(self, 'value', int(self.value) % self.modulus)

    @property
    def modulus(self):
        return self.prime ** self.precision

    def is_zero(self):
        return self.value == 0

    def valuation(self):
        """p-adic valuation. A zero approximation reports its precision (the valuation is at least that)."""
        if self.value == 0:
            return self.precision
        v, x = 0, self.value
        while x % self.prime == 0:
            x //= self.prime
            v += 1
        return v

    def _coerce(self, other):
        if isinstance(other, PadicApprox):
            if other.prime != self.prime:
                raise DomainError('mixing %d-adic and %d-adic numbers' % (self.prime, other.prime))
            return other.value, min(self.precision, other.precision)
        return int(other), self.precision

    def __add__(self, other):
        value, precision = self._coerce(other)
        return PadicApprox(self.value + value, precision, self.prime)

    def __sub__(self, other):
        value, precision = self._coerce(other)
        return PadicApprox(self.value - value, precision, self.prime)

    def __mul__(self, other):
        value, precision = self._coerce(other)
        return PadicApprox(self.value * value, precision, self.prime)

    __radd__ = __add__
    __rmul__ = __mul__

    def divide_by_prime(self, times=1):
        """Exact division by p^times; the result is known to ``times`` fewer digits."""
        if self.valuation() < times:
            raise DomainError('%d-adic value %d is not divisible by p^%d' % (self.prime, self.value, times))
        if self.precision - times < 1:
            raise DomainError('no digits left after dividing by p^%d' % times)
        return PadicApprox(self.value // self.prime ** times, self.precision - times, self.prime)

    def divide_by_unit(self, n):
        if n % self.prime == 0:
            raise DomainError('%d is not a %d-adic unit' % (n, self.prime))
        return PadicApprox(self.value * pow(n, -1, self.modulus), self.precision, self.prime)


def discriminant(f):
    """ Discriminant of ``f``, (-1)^(n(n-1)/2) Res(f, f') / lc(f).

    Args:
        f (IntPoly): polynomial of degree at least 2.

    Returns:
        int: exact discriminant.

    Example:

        ::

            >>> discriminant(IntPoly((27, -4, 0, 1)))
            -19427
    """
    if f.degree < 2:
        raise DomainError('discriminant needs degree >= 2, got %d' % f.degree)
    return int(dup_discriminant(f.to_dense(), ZZ))


def _digits(i, p):
    digits = []
    while i:
        i, r = divmod(i, p)
        digits.append(ZZ(r))
    return list(reversed(digits))


def _equal_degree_split(f, n, p):
    if gf_degree(f) <= n:
        return [f]
    if p == 2:
        return gf_edf_zassenhaus(f, n, p, ZZ)
    exponent = (p ** n - 1) // 2
    # x, x + 1, ..., x + p - 1, then every residue of higher degree by base-p digits
    for i in count(p):
        candidate = _digits(i, p)
        if len(candidate) > gf_degree(f):
            break
        h = gf_pow_mod(candidate, exponent, f, p, ZZ)
        g = gf_gcd(f, gf_sub_ground(h, ZZ(1), p, ZZ), p, ZZ)
        if 0 < gf_degree(g) < gf_degree(f):
            return _equal_degree_split(g, n, p) + _equal_degree_split(gf_quo(f, g, p, ZZ), n, p)
    raise DomainError('no splitting residue for %s over GF(%d)' % (f, p))


def factor_mod_p(f, p):
    """ Factors ``f`` over the field with ``p`` elements.

    Square-free, distinct-degree and equal-degree stages; the last one is deterministic.

    Args:
        f (IntPoly): polynomial not divisible by ``p``.
        p (int): prime.

    Returns:
        list of (ModPoly, int): monic irreducible factors and multiplicities, ordered by degree and then by
        negated coefficients, so linear factors x - r come by increasing r.
    """
    check_prime(p)
    reduced = gf_from_int_poly(f.to_dense(), p)
    if not reduced:
        raise DomainError('%s vanishes mod %d' % (f, p))
    _, square_free = gf_sqf_list(reduced, p, ZZ)
    factors = []
    for g, multiplicity in square_free:
        for h, n in gf_ddf_zassenhaus(g, p, ZZ):
            for q in _equal_degree_split(h, n, p):
                factors.append((ModPoly.from_gf(q, p), multiplicity))
    factors.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return factors


def _sign_changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f):
    """Number of distinct real roots of a square-free ``f``, from the sign changes of its Sturm chain at -inf, +inf."""
    if f.is_zero():
        raise DomainError('zero polynomial')
    if f.degree < 1:
        return 0
    dense = f.to_dense()
    if dup_degree(dup_gcd(dense, dup_diff(dense, 1, ZZ), ZZ)) > 0:
        raise DomainError('%s is not square-free' % f)
    chain = Poly(list(reversed(f.coefficients)), _x).sturm()
    at_plus = [1 if q.LC() > 0 else -1 for q in chain]
    at_minus = [s * (-1) ** q.degree() for s, q in zip(at_plus, chain)]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def hensel_lift_root(f, p, r0, k):
    """ Lifts a simple root of ``f`` mod ``p`` to a root mod p^k by Newton iteration, doubling precision each step.

    Args:
        f (IntPoly): polynomial.
        p (int): prime.
        r0 (int): root of f mod p.
        k (int): target precision.

    Returns:
        PadicApprox: r with r = r0 mod p and f(r) = 0 mod p^k.
    """
    check_prime(p)
    if k < 1:
        raise DomainError('precision must be at least 1, got %d' % k)
    r = r0 % p
    if f(r) % p:
        raise DomainError('%d is not a root of %s mod %d' % (r0, f, p))
    df = f.derivative()
    if df(r) % p == 0:
        raise NotSimpleRootError('%d is a multiple root of %s mod %d' % (r0, f, p))
    precision = 1
    while precision < k:
        precision = min(2 * precision, k)
        modulus = p ** precision
        r = (r - f(r) * pow(df(r), -1, modulus)) % modulus
    return PadicApprox(r, k, p)


def padic_log(u):
    """ Truncated p-adic logarithm of a principal unit.

    Terms m <= k p/(p-1) + p of the series sum (-1)^(m+1) (u-1)^m / m are kept; every dropped term has valuation
    at least k. Powers are carried mod p^(k+a) so that the division by p^a | m stays exact.

    Args:
        u (PadicApprox): u = 1 mod p, odd p, precision at least 2.

    Returns:
        PadicApprox: log(u) at the precision of ``u``.
    """
    p, k = u.prime, u.precision
    if p == 2:
        raise UnsupportedError('2-adic logarithms are not supported')
    if k < 2:
        raise DomainError('padic_log needs precision >= 2, got %d' % k)
    x = (u.value - 1) % u.modulus
    if x % p:
        raise DomainError('%d is not a principal unit mod %d' % (u.value, p))
    if x == 0:
        return PadicApprox(0, k, p)
    terms = k * p // (p - 1) + p
    largest = 0
    while p ** (largest + 1) <= terms:
        largest += 1
    work = p ** (k + largest)
    modulus = u.modulus
    total = 0
    power = 1
    for m in range(1, terms + 1):
        power = power * x % work
        a, unit = 0, m
        while unit % p == 0:
            unit //= p
            a += 1
        term = (power // p ** a) * pow(unit, -1, modulus)
        total += term if m % 2 else -term
    return PadicApprox(total, k, p)
