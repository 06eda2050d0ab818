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
"""Number fields of degree at most 4: elements over an integral basis, norms, Dedekind's criterion, prime splitting
and ideals in Hermite normal form.

An element is a coordinate vector over the integral basis of its field, with a positive denominator. When no basis
is ingested the power basis 1, a, ..., a^(n-1) is used and coordinates are plain polynomial coefficients.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Optional, Tuple

from sympy import Matrix, Poly, Symbol, primefactors
from sympy.polys.densearith import dup_mul, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_degree, gf_from_int_poly, gf_gcd, gf_mul, gf_pow
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from .errors import DomainError, InvariantViolation, SplittingUndetermined, UnsupportedError
from .ring import IntPoly, ModPoly, check_prime, count_real_roots, discriminant, factor_mod_p, format_polynomial


__all__ = ['FieldElement', 'NumberField', 'PrimeFactor', 'IdealHNF', 'UnitData', 'make_field', 'make_unit', 'add',
           'sub', 'neg', 'mul', 'power', 'inverse', 'norm', 'characteristic_polynomial', 'embed',
           'dedekind_criterion', 'dedekind_p_maximal', 'split_prime', 'ideal_from_two_generators', 'ideal_multiply',
           'ideal_power', 'ideal_contains', 'principal_ideal', 'unit_ideal', 'prime_ideal', 'prime_ideal_power',
           'pow_mod', 'format_element']


logger = logging.getLogger("prational")

_x = Symbol('x')

# orders of the roots of unity that can live in a field of degree <= 4
_ROOT_OF_UNITY_ORDERS = (1, 2, 3, 4, 5, 6, 8, 10, 12)


def _lcm(a, b):
    return a * b // gcd(a, b)


def _fraction(x):
    """sympy Rational or anything Fraction() accepts -> Fraction"""
    if hasattr(x, 'q') and hasattr(x, 'p'):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def _dense(coords):
    """low degree first -> sympy dense list, high degree first"""
    return dup_strip([ZZ(int(c)) for c in reversed(coords)])


def _sparse(dense):
    return [int(c) for c in reversed(dense)]


@dataclass(frozen=True)
class FieldElement:
    """``coords`` over the integral basis divided by ``denominator``; stored in lowest terms."""
    coords: Tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        denominator = int(self.denominator)
        if denominator == 0:
            raise DomainError('zero denominator')
        if denominator < 0:
            coords = tuple(-c for c in coords)
            denominator = -denominator
        g = reduce(gcd, coords, denominator)
        if g > 1:
            coords = tuple(c // g for c in coords)
            denominator //= g
        object.__setattr__(self, 'coords', coords)
        object.__setattr__(self, 'denominator', denominator)

    def is_integral(self):
        return self.denominator == 1

    def is_zero(self):
        return not any(self.coords)


@dataclass(frozen=True)
class NumberField:
    """Q(a) with a a root of the monic ``poly``.

    ``basis`` holds the integral basis as integer numerators over ``basis_denominator``, one row per basis element,
    written in powers of a. ``None`` stands for the power basis.
    """
    poly: IntPoly
    signature: Tuple[int, int]
    poly_disc: int
    basis: Optional[Tuple[Tuple[int, ...], ...]] = None
    basis_denominator: int = 1
    index: int = 1
    _basis_inverse: Optional[Tuple[Tuple[Fraction, ...], ...]] = field(default=None, compare=False, repr=False)

    @property
    def degree(self):
        return self.poly.degree

    @property
    def eligible(self):
        """True for complex cubic and totally imaginary quartic signatures."""
        return (self.degree,) + tuple(self.signature) in ((3, 1, 1), (4, 0, 2))

    @property
    def is_power_basis(self):
        return self.basis is None

    def element(self, coords, denominator=1):
        coords = tuple(coords)
        if len(coords) > self.degree:
            raise DomainError('%d coordinates for a field of degree %d' % (len(coords), self.degree))
        return FieldElement(coords + (0,) * (self.degree - len(coords)), denominator)

    def basis_element(self, i):
        return self.element(tuple(1 if j == i else 0 for j in range(self.degree)))

    def one(self):
        return self.basis_element(0)

    def alpha(self):
        return self.from_power((0, 1))

    def reduce_power(self, coords):
        """Reduces polynomial coefficients in a modulo the defining polynomial."""
        n = self.degree
        coords = _sparse(dup_rem(_dense(coords), self.poly.to_dense(), ZZ))
        return coords + [0] * (n - len(coords))

    def to_power(self, a):
        """Returns (numerators, denominator) of ``a`` in powers of a."""
        if self.basis is None:
            return list(a.coords), a.denominator
        n = self.degree
        coords = [sum(a.coords[i] * self.basis[i][j] for i in range(n)) for j in range(n)]
        return coords, a.denominator * self.basis_denominator

    def from_power(self, coords, denominator=1):
        coords = self.reduce_power(coords)
        if self.basis is None:
            return FieldElement(tuple(coords), denominator)
        n = self.degree
        inverse = self._basis_inverse
        rational = [sum(coords[j] * inverse[j][i] for j in range(n)) for i in range(n)]
        common = reduce(_lcm, (r.denominator for r in rational), 1)
        return FieldElement(tuple(int(r * common) for r in rational), denominator * common)

    def __str__(self):
        return 'Q[x]/(%s)' % self.poly


@dataclass(frozen=True)
class PrimeFactor:
    """Prime ideal (p, g(a)) over p with ramification index ``e`` and residue degree ``f``."""
    p: int
    generator: ModPoly
    e: int
    f: int
    label: int

    @property
    def name(self):
        return 'P%d' % self.label

    def __str__(self):
        return '(%d, %s)' % (self.p, self.generator)


@dataclass(frozen=True)
class IdealHNF:
    """Upper-triangular basis of an ideal; columns are ideal generators over the integral basis."""
    matrix: Tuple[Tuple[int, ...], ...]

    @property
    def size(self):
        return len(self.matrix)

    @property
    def norm(self):
        result = 1
        for i in range(self.size):
            result *= self.matrix[i][i]
        return result

    def column(self, j):
        return tuple(row[j] for row in self.matrix)

    def columns(self):
        return [self.column(j) for j in range(self.size)]


@dataclass(frozen=True)
class UnitData:
    """Fundamental unit together with the order of the torsion subgroup and, optionally, a generator of it."""
    unit: FieldElement
    torsion_order: int = 2
    torsion_generator: Optional[FieldElement] = None


def _check_basis(f, basis, poly_disc):
    n = f.degree
    rows = [[Fraction(x) for x in row] for row in basis]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DomainError('integral basis must be %dx%d' % (n, n))
    if rows[0] != [Fraction(1)] + [Fraction(0)] * (n - 1):
        raise DomainError('first basis element must be 1')
    denominator = reduce(_lcm, (x.denominator for row in rows for x in row), 1)
    numerators = tuple(tuple(int(x * denominator) for x in row) for row in rows)
    numerator_matrix = Matrix(numerators)
    det = int(numerator_matrix.det())
    if det == 0:
        raise DomainError('integral basis is singular')
    index = Fraction(denominator ** n, abs(det))
    if index.denominator != 1 or poly_disc % (index.numerator ** 2):
        raise DomainError('basis index %s is inconsistent with d(f) = %d' % (index, poly_disc))
    if denominator == 1 and numerators == tuple(tuple(int(i == j) for j in range(n)) for i in range(n)):
        return None, 1, 1, None
    inverse = numerator_matrix.inv() * denominator
    inverse = tuple(tuple(_fraction(inverse[i, j]) for j in range(n)) for i in range(n))
    return numerators, denominator, index.numerator, inverse


def make_field(f, basis=None):
    """ Builds the number field defined by a monic irreducible ``f``.

    Args:
        f (IntPoly | Sequence[int]): monic polynomial of degree 2, 3 or 4, constant term first.
        basis (Sequence[Sequence], optional): integral basis in powers of a, rows of rationals (``Fraction``, ints or
            strings like ``"1/2"``). Defaults to the power basis.

    Returns:
        NumberField: the field. Degrees and signatures outside the complex cubic / totally imaginary quartic shapes
        are accepted but have ``eligible`` False.
    """
    if not isinstance(f, IntPoly):
        f = IntPoly(tuple(f))
    if not 2 <= f.degree <= 4:
        raise DomainError('defining polynomial must have degree 2, 3 or 4, got %d' % f.degree)
    if not f.is_monic():
        raise DomainError('%s is not monic' % f)
    if not Poly(list(reversed(f.coefficients)), _x).is_irreducible:
        raise DomainError('%s is reducible over Q' % f)
    poly_disc = discriminant(f)
    r1 = count_real_roots(f)
    signature = (r1, (f.degree - r1) // 2)
    numerators, denominator, index, inverse = (None, 1, 1, None) if basis is None else \
        _check_basis(f, basis, poly_disc)
    K = NumberField(f, signature, poly_disc, numerators, denominator, index, inverse)
    if not K.eligible:
        logger.debug('%s has signature %s, kept as data only', f, signature)
    return K


def add(K, a, b):
    return FieldElement(tuple(x * b.denominator + y * a.denominator for x, y in zip(a.coords, b.coords)),
                        a.denominator * b.denominator)


def sub(K, a, b):
    return FieldElement(tuple(x * b.denominator - y * a.denominator for x, y in zip(a.coords, b.coords)),
                        a.denominator * b.denominator)


def neg(K, a):
    return FieldElement(tuple(-x for x in a.coords), a.denominator)


def mul(K, a, b):
    """Exact product: both factors go to powers of a, get multiplied, reduced by the defining relation and mapped back
    through the basis."""
    pa, da = K.to_power(a)
    pb, db = K.to_power(b)
    return K.from_power(_sparse(dup_mul(_dense(pa), _dense(pb), ZZ)), da * db)


def power(K, a, exponent):
    """Exact power; negative exponents go through :func:`inverse`."""
    if exponent < 0:
        return power(K, inverse(K, a), -exponent)
    result = K.one()
    base = a
    while exponent:
        if exponent & 1:
            result = mul(K, result, base)
        exponent >>= 1
        if exponent:
            base = mul(K, base, base)
    return result


def _multiplication_matrix(K, a):
    numerators, denominator = K.to_power(a)
    n = K.degree
    columns = [K.reduce_power([0] * j + list(numerators)) for j in range(n)]
    return Matrix(n, n, lambda i, j: columns[j][i]), denominator


def norm(K, a):
    """Determinant of multiplication by ``a``, as a Fraction."""
    matrix, denominator = _multiplication_matrix(K, a)
    return Fraction(int(matrix.det()), denominator ** K.degree)


def characteristic_polynomial(K, a):
    """Characteristic polynomial of multiplication by ``a``; Fractions, constant term first, monic."""
    matrix, denominator = _multiplication_matrix(K, a)
    n = K.degree
    coefficients = [int(c) for c in matrix.charpoly().all_coeffs()]
    return [Fraction(coefficients[n - k], denominator ** (n - k)) for k in range(n + 1)]


def inverse(K, a):
    matrix, denominator = _multiplication_matrix(K, a)
    if matrix.det() == 0:
        raise DomainError('zero has no inverse')
    solution = matrix.LUsolve(Matrix([denominator] + [0] * (K.degree - 1)))
    values = [_fraction(solution[i, 0]) for i in range(K.degree)]
    common = reduce(_lcm, (v.denominator for v in values), 1)
    return K.from_power([int(v * common) for v in values], common)


def embed(K, a, root, modulus):
    """Image of ``a`` under a -> root, as a residue mod ``modulus``. The denominator must be invertible."""
    numerators, denominator = K.to_power(a)
    if gcd(denominator, modulus) != 1:
        raise DomainError('denominator %d is not invertible mod %d' % (denominator, modulus))
    value = 0
    for c in reversed(numerators):
        value = (value * root + c) % modulus
    return value * pow(denominator, -1, modulus) % modulus


def make_unit(K, unit, torsion_order=2, torsion_generator=None):
    """ Validates a unit of ``K``: norm +-1, not a root of unity, and a torsion generator of exact order
    ``torsion_order`` when one is given.

    Returns:
        UnitData
    """
    unit_norm = norm(K, unit)
    if abs(unit_norm) != 1:
        raise DomainError('unit has norm %s, expected +-1' % unit_norm)
    one = K.one()
    for k in _ROOT_OF_UNITY_ORDERS:
        if power(K, unit, k) == one:
            raise DomainError('unit is a root of unity of order %d' % k)
    if torsion_order < 2 or torsion_order % 2:
        raise DomainError('torsion order must be even, got %d' % torsion_order)
    if torsion_generator is not None:
        if power(K, torsion_generator, torsion_order) != one or \
                any(power(K, torsion_generator, torsion_order // q) == one for q in primefactors(torsion_order)):
            raise DomainError('torsion generator does not have order %d' % torsion_order)
    elif torsion_order > 2:
        logger.warning('torsion order %d given without a generator for %s, eps is tested alone', torsion_order, K)
    return UnitData(unit, torsion_order, torsion_generator)


def dedekind_criterion(f, p):
    """ Dedekind's test: is Z[a] maximal at ``p`` for a root a of the monic ``f``?

    With f = prod g_i^e_i mod p, g = prod g_i and h = prod g_i^(e_i - 1), Z[a] is p-maximal iff
    gcd((f - g h) / p, g, h) = 1 mod p, g and h taken as integer lifts.
    """
    if not f.is_monic():
        raise DomainError('%s is not monic' % f)
    g, h = [ZZ(1)], [ZZ(1)]
    for q, e in factor_mod_p(f, p):
        g = gf_mul(g, q.to_gf(), p, ZZ)
        h = gf_mul(h, gf_pow(q.to_gf(), e - 1, p, ZZ), p, ZZ)
    remainder = dup_sub(f.to_dense(), dup_mul(g, h, ZZ), ZZ)
    if any(c % p for c in remainder):
        raise InvariantViolation('factorization of %s mod %d does not multiply back' % (f, p))
    quotient = gf_from_int_poly([c // p for c in remainder], p)
    common = gf_gcd(gf_gcd(quotient, g, p, ZZ), h, p, ZZ)
    return gf_degree(common) <= 0


def dedekind_p_maximal(K, p):
    if not K.is_power_basis:
        raise UnsupportedError('Dedekind test needs the power basis')
    check_prime(p)
    return dedekind_criterion(K.poly, p)


def _splitting_certified(K, p):
    if K.poly_disc % p:
        return True
    if not K.is_power_basis and K.basis_denominator % p:
        return True
    return dedekind_criterion(K.poly, p)


@lru_cache(maxsize=65536)
def split_prime(K, p):
    """ Prime ideals over ``p`` read off the factorization of the defining polynomial mod ``p``.

    Returns:
        tuple of PrimeFactor: labelled 1, 2, ... in the order of :func:`~prational.ring.factor_mod_p`.

    Raises:
        SplittingUndetermined: when p may divide the index of Z[a].
    """
    check_prime(p)
    if not _splitting_certified(K, p):
        raise SplittingUndetermined('%d may divide the index of Z[a] for %s' % (p, K.poly))
    factors = tuple(PrimeFactor(p, g, e, g.degree, i + 1) for i, (g, e) in enumerate(factor_mod_p(K.poly, p)))
    if sum(pf.e * pf.f for pf in factors) != K.degree:
        raise InvariantViolation('sum of e*f over %d is not %d for %s' % (p, K.degree, K.poly))
    return factors


def _hnf(K, elements):
    n = K.degree
    for element in elements:
        if not element.is_integral():
            raise DomainError('ideal generators must be integral')
    rows = [[ZZ(element.coords[i]) for element in elements] for i in range(n)]
    hnf = hermite_normal_form(DomainMatrix(rows, (n, len(elements)), ZZ)).to_Matrix()
    if hnf.shape != (n, n):
        raise DomainError('ideal lattice is not of full rank')
    return IdealHNF(tuple(tuple(int(hnf[i, j]) for j in range(n)) for i in range(n)))


def unit_ideal(K):
    n = K.degree
    return IdealHNF(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def principal_ideal(K, x):
    return _hnf(K, [mul(K, x, K.basis_element(i)) for i in range(K.degree)])


def ideal_from_two_generators(K, p, g):
    """HNF of (p, g(a)); its norm must be p^deg(g)."""
    check_prime(p)
    if g.modulus != p or g.degree < 1:
        raise DomainError('generator %s does not describe a prime over %d' % (g, p))
    generator = K.from_power(g.lift().coefficients)
    n = K.degree
    elements = [K.element(tuple(p if j == i else 0 for j in range(n))) for i in range(n)]
    elements += [mul(K, generator, K.basis_element(i)) for i in range(n)]
    ideal = _hnf(K, elements)
    if ideal.norm != p ** g.degree:
        raise DomainError('inconsistent generator degree: (%d, %s) has norm %d' % (p, g, ideal.norm))
    return ideal


def ideal_multiply(K, A, B):
    elements = [mul(K, K.element(a), K.element(b)) for a in A.columns() for b in B.columns()]
    return _hnf(K, elements)


def ideal_power(K, A, k):
    if k < 0:
        raise DomainError('negative ideal power')
    result = unit_ideal(K)
    for _ in range(k):
        result = ideal_multiply(K, result, A)
    return result


def ideal_contains(K, A, x):
    """Membership by back substitution against the triangular basis."""
    if not x.is_integral():
        raise DomainError('membership needs an integral element')
    v = list(x.coords)
    for i in range(A.size - 1, -1, -1):
        d = A.matrix[i][i]
        if v[i] % d:
            return False
        q = v[i] // d
        if q:
            for r in range(i + 1):
                v[r] -= q * A.matrix[r][i]
    return True


@lru_cache(maxsize=65536)
def prime_ideal(K, factor):
    return ideal_from_two_generators(K, factor.p, factor.generator)


@lru_cache(maxsize=65536)
def prime_ideal_power(K, factor, k):
    return ideal_power(K, prime_ideal(K, factor), k)


def _residue(K, a, modulus):
    if gcd(a.denominator, modulus) != 1:
        raise DomainError('denominator %d is not invertible mod %d' % (a.denominator, modulus))
    scale = pow(a.denominator, -1, modulus)
    return FieldElement(tuple(c * scale % modulus for c in a.coords))


def _mul_mod(K, a, b, modulus):
    product = mul(K, a, b)
    if not product.is_integral():
        raise DomainError('product of integral residues is not integral; is the basis integral?')
    return FieldElement(tuple(c % modulus for c in product.coords))


def pow_mod(K, a, exponent, modulus):
    """ Square-and-multiply with every coordinate reduced mod ``modulus`` after each product.

    ``a`` may carry a denominator prime to the modulus; it is replaced by the integral residue it represents.

    Returns:
        FieldElement: integral element with coordinates in [0, modulus).
    """
    if exponent < 0:
        raise DomainError('negative exponent')
    if exponent == 0:
        if a.is_zero():
            raise DomainError('0^0 is undefined')
        return _residue(K, K.one(), modulus)
    base = _residue(K, a, modulus)
    result = None
    while exponent:
        if exponent & 1:
            result = base if result is None else _mul_mod(K, result, base, modulus)
        exponent >>= 1
        if exponent:
            base = _mul_mod(K, base, base, modulus)
    return result


def format_element(K, a, symbol='a', unicode=False):
    """Renders ``a`` in powers of the generator, constant term first."""
    numerators, denominator = K.to_power(a)
    text = format_polynomial(numerators, symbol=symbol, unicode=unicode, ascending=True)
    if denominator != 1:
        text = '(%s)/%d' % (text, denominator)
    return text
