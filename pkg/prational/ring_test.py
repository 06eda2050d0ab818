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

import pytest

from prational.errors import DomainError, NotSimpleRootError, UnsupportedError
from prational.ring import (IntPoly, ModPoly, PadicApprox, check_prime, count_real_roots, discriminant, factor_mod_p,
                            format_polynomial, hensel_lift_root, padic_log)


F = IntPoly((27, -4, 0, 1))


def test_format_polynomial():
    assert format_polynomial((27, -4, 0, 1)) == 'x^3 - 4x + 27'
    assert format_polynomial((1, 5, 0, 15), symbol='α', unicode=True, ascending=True) == '1 + 5α + 15α³'
    assert format_polynomial((0, -1)) == '-x'
    assert format_polynomial(()) == '0'
    assert str(ModPoly((2, 1), 3)) == 'x - 1'


def test_int_poly():
    assert IntPoly((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPoly(()).degree == -1
    assert F.degree == 3 and F.is_monic()
    assert F(2) == 27
    assert F.derivative() == IntPoly((-4, 0, 3))
    assert F.reduce(5) == ModPoly((2, 1, 0, 1), 5)


def test_check_prime():
    check_prime(5)
    for n in (1, 4, 9, 5.0):
        with pytest.raises(DomainError):
            check_prime(n)


def test_discriminant():
    assert discriminant(F) == -19427
    assert discriminant(IntPoly((1, 0, 0, 0, 1))) == 256
    with pytest.raises(DomainError):
        discriminant(IntPoly((1, 1)))


def test_factor_mod_p():
    # x^3 - 4x + 27 = x (x - 1) (x + 1) mod 3, linear factors by increasing root
    assert factor_mod_p(F, 3) == [(ModPoly((0, 1), 3), 1), (ModPoly((2, 1), 3), 1), (ModPoly((1, 1), 3), 1)]
    assert factor_mod_p(F, 5) == [(ModPoly((1, 1), 5), 1), (ModPoly((2, 4, 1), 5), 1)]
    # (x - 1)^2 (x + 1)
    assert factor_mod_p(IntPoly((1, -1, -1, 1)), 5) == [(ModPoly((4, 1), 5), 2), (ModPoly((1, 1), 5), 1)]
    assert factor_mod_p(IntPoly((1, 0, 1)), 3) == [(ModPoly((1, 0, 1), 3), 1)]
    with pytest.raises(DomainError):
        factor_mod_p(IntPoly((3, 0, 3)), 3)


def test_count_real_roots():
    assert count_real_roots(F) == 1
    assert count_real_roots(IntPoly((1, 0, 0, 0, 1))) == 0
    assert count_real_roots(IntPoly((0, -1, 0, 1))) == 3
    with pytest.raises(DomainError):
        count_real_roots(IntPoly((0, 0, 1)))


def test_hensel_lift_root():
    r = hensel_lift_root(F, 3, 1, 2)
    assert r == PadicApprox(7, 2, 3)
    r = hensel_lift_root(F, 3, 2, 6)
    assert r.value % 3 == 2 and F(r.value) % 3 ** 6 == 0
    with pytest.raises(NotSimpleRootError):
        hensel_lift_root(IntPoly((1, -1, -1, 1)), 5, 1, 3)
    with pytest.raises(DomainError):
        hensel_lift_root(F, 5, 0, 3)


def test_padic_arithmetic():
    x = PadicApprox(18, 3, 3)
    assert x.valuation() == 2
    assert PadicApprox(27, 3, 3).valuation() == 3
    assert x.divide_by_prime() == PadicApprox(6, 2, 3)
    assert PadicApprox(6, 2, 3).divide_by_unit(2) == PadicApprox(3, 2, 3)
    assert (PadicApprox(5, 2, 3) + PadicApprox(5, 4, 3)) == PadicApprox(1, 2, 3)
    with pytest.raises(DomainError):
        PadicApprox(6, 2, 3).divide_by_unit(3)
    with pytest.raises(DomainError):
        PadicApprox(6, 2, 3).divide_by_prime(2)


def test_padic_log():
    # log(1 + p) = p mod p^2 for p >= 5
    assert padic_log(PadicApprox(6, 2, 5)) == PadicApprox(5, 2, 5)
    assert padic_log(PadicApprox(1, 4, 5)).is_zero()
    assert padic_log(PadicApprox(51, 4, 5)).valuation() == 2
    u, v = PadicApprox(6, 4, 5), PadicApprox(11, 4, 5)
    assert padic_log(u * v) == padic_log(u) + padic_log(v)
    with pytest.raises(UnsupportedError):
        padic_log(PadicApprox(3, 4, 2))
    with pytest.raises(DomainError):
        padic_log(PadicApprox(2, 4, 5))


if __name__ == '__main__':
    test_format_polynomial()
    test_int_poly()
    test_check_prime()
    test_discriminant()
    test_factor_mod_p()
    test_count_real_roots()
    test_hensel_lift_root()
    test_padic_arithmetic()
    test_padic_log()
