import cmath
import math
import random
from fractions import Fraction

import pytest

from planaralg.coeff import (
    CyclotomicInt,
    LaurentPoly,
    chebyshev_T,
    cyclotomic_polynomial,
    cyclotomic_reduce,
    laurent_eval,
    scalar_add,
    scalar_from_json,
    scalar_is_zero,
    scalar_mul,
    scalar_neg,
    scalar_to_json,
    to_complex,
)


def _diff(a, b):
    return scalar_add(a, scalar_neg(b))


def test_chebyshev_base_cases():
    for x in (Fraction(0), Fraction(7, 3), complex(1.5)):
        assert chebyshev_T(1, x) == (Fraction(1) if not isinstance(x, complex) else 1)
        assert chebyshev_T(2, x) == (Fraction(1) if not isinstance(x, complex) else 1)


def test_chebyshev_one_step():
    x = Fraction(3, 7)
    assert chebyshev_T(3, x) == 1 - x


def test_chebyshev_against_direct_recursion():
    # independent oracle: unroll the recursion with raw Fractions
    def oracle(n, x):
        vals = [None, Fraction(1), Fraction(1)]
        for m in range(3, n + 1):
            vals.append(vals[-1] - x * vals[-2])
        return vals[n]

    x = Fraction(1, 4)
    assert chebyshev_T(5, x) == oracle(5, x) == Fraction(5, 16)
    for n in range(1, 12):
        assert chebyshev_T(n, x) == oracle(n, x)


def test_chebyshev_recursion_identity_random_rational():
    rng = random.Random(0)
    for _ in range(20):
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        for n in range(2, 31):
            lhs = chebyshev_T(n + 1, x) + x * chebyshev_T(n - 1, x) - chebyshev_T(n, x)
            assert lhs == 0


def test_cyclotomic_examples():
    assert cyclotomic_reduce([1, 1], 2).is_zero()
    assert cyclotomic_reduce([1, 1, 1], 3).is_zero()
    z = cyclotomic_reduce([2, 0, 0, 1], 4)
    assert not z.is_zero()
    assert abs(z.to_complex() - (2 - 1j)) < 1e-12 or abs(z.to_complex() - (2 + 1j)) < 1e-12


def test_cyclotomic_polynomials_known():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_cyclotomic_is_zero_matches_float_eval():
    rng = random.Random(1)
    for _ in range(1000):
        m = rng.randint(1, 24)
        coeffs = [rng.randint(-3, 3) for _ in range(m)]
        z = CyclotomicInt(m, coeffs)
        value = sum(c * cmath.exp(2j * math.pi * e / m) for e, c in enumerate(coeffs))
        assert z.is_zero() == (abs(value) < 1e-9), (m, coeffs, value)


def test_cyclotomic_conjugate():
    z = CyclotomicInt.root(5, 2) + CyclotomicInt(5, [3])
    w = z.conjugate()
    assert abs(w.to_complex() - z.to_complex().conjugate()) < 1e-12


def test_ring_axioms_random_all_tags():
    rng = random.Random(2)

    def rand_rat():
        return Fraction(rng.randint(-5, 5), rng.randint(1, 5))

    def rand_laurent():
        return LaurentPoly("A", {rng.randint(-3, 3): rand_rat() for _ in range(3)})

    def rand_cyc():
        return CyclotomicInt(6, [rng.randint(-3, 3) for _ in range(6)])

    def rand_c():
        return complex(rng.uniform(-2, 2), rng.uniform(-2, 2))

    for maker in (rand_rat, rand_laurent, rand_cyc, rand_c):
        for _ in range(40):
            a, b, c = maker(), maker(), maker()
            lhs = scalar_mul(a, scalar_add(b, c))
            rhs = scalar_add(scalar_mul(a, b), scalar_mul(a, c))
            assert scalar_is_zero(_diff(lhs, rhs), 1e-9)
            assoc1 = scalar_mul(scalar_mul(a, b), c)
            assoc2 = scalar_mul(a, scalar_mul(b, c))
            assert scalar_is_zero(_diff(assoc1, assoc2), 1e-8)


def test_laurent_eval_examples():
    p = LaurentPoly("A", {2: Fraction(1), -2: Fraction(1)})
    assert laurent_eval(p, Fraction(1)) == 2
    z = LaurentPoly("A", {1: Fraction(1)}) - LaurentPoly("A", {1: Fraction(1)})
    assert z.is_zero()
    assert (z * p).is_zero()
    # eval(-A^2 - A^{-2}, A = e^{i pi/5}) -> -2 cos(2 pi / 5)
    q = LaurentPoly("A", {2: Fraction(-1), -2: Fraction(-1)})
    got = laurent_eval(q, cmath.exp(1j * math.pi / 5))
    assert abs(got - (-2 * math.cos(2 * math.pi / 5))) < 1e-12


def test_laurent_division():
    p = LaurentPoly("A", {2: Fraction(1), 0: Fraction(2), -2: Fraction(1)})
    d = LaurentPoly("A", {1: Fraction(1), -1: Fraction(1)})
    assert p / d == d
    with pytest.raises(ValueError):
        LaurentPoly("A", {1: Fraction(1)}) / LaurentPoly("A", {0: Fraction(1), 1: Fraction(1)})


def test_unlike_tags_error():
    with pytest.raises(TypeError):
        scalar_add(Fraction(1), complex(1))
    with pytest.raises(TypeError):
        scalar_mul(LaurentPoly.const(1), CyclotomicInt.one(3))
    assert to_complex(Fraction(1, 2)) == 0.5
    assert abs(to_complex(CyclotomicInt.root(4, 1)) - 1j) < 1e-12


def test_scalar_json_roundtrip():
    samples = [
        Fraction(-3, 7),
        LaurentPoly("A", {3: Fraction(1, 2), -1: Fraction(-2)}),
        CyclotomicInt(5, [1, 2, 0, -1]),
        complex(0.25, -1.5),
    ]
    for s in samples:
        j = scalar_to_json(s)
        back = scalar_from_json(j)
        assert scalar_is_zero(_diff(back, s))
        assert scalar_to_json(back) == j
