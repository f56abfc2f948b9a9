"""Exact and approximate scalar arithmetic shared by the whole package.

Four coefficient domains are supported:

* exact rationals (``fractions.Fraction``, arbitrary precision),
* integer Laurent polynomials in one variable with rational coefficients,
* cyclotomic integers ``sum_j c_j zeta_m^j`` stored reduced modulo the
  m-th cyclotomic polynomial (exact zero test),
* binary64 complex numbers for float mode.

Mixing unlike domains is an error; promotion to complex is always explicit
(``to_complex``).  All values are immutable.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

Rational = Fraction  # arbitrary-precision reduced rationals


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dn] = c
        for j, d in enumerate(den):
            num[i - dn + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


_CYCLOTOMIC_CACHE: dict[int, list[int]] = {}


def cyclotomic_polynomial(m: int) -> list[int]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[m]
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not rem
    _CYCLOTOMIC_CACHE[m] = poly
    return poly


class CyclotomicInt:
    """Element of Z[zeta_m], reduced modulo the m-th cyclotomic polynomial.

    ``is_zero`` is exact: the stored representative is the remainder of the
    input modulo Phi_m, so the zero element has an all-zero coefficient
    vector.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        if m < 1:
            raise ValueError("order m must be >= 1")
        phi = cyclotomic_polynomial(m)
        c = [int(v) for v in coeffs]
        # fold exponents >= m back first (zeta_m^m = 1), then reduce mod Phi_m
        folded = [0] * m
        for e, v in enumerate(c):
            folded[e % m] += v
        _, rem = _poly_divmod_int(folded, phi)
        rem += [0] * (len(phi) - 1 - len(rem))
        self.m = m
        self.coeffs = tuple(rem)

    @classmethod
    def root(cls, m: int, power: int = 1) -> "CyclotomicInt":
        """zeta_m^power."""
        e = power % m
        return cls(m, [0] * e + [1])

    @classmethod
    def one(cls, m: int) -> "CyclotomicInt":
        return cls(m, [1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "CyclotomicInt") -> None:
        if not isinstance(other, CyclotomicInt):
            raise TypeError(f"cannot mix CyclotomicInt with {type(other).__name__}")
        if other.m != self.m:
            raise ValueError(f"mixed cyclotomic orders {self.m} and {other.m}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for e, v in enumerate(other.coeffs):
            a[e] += v
        return CyclotomicInt(self.m, a)

    def __neg__(self):
        return CyclotomicInt(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.m, [other * c for c in self.coeffs])
        self._check(other)
        n = len(self.coeffs) + len(other.coeffs) - 1
        prod = [0] * max(n, 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return CyclotomicInt(self.m, prod)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugation, zeta_m -> zeta_m^{-1}."""
        out = [0] * self.m
        for e, v in enumerate(self.coeffs):
            out[(-e) % self.m] += v
        return CyclotomicInt(self.m, out)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.m)
        return sum(c * z**e for e, c in enumerate(self.coeffs) if c)

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInt)
            and other.m == self.m
            and (self - other).is_zero()
        )

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInt({self.m}, {list(self.coeffs)})"


def cyclotomic_reduce(coeffs, m: int) -> CyclotomicInt:
    """Canonical representative of sum_j coeffs[j] * zeta_m^j."""
    return CyclotomicInt(m, coeffs)


class LaurentPoly:
    """Laurent polynomial with rational coefficients in one named variable.

    Zero coefficients are never stored; serialization is sorted by exponent,
    so equal polynomials have equal representations.
    """

    __slots__ = ("var", "terms")

    def __init__(self, var: str = "A", terms=None):
        self.var = var
        tidy: dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                tidy[int(e)] = c
        self.terms = dict(sorted(tidy.items()))

    @classmethod
    def monomial(cls, exp: int = 1, coeff=1, var: str = "A") -> "LaurentPoly":
        return cls(var, {exp: Fraction(coeff)})

    @classmethod
    def const(cls, value, var: str = "A") -> "LaurentPoly":
        return cls(var, {0: Fraction(value)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot mix LaurentPoly with {type(other).__name__}")
        if other.var != self.var:
            raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.var)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return LaurentPoly(self.var, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.var, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        t: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.var, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Exact division; raises ValueError when the remainder is nonzero."""
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / other)
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly(self.var)
        # shift both to ordinary polynomials and long-divide
        lo_n = min(self.terms)
        lo_d = min(other.terms)
        num = {e - lo_n: c for e, c in self.terms.items()}
        den = {e - lo_d: c for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        quot: dict[int, Fraction] = {}
        while num:
            dn = max(num)
            if dn < dd:
                raise ValueError("nonzero remainder in Laurent division")
            q = num[dn] / lead
            quot[dn - dd] = q
            for e, c in den.items():
                k = dn - dd + e
                v = num.get(k, Fraction(0)) - q * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return LaurentPoly(self.var, {e + lo_n - lo_d: c for e, c in quot.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use monomial inverses instead of negative powers")
        out = LaurentPoly.const(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def eval_complex(self, x: complex) -> complex:
        return sum(complex(c) * complex(x) ** e for e, c in self.terms.items())

    def eval_rational(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and other.var == self.var
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.var, tuple(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.terms.items():
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*{self.var}")
            else:
                bits.append(f"{c}*{self.var}^{e}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# tagged-union scalar helpers

Scalar = object  # Fraction | LaurentPoly | CyclotomicInt | complex (tagged union)


def _tag(x) -> str:
    if isinstance(x, (int, Fraction)):
        return "rat"
    if isinstance(x, LaurentPoly):
        return "laurent"
    if isinstance(x, CyclotomicInt):
        return "cyc"
    if isinstance(x, (float, complex)):
        return "c"
    raise TypeError(f"not a scalar: {type(x).__name__}")


def _coerce(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return complex(x)
    return x


def scalar_add(a, b):
    a, b = _coerce(a), _coerce(b)
    if _tag(a) != _tag(b):
        raise TypeError(f"cannot add {_tag(a)} and {_tag(b)} scalars")
    return a + b


def scalar_mul(a, b):
    a, b = _coerce(a), _coerce(b)
    if _tag(a) != _tag(b):
        raise TypeError(f"cannot multiply {_tag(a)} and {_tag(b)} scalars")
    return a * b


def scalar_neg(a):
    return -_coerce(a)


def scalar_is_zero(a, tol: float = 0.0) -> bool:
    a = _coerce(a)
    if isinstance(a, Fraction):
        return a == 0
    if isinstance(a, LaurentPoly):
        return a.is_zero()
    if isinstance(a, CyclotomicInt):
        return a.is_zero()
    return abs(a) <= tol


def scalar_one_like(a):
    a = _coerce(a)
    if isinstance(a, Fraction):
        return Fraction(1)
    if isinstance(a, LaurentPoly):
        return LaurentPoly.const(1, a.var)
    if isinstance(a, CyclotomicInt):
        return CyclotomicInt.one(a.m)
    return complex(1)


def to_complex(a) -> complex:
    """Explicit promotion of any scalar to binary64 complex."""
    a = _coerce(a)
    if isinstance(a, Fraction):
        return complex(a)
    if isinstance(a, LaurentPoly):
        raise TypeError("evaluate a LaurentPoly at a point instead")
    if isinstance(a, CyclotomicInt):
        return a.to_complex()
    return complex(a)


def laurent_eval(p: LaurentPoly, x):
    """Evaluate p at x: exact for rational x, binary64 for complex x."""
    x = _coerce(x)
    if isinstance(x, Fraction):
        return p.eval_rational(x)
    if isinstance(x, complex):
        return p.eval_complex(x)
    raise TypeError(f"cannot evaluate at a {_tag(x)} point")


def chebyshev_T(n: int, x):
    """T_n with T_1 = T_2 = 1 and T_{n+1} = T_n - x*T_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _coerce(x)
    one = scalar_one_like(x)
    if n <= 2:
        return one
    prev, cur = one, one  # T_1, T_2
    for _ in range(n - 2):
        prev, cur = cur, scalar_add(cur, scalar_neg(scalar_mul(x, prev)))
    return cur


# ---------------------------------------------------------------------------
# JSON encodings:  {"rat":[n,d]}  {"laurent":{"var":v,"terms":[[e,[n,d]],..]}}
#                  {"cyc":{"m":m,"coeffs":[...]}}  {"c":[re,im]}


def scalar_to_json(x):
    x = _coerce(x)
    if isinstance(x, Fraction):
        return {"rat": [x.numerator, x.denominator]}
    if isinstance(x, LaurentPoly):
        return {
            "laurent": {
                "var": x.var,
                "terms": [[e, [c.numerator, c.denominator]] for e, c in x.terms.items()],
            }
        }
    if isinstance(x, CyclotomicInt):
        return {"cyc": {"m": x.m, "coeffs": list(x.coeffs)}}
    if isinstance(x, complex):
        return {"c": [x.real, x.imag]}
    raise TypeError(f"not a scalar: {type(x).__name__}")


def scalar_from_json(obj):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"bad scalar encoding: {obj!r}")
    ((kind, val),) = obj.items()
    if kind == "rat":
        return Fraction(val[0], val[1])
    if kind == "laurent":
        terms = {int(e): Fraction(c[0], c[1]) for e, c in val["terms"]}
        return LaurentPoly(val.get("var", "A"), terms)
    if kind == "cyc":
        return CyclotomicInt(val["m"], val["coeffs"])
    if kind == "c":
        return complex(val[0], val[1])
    raise ValueError(f"unknown scalar tag {kind!r}")
