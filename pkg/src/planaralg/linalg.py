"""Exact linear algebra over cyclotomic number fields Q(zeta_m).

Elements are coefficient tuples over the power basis of Q[x]/(Phi_m).
Enough field and matrix machinery for the nullspace computations of the
Hadamard-matrix module; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import CyclotomicInt, cyclotomic_polynomial


class CycField:
    """The field Q(zeta_m) with precomputed reduction tables."""

    def __init__(self, m: int):
        self.m = m
        phi = cyclotomic_polynomial(m)
        self.phi = [Fraction(c) for c in phi]
        self.deg = len(phi) - 1
        # x^i mod Phi_m for i < 2*deg (enough for products)
        powers = []
        cur = [Fraction(0)] * self.deg
        if self.deg > 0:
            cur = [Fraction(1)] + [Fraction(0)] * (self.deg - 1)
        for i in range(2 * self.deg + max(self.m, 1)):
            powers.append(tuple(cur))
            # multiply by x
            carry = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if carry:
                for j in range(self.deg):
                    cur[j] -= carry * self.phi[j]
        self.xpow = powers

    # -- element constructors -------------------------------------------------
    def zero(self):
        return tuple([Fraction(0)] * self.deg)

    def one(self):
        out = [Fraction(0)] * self.deg
        out[0] = Fraction(1)
        return tuple(out)

    def root_power(self, e: int):
        """zeta_m^e as a field element."""
        return self.xpow[e % self.m] if self.m > 1 else self.one()

    def from_int(self, n):
        out = [Fraction(0)] * self.deg
        out[0] = Fraction(n)
        return tuple(out)

    def from_cyclotomic_int(self, z: CyclotomicInt):
        if z.m != self.m:
            raise ValueError("order mismatch")
        out = [Fraction(0)] * self.deg
        for e, c in enumerate(z.coeffs):
            if c:
                p = self.xpow[e]
                for j in range(self.deg):
                    out[j] += c * p[j]
        return tuple(out)

    # -- arithmetic ------------------------------------------------------------
    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [Fraction(0)] * self.deg
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                p = self.xpow[i + j]
                c = ai * bj
                for t in range(self.deg):
                    if p[t]:
                        out[t] += c * p[t]
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def conj(self, a):
        """Complex conjugation zeta -> zeta^{-1}."""
        out = [Fraction(0)] * self.deg
        for i, ai in enumerate(a):
            if not ai:
                continue
            p = self.root_power(-i)
            for t in range(self.deg):
                if p[t]:
                    out[t] += ai * p[t]
        return tuple(out)

    def inv(self, a):
        """Inverse via extended Euclid in Q[x] against Phi_m."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")

        def poly_trim(p):
            p = list(p)
            while p and p[-1] == 0:
                p.pop()
            return p

        def poly_divmod(num, den):
            num = list(num)
            out = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
            dd = len(den) - 1
            lead = den[-1]
            for i in range(len(num) - 1, dd - 1, -1):
                if i - dd < 0:
                    break
                c = num[i] / lead
                if c:
                    out[i - dd] = c
                    for j, d in enumerate(den):
                        num[i - dd + j] -= c * d
            return poly_trim(out), poly_trim(num)

        # extended gcd(a, phi)
        r0, r1 = poly_trim(self.phi), poly_trim(a)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = poly_divmod(r0, r1)
            # s = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1))
            for i, qi in enumerate(q):
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
            s = [x - y for x, y in zip(s0 + [Fraction(0)] * (len(prod) - len(s0)), prod)] if len(prod) > len(s0) else [
                x - y for x, y in zip(s0, prod + [Fraction(0)] * (len(s0) - len(prod)))
            ]
            r0, r1 = r1, r
            s0, s1 = s1, poly_trim(s)
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible (not coprime to Phi_m)")
        c = r0[0]
        inv = [x / c for x in s0]
        inv = inv[: self.deg] + [Fraction(0)] * max(0, self.deg - len(inv))
        # reduce: inv may have degree >= deg in pathological cases
        out = [Fraction(0)] * self.deg
        for i, v in enumerate(inv):
            if v:
                p = self.xpow[i]
                for t in range(self.deg):
                    out[t] += v * p[t]
        return tuple(out)

    def to_complex(self, a) -> complex:
        import cmath
        import math

        z = cmath.exp(2j * math.pi / self.m) if self.m > 1 else 1.0
        return sum(complex(c) * z**i for i, c in enumerate(a))


def row_echelon(field: CycField, rows, ncols: int, want_basis: bool = False):
    """Exact elimination; returns (rank, pivots, reduced rows).

    Rows are dicts col -> element (sparse).  With want_basis the reduced
    rows are back-substituted so a nullspace basis can be read off.
    """
    work = [dict(r) for r in rows if r]
    pivots = []
    pivot_rows = []
    while work:
        row = work.pop(0)
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        # eliminate known pivots
        for pc, pr in zip(pivots, pivot_rows):
            if pc in row:
                f = row.pop(pc)
                for c, v in pr.items():
                    if c == pc:
                        continue
                    nv = field.sub(row.get(c, field.zero()), field.mul(f, v))
                    if field.is_zero(nv):
                        row.pop(c, None)
                    else:
                        row[c] = nv
        row = {c: v for c, v in row.items() if not field.is_zero(v)}
        if not row:
            continue
        pc = min(row)
        pinv = field.inv(row[pc])
        row = {c: field.mul(pinv, v) for c, v in row.items()}
        if want_basis:
            # clear pc from existing pivot rows (full reduction)
            for i, pr in enumerate(pivot_rows):
                if pc in pr:
                    f = pr.pop(pc)
                    for c, v in row.items():
                        if c == pc:
                            continue
                        nv = field.sub(pr.get(c, field.zero()), field.mul(f, v))
                        if field.is_zero(nv):
                            pr.pop(c, None)
                        else:
                            pr[c] = nv
        pivots.append(pc)
        pivot_rows.append(row)
    return len(pivots), pivots, pivot_rows


def nullity(field: CycField, rows, ncols: int) -> int:
    rank, _, _ = row_echelon(field, rows, ncols)
    return ncols - rank


def nullspace_basis(field: CycField, rows, ncols: int):
    """Basis vectors (dense tuples) of the solution space of rows . x = 0."""
    rank, pivots, pivot_rows = row_echelon(field, rows, ncols, want_basis=True)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for pc, pr in zip(pivots, pivot_rows):
            v = pr.get(fc)
            if v is not None:
                vec[pc] = field.neg(v)
        basis.append(tuple(vec))
    return basis
