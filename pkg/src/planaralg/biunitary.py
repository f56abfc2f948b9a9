"""Generalized Hadamard matrices and the invariants of their symmetry algebras.

A Q x Q matrix with unit-modulus entries and pairwise-orthogonal rows scaled
by 1/sqrt(Q) is a biunitary for the Q-spin model.  This module computes the
profile matrix, the component graph and its sizes/traces, gauge operations
and fingerprints, star-triangle solutions, and the dimensions of the small
symmetry algebras both by a staircase linear system and by a periodic
transfer matrix.  Root-of-unity matrices are handled exactly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction

import numpy as np

from .coeff import CyclotomicInt
from .errors import HypothesisNotMet, NotHadamard, SizeGuardExceeded
from .linalg import CycField, nullity, nullspace_basis

DEFAULT_TOL = 1e-9
DIM_GUARD = 10**4


class GenHadamard:
    """Unit-modulus entry matrix; the biunitary is entries / sqrt(Q).

    Root mode stores entries as powers of a primitive m-th root of unity
    (exponents matrix); complex mode stores binary64 entries with a
    tolerance used by every zero test.
    """

    __slots__ = ("q", "mode", "order", "exponents", "entries", "tol")

    def __init__(self, q, mode, order=None, exponents=None, entries=None, tol=DEFAULT_TOL):
        self.q = int(q)
        self.mode = mode
        self.tol = float(tol)
        if mode == "root":
            if order is None or exponents is None:
                raise ValueError("root mode needs order and exponents")
            self.order = int(order)
            self.exponents = [[int(e) % self.order for e in row] for row in exponents]
            if len(self.exponents) != self.q or any(len(r) != self.q for r in self.exponents):
                raise ValueError("exponent matrix shape mismatch")
            self.entries = None
        elif mode == "complex":
            if entries is None:
                raise ValueError("complex mode needs entries")
            self.entries = np.asarray(entries, dtype=complex)
            if self.entries.shape != (self.q, self.q):
                raise ValueError("entry matrix shape mismatch")
            self.order = None
            self.exponents = None
        else:
            raise ValueError(f"unknown mode {mode!r}")

    def to_complex(self) -> np.ndarray:
        if self.mode == "complex":
            return self.entries.copy()
        z = cmath.exp(2j * math.pi / self.order)
        return np.array(
            [[z ** self.exponents[a][b] for b in range(self.q)] for a in range(self.q)]
        )

    def entry_root(self, a: int, b: int) -> int:
        """Exponent of the (a, b) entry in root mode."""
        return self.exponents[a][b]


# ---------------------------------------------------------------------------
# fixture constructors


def fourier_matrix(q: int) -> GenHadamard:
    """Character table of Z/q: entry (a, b) = zeta_q^{ab}."""
    return GenHadamard(
        q, "root", order=q, exponents=[[(a * b) % q for b in range(q)] for a in range(q)]
    )


def sylvester_matrix(q: int) -> GenHadamard:
    """Character table of (Z/2)^n for q = 2^n: entries (-1)^{<a,b>}."""
    n = q.bit_length() - 1
    if 1 << n != q:
        raise ValueError("sylvester needs q a power of 2")
    expo = [[bin(a & b).count("1") % 2 for b in range(q)] for a in range(q)]
    return GenHadamard(q, "root", order=2, exponents=expo)


def paley_matrix(q: int = 12) -> GenHadamard:
    """Quadratic-residue Hadamard matrix in dephased circulant-core form.

    Indices are * = 0 and 1..q-1 standing for GF(q-1); the core entry at
    (a, b) is the quadratic character of b - a, with -1 on the diagonal.
    Requires q - 1 an odd prime with q - 1 = 3 mod 4.
    """
    p = q - 1
    if p % 4 != 3 or any(p % d == 0 for d in range(2, p)):
        raise ValueError("need q - 1 prime and = 3 mod 4")
    squares = {(x * x) % p for x in range(1, p)}

    def chi(x):
        x %= p
        if x == 0:
            return None
        return 0 if x in squares else 1  # exponent of -1

    expo = [[0] * q for _ in range(q)]
    for a in range(1, q):
        for b in range(1, q):
            if a == b:
                expo[a][b] = 1  # entry -1
            else:
                expo[a][b] = chi((b - 1) - (a - 1))
    return GenHadamard(q, "root", order=2, exponents=expo)


# ---------------------------------------------------------------------------
# validation


def validate(h: GenHadamard) -> dict:
    """Check unit modulus and row orthogonality; raises NotHadamard."""
    q = h.q
    if h.mode == "root":
        field = CycField(h.order)
        for a in range(q):
            for b in range(a + 1, q):
                s = field.zero()
                for x in range(q):
                    s = field.add(
                        s, field.root_power(h.exponents[a][x] - h.exponents[b][x])
                    )
                if not field.is_zero(s):
                    raise NotHadamard(f"rows {a} and {b} are not orthogonal")
        return {"q": q, "mode": "root", "order": h.order, "valid": True}
    m = h.entries
    bad = np.abs(np.abs(m) - 1) > h.tol
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise NotHadamard(f"entry ({a}, {b}) does not have modulus 1")
    gram = m @ m.conj().T
    off = gram - q * np.eye(q)
    if np.abs(off).max() > h.tol * q:
        rows = np.unravel_index(np.argmax(np.abs(off)), off.shape)
        raise NotHadamard(f"rows {rows} are not orthogonal")
    return {"q": q, "mode": "complex", "tol": h.tol, "valid": True}


# ---------------------------------------------------------------------------
# profile matrix and components


class ProfileMatrix:
    """Prof[(a,b),(c,d)] = sum_x H^x_a conj(H^x_b) conj(H^x_c) H^x_d.

    Computed on the unit-modulus entries; the biunitary scale 1/Q^2 is
    metadata, not stored in the values.  Root mode keeps each entry as a
    histogram over root-of-unity exponents, so the zero test is exact.
    """

    __slots__ = ("q", "mode", "values", "order", "tol", "_zero_cache")

    def __init__(self, q, mode, values, order=None, tol=DEFAULT_TOL):
        self.q = q
        self.mode = mode
        self.values = values
        self.order = order
        self.tol = tol
        self._zero_cache: dict = {}

    def value(self, a, b, c, d):
        """CyclotomicInt (root mode) or complex entry."""
        v = self.values[(a, b, c, d)]
        if self.mode == "root":
            return CyclotomicInt(self.order, v)
        return v

    def is_nonzero(self, a, b, c, d) -> bool:
        v = self.values[(a, b, c, d)]
        if self.mode == "root":
            cached = self._zero_cache.get(v)
            if cached is None:
                cached = not CyclotomicInt(self.order, v).is_zero()
                self._zero_cache[v] = cached
            return cached
        return abs(v) > self.tol * self.q


def profile(h: GenHadamard) -> ProfileMatrix:
    q = h.q
    if h.mode == "root":
        m = h.order
        expo = np.array(h.exponents, dtype=np.int64)
        # diff[a, b, x] = e(x, a) - e(x, b) mod m
        diff = (expo.T[:, None, :] - expo.T[None, :, :]) % m
        values = {}
        for a in range(q):
            for b in range(q):
                # exponent of summand x for (a,b,c,d): diff[a,b,x] - diff[c,d,x]
                rel = (diff[a, b][None, None, :] - diff) % m  # (c, d, x)
                hists = np.zeros((q, q, m), dtype=np.int64)
                for r in range(m):
                    hists[:, :, r] = (rel == r).sum(axis=2)
                for c in range(q):
                    for d in range(q):
                        values[(a, b, c, d)] = tuple(int(v) for v in hists[c, d])
        return ProfileMatrix(q, "root", values, order=m)
    m = h.entries
    # vec[(a,b)][x] = H^x_a conj(H^x_b); profile = all pairwise inner products
    values = {}
    vecs = {}
    for a in range(q):
        for b in range(q):
            vecs[(a, b)] = m[:, a] * np.conj(m[:, b])
    for (a, b), v1 in vecs.items():
        for (c, d), v2 in vecs.items():
            values[(a, b, c, d)] = complex(np.conj(v2) @ v1)
    return ProfileMatrix(q, "complex", values, tol=h.tol)


class ComponentReport:
    __slots__ = ("q", "count", "sizes", "traces", "mode", "tol")

    def __init__(self, q, sizes, mode, tol=None):
        self.q = q
        self.sizes = sorted(sizes)
        self.count = len(sizes)
        self.traces = [Fraction(n, q * q) for n in self.sizes]
        self.mode = mode
        self.tol = tol

    @property
    def fingerprint(self):
        return (tuple(self.sizes), tuple(self.traces))

    def __repr__(self):
        return f"ComponentReport(count={self.count}, sizes={self.sizes})"


def _profile_sane(prof: ProfileMatrix) -> None:
    """Runtime checks: diagonal entries equal Q, conjugate symmetry of
    nonzero-ness."""
    q = prof.q
    for a in range(q):
        for b in range(q):
            v = prof.value(a, b, a, b)
            if prof.mode == "root":
                if v != CyclotomicInt(prof.order, [q]):
                    raise AssertionError("profile diagonal entry != Q")
            elif abs(v - q) > prof.tol * q:
                raise AssertionError("profile diagonal entry != Q")


def components(h: GenHadamard, prof: ProfileMatrix | None = None) -> ComponentReport:
    """Connected components of the nonzero-profile graph on Q^2 vertices."""
    q = h.q
    if prof is None:
        prof = profile(h)
    _profile_sane(prof)
    parent = list(range(q * q))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    def vid(a, b):
        return a * q + b

    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if vid(a, b) < vid(c, d) and prof.is_nonzero(a, b, c, d):
                        # conjugate symmetry makes edges undirected
                        if not prof.is_nonzero(c, d, a, b):
                            raise AssertionError("profile lost conjugate symmetry")
                        union(vid(a, b), vid(c, d))
    sizes: dict[int, int] = {}
    for v in range(q * q):
        sizes[find(v)] = sizes.get(find(v), 0) + 1
    rep = ComponentReport(q, list(sizes.values()), prof.mode, tol=prof.tol)
    if sum(rep.sizes) != q * q:
        raise AssertionError("component sizes do not sum to Q^2")
    for n in rep.sizes:
        if n % q != 0:
            raise AssertionError(f"component size {n} is not a multiple of Q")
    return rep


def standardness_report(h: GenHadamard) -> dict:
    rep = components(h)
    verdict = "standard-up-to-gauge" if rep.count == h.q else "not-standard"
    return {"q": h.q, "dim_pu_2": rep.count, "verdict": verdict}


# ---------------------------------------------------------------------------
# gauge transformations


def gauge(h: GenHadamard, row_phases=None, col_phases=None, row_perm=None, col_perm=None) -> GenHadamard:
    """H'[a][b] = rp[a] * cp[b] * H[perm_r(a)][perm_c(b)].

    In root mode phases are exponents of the stored root of unity; in
    complex mode they are unit-modulus numbers.
    """
    q = h.q
    row_perm = list(row_perm) if row_perm is not None else list(range(q))
    col_perm = list(col_perm) if col_perm is not None else list(range(q))
    if sorted(row_perm) != list(range(q)) or sorted(col_perm) != list(range(q)):
        raise ValueError("permutations must be bijections of 0..q-1")
    if h.mode == "root":
        rp = [int(x) for x in (row_phases if row_phases is not None else [0] * q)]
        cp = [int(x) for x in (col_phases if col_phases is not None else [0] * q)]
        expo = [
            [
                (rp[a] + cp[b] + h.exponents[row_perm[a]][col_perm[b]]) % h.order
                for b in range(q)
            ]
            for a in range(q)
        ]
        return GenHadamard(q, "root", order=h.order, exponents=expo, tol=h.tol)
    rp = np.asarray(row_phases if row_phases is not None else np.ones(q), dtype=complex)
    cp = np.asarray(col_phases if col_phases is not None else np.ones(q), dtype=complex)
    if np.abs(np.abs(rp) - 1).max() > h.tol or np.abs(np.abs(cp) - 1).max() > h.tol:
        raise ValueError("phases must have unit modulus")
    base = h.entries[np.ix_(row_perm, col_perm)]
    return GenHadamard(q, "complex", entries=np.outer(rp, cp) * base, tol=h.tol)


def dephase(h: GenHadamard) -> GenHadamard:
    """Make the first row and column all ones by a gauge transformation."""
    q = h.q
    if h.mode == "root":
        rp = [(-h.exponents[a][0]) % h.order for a in range(q)]
        cp = [(h.exponents[0][0] - h.exponents[0][b]) % h.order for b in range(q)]
        return gauge(h, rp, cp)
    rp = np.conj(h.entries[:, 0])
    cp = h.entries[0, 0] / h.entries[0, :]
    return gauge(h, rp, cp)


def equivalence_fingerprint(h: GenHadamard):
    rep = components(h)
    return rep.fingerprint


# ---------------------------------------------------------------------------
# star-triangle solutions (a basis of the k=2 symmetry algebra)


def star_triangle_solve(h: GenHadamard):
    """Solve sum_d H^d_a conj(H^d_b) x^c_d = H^c_a conj(H^c_b) y^b_a.

    Eliminates y: for each (a, b) the vector v_(a,b) with components
    H^d_a conj(H^d_b) must be an eigenvector of x.  Returns the exact basis
    of the x-solution space (root mode only).
    """
    if h.mode != "root":
        raise ValueError("exact star-triangle solving needs root mode")
    q = h.q
    field = CycField(h.order)

    def v(a, b, d):
        return field.root_power(h.exponents[d][a] - h.exponents[d][b])

    # unknowns x[c][d] at column c*q + d
    rows = []
    for a in range(q):
        for b in range(q):
            # (x v)_c * v_{c'} - (x v)_{c'} * v_c = 0 for c < c'
            for c in range(q):
                for cp in range(c + 1, q):
                    row = {}
                    for d in range(q):
                        row[c * q + d] = field.mul(v(a, b, d), v(a, b, cp))
                        row[cp * q + d] = field.neg(field.mul(v(a, b, d), v(a, b, c)))
                    rows.append(row)
    basis = nullspace_basis(field, rows, q * q)
    return basis, field


def star_triangle_commute_check(h: GenHadamard) -> bool:
    """Solutions of the star-triangle system commute pairwise."""
    basis, field = star_triangle_solve(h)
    q = h.q

    def matmul(x, y):
        out = {}
        for c in range(q):
            for d in range(q):
                s = field.zero()
                for e in range(q):
                    s = field.add(s, field.mul(x[c * q + e], y[e * q + d]))
                out[(c, d)] = s
        return out

    for x in basis:
        for y in basis:
            xy = matmul(x, y)
            yx = matmul(y, x)
            for key in xy:
                if not field.is_zero(field.sub(xy[key], yx[key])):
                    return False
    return True


def prop_21117_check(h: GenHadamard) -> dict:
    """Cyclic-symmetry dichotomy: with Q-1 prime, a flat index * and
    translation symmetry, dim P^u_2 is 2 or Q."""
    q = h.q
    p = q - 1
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise HypothesisNotMet(f"Q - 1 = {p} is not prime")
    if h.mode != "root":
        raise HypothesisNotMet("check implemented for root mode")
    star = None
    for s in range(q):
        if all(h.exponents[s][b] == 0 for b in range(q)) and all(
            h.exponents[a][s] == 0 for a in range(q)
        ):
            star = s
            break
    if star is None:
        raise HypothesisNotMet("no index * with u^a_* = u^*_a = 1 (dephase first)")
    others = [i for i in range(q) if i != star]
    # cyclic action g: others[i] -> others[(i+1) mod p]
    for g in range(1, p):
        for i, a in enumerate(others):
            for j, b in enumerate(others):
                ga = others[(i + g) % p]
                gb = others[(j + g) % p]
                if h.exponents[ga][gb] != h.exponents[a][b]:
                    raise HypothesisNotMet(
                        f"translation symmetry fails at g={g}, (a,b)=({a},{b})"
                    )
    dim = components(h).count
    conclusion = dim == 2 or dim == q
    return {
        "q": q,
        "star_index": star,
        "dim_pu_2": dim,
        "conclusion_holds": conclusion,
    }


# ---------------------------------------------------------------------------
# higher symmetry algebras: staircase system and transfer matrix


def _staircase_rows(h: GenHadamard, k: int, field: CycField):
    """Linear system for the k-th symmetry algebra.

    An unknown function x(s_1..s_k) belongs to the algebra iff
    sum_s prod_i H^{s_i}_{j_i} conj(H^{s_i}_{j_{i+1}}) x(s) vanishes for
    every boundary tuple (j_1..j_{k+1}) with j_1 != j_{k+1}.
    """
    q = h.q
    rows = []
    for j in itertools.product(range(q), repeat=k + 1):
        if j[0] == j[-1]:
            continue
        row = {}
        for col, s in enumerate(itertools.product(range(q), repeat=k)):
            e = 0
            for i in range(k):
                e += h.exponents[s[i]][j[i]] - h.exponents[s[i]][j[i + 1]]
            row[col] = field.root_power(e)
        rows.append(row)
    return rows


def dim_pu_k(h: GenHadamard, k: int, guard: int = DIM_GUARD, fast: bool = True) -> int:
    """Dimension of the k-th symmetry algebra by the staircase system."""
    if k < 1 or k > 3:
        raise ValueError("supported for 1 <= k <= 3")
    q = h.q
    if q**k > guard:
        raise SizeGuardExceeded(f"Q^k = {q ** k} exceeds guard {guard}")
    if h.mode != "root":
        return _dim_pu_k_float(h, k)
    if k == 2 and fast:
        return _dim_pu_2_intersect(h)
    field = CycField(h.order)
    rows = _staircase_rows(h, k, field)
    return nullity(field, rows, q**k)


def _dim_pu_2_intersect(h: GenHadamard) -> int:
    """k=2 staircase nullspace as an intersection of rank-one spans.

    With V_{ij}[s] = H^s_i conj(H^s_j), a function x(s1, s2) solves the
    staircase system iff as a matrix it lies, for every spin j, in
    span_i { conj(V_{ij}) (x) V_{ij} } -- the same solution space as the
    full Q^2(Q-1)-row system, intersected subspace by subspace.
    """
    q = h.q
    field = CycField(h.order)

    def vexp(i, j, s):
        return h.exponents[s][i] - h.exponents[s][j]

    def span_j(j):
        basis = []
        for i in range(q):
            vec = [field.zero()] * (q * q)
            for s1 in range(q):
                for s2 in range(q):
                    vec[s1 * q + s2] = field.root_power(vexp(i, j, s2) - vexp(i, j, s1))
            basis.append(vec)
        return basis

    current = span_j(0)
    for j in range(1, q):
        if not current:
            break
        other = span_j(j)
        # intersect span(current) with span(other): solve a U = b W
        d1, d2 = len(current), len(other)
        rows = []
        for coord in range(q * q):
            row = {}
            for idx, u in enumerate(current):
                if not field.is_zero(u[coord]):
                    row[idx] = u[coord]
            for idx, w in enumerate(other):
                if not field.is_zero(w[coord]):
                    row[d1 + idx] = field.neg(w[coord])
            if row:
                rows.append(row)
        combos = nullspace_basis(field, rows, d1 + d2)
        new_basis = []
        for combo in combos:
            vec = [field.zero()] * (q * q)
            for idx in range(d1):
                c = combo[idx]
                if field.is_zero(c):
                    continue
                u = current[idx]
                for coord in range(q * q):
                    if not field.is_zero(u[coord]):
                        vec[coord] = field.add(vec[coord], field.mul(c, u[coord]))
            new_basis.append(vec)
        current = new_basis
    return len(current)


def _dim_pu_k_float(h: GenHadamard, k: int) -> int:
    q = h.q
    m = h.entries
    rows = []
    for j in itertools.product(range(q), repeat=k + 1):
        if j[0] == j[-1]:
            continue
        row = np.empty(q**k, dtype=complex)
        for col, s in enumerate(itertools.product(range(q), repeat=k)):
            v = 1.0 + 0j
            for i in range(k):
                v *= m[s[i], j[i]] * np.conj(m[s[i], j[i + 1]])
            row[col] = v
        rows.append(row)
    a = np.array(rows)
    sv = np.linalg.svd(a, compute_uv=False)
    top = sv[0] if len(sv) else 1.0
    rank = int((sv > h.tol * max(top, 1.0)).sum())
    return q**k - rank


def transfer_matrix(h: GenHadamard, k: int):
    """Periodic transfer matrix T = W* W with profile-type weights.

    W maps x(s_1..s_k) to its staircase contraction on a cylinder:
    W[j, s] = prod_i H^{s_i}_{j_i} conj(H^{s_i}_{j_{i+1 mod k}}).
    On unit-modulus entries the symmetry algebra is the eigenspace at
    Q^{k+1}; rescaling entries to the biunitary normalization moves the
    eigenvalue to the loop constant delta^2 = Q times Q^{-k} per layer.
    """
    if h.mode != "root":
        raise ValueError("exact transfer matrix needs root mode")
    q = h.q
    field = CycField(h.order)
    cols = list(itertools.product(range(q), repeat=k))
    jrows = list(itertools.product(range(q), repeat=k))

    def wexp(j, s):
        e = 0
        for i in range(k):
            e += h.exponents[s[i]][j[i]] - h.exponents[s[i]][j[(i + 1) % k]]
        return e

    t = {}
    for si, s in enumerate(cols):
        for ti, s2 in enumerate(cols):
            acc = field.zero()
            for j in jrows:
                acc = field.add(acc, field.root_power(wexp(j, s2) - wexp(j, s)))
            t[(si, ti)] = acc
    return t, field, cols


def transfer_eigenspace_dim(h: GenHadamard, k: int, guard: int = DIM_GUARD) -> int:
    """Dimension of the top eigenspace ker(Q^{k+1} I - T), exactly."""
    q = h.q
    if q**k > guard:
        raise SizeGuardExceeded(f"Q^k = {q ** k} exceeds guard {guard}")
    t, field, cols = transfer_matrix(h, k)
    n = len(cols)
    lam = field.from_int(q ** (k + 1))
    rows = []
    for i in range(n):
        row = {}
        for j in range(n):
            v = t[(i, j)]
            if i == j:
                v = field.sub(v, lam)
            if not field.is_zero(v):
                row[j] = v
        rows.append(row)
    return nullity(field, rows, n)


def temperley_lieb_comparison(h: GenHadamard, k: int) -> dict:
    """Compare dim P^u_k with the diagram-algebra dimension Catalan(k)."""
    dim = dim_pu_k(h, k)
    catalan = math.comb(2 * k, k) // (k + 1)
    return {"q": h.q, "k": k, "dim": dim, "catalan": catalan, "equal": dim == catalan}
