"""Temperley-Lieb diagram algebra with two loop parameters, exact arithmetic.

Boundary convention: the standard box for k strands has 2k marked points,
numbered 0..2k-1 clockwise: 0..k-1 along the top from left to right, then
k..2k-1 along the bottom from RIGHT to left (so point 2k-1 sits under
point 0).  A diagram is a non-crossing fixed-point-free involution of the
points in this cyclic order.

Shading: regions at the top edge alternate white/black starting white at the
left wall, so the segment between top points i and i+1 is black for even i
(0-based).  A closed loop removed during multiplication counts delta1 when
its interior is black and delta2 when white.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import (
    scalar_add,
    scalar_is_zero,
    scalar_mul,
    scalar_neg,
    scalar_one_like,
)
from .errors import NotSemisimple

_FLOAT_TOL = 1e-9


class TLDiagram:
    """A non-crossing perfect matching of the 2k boundary points."""

    __slots__ = ("k", "match")

    def __init__(self, k: int, match):
        match = tuple(int(m) for m in match)
        if len(match) != 2 * k:
            raise ValueError(f"match length {len(match)} != 2k = {2 * k}")
        for i, j in enumerate(match):
            if j == i or not 0 <= j < 2 * k or match[j] != i:
                raise ValueError("match is not a fixed-point-free involution")
        if not _noncrossing(match):
            raise ValueError("matching has crossing strands")
        self.k = k
        self.match = match

    @classmethod
    def identity(cls, k: int) -> "TLDiagram":
        return cls(k, [2 * k - 1 - p for p in range(2 * k)])

    @classmethod
    def e(cls, i: int, k: int) -> "TLDiagram":
        """Cup-cap generator E_i (1 <= i < k): joins top i,i+1 and the two
        bottom points below them, all other strands vertical."""
        if not 1 <= i < k:
            raise ValueError(f"E_{i} undefined at k={k}")
        match = [2 * k - 1 - p for p in range(2 * k)]
        t1, t2 = i - 1, i  # top points, 0-based
        b1, b2 = 2 * k - i, 2 * k - i - 1  # bottom points under them
        match[t1], match[t2] = t2, t1
        match[b1], match[b2] = b2, b1
        return cls(k, match)

    def pairs(self):
        return [(i, j) for i, j in enumerate(self.match) if i < j]

    def __eq__(self, other):
        return isinstance(other, TLDiagram) and other.match == self.match

    def __hash__(self):
        return hash(self.match)

    def __lt__(self, other):
        return self.match < other.match

    def __repr__(self):
        return f"TLDiagram({self.k}, {list(self.match)})"


def _noncrossing(match) -> bool:
    stack = []
    for i, j in enumerate(match):
        if j > i:
            stack.append(i)
        else:
            if not stack or stack[-1] != j:
                return False
            stack.pop()
    return not stack


def tl_basis(k: int) -> list[TLDiagram]:
    """All Catalan(k) diagrams, sorted lexicographically by match tuple."""
    if k < 0:
        raise ValueError("k must be >= 0")

    def gen(points):
        if not points:
            yield []
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            j = points[idx]
            for inner in gen(points[1:idx]):
                for outer in gen(points[idx + 1 :]):
                    yield [(first, j)] + inner + outer

    out = []
    for pairing in gen(list(range(2 * k))):
        match = [0] * (2 * k)
        for a, b in pairing:
            match[a], match[b] = b, a
        out.append(TLDiagram(k, match))
    out.sort(key=lambda d: d.match)
    return out


class TLParams:
    """Loop parameters; spherical mode when delta1 == delta2."""

    __slots__ = ("delta1", "delta2")

    def __init__(self, delta1, delta2=None):
        if delta2 is None:
            delta2 = delta1
        if scalar_is_zero(delta1) or scalar_is_zero(delta2):
            raise ValueError("loop parameters must be nonzero")
        self.delta1 = delta1
        self.delta2 = delta2

    @property
    def spherical(self) -> bool:
        try:
            diff = scalar_add(self.delta1, scalar_neg(self.delta2))
        except TypeError:
            return False
        return scalar_is_zero(diff, _FLOAT_TOL)

    @property
    def delta(self):
        if not self.spherical:
            raise ValueError("delta is only defined in spherical mode")
        return self.delta1


class TLElement:
    """Formal linear combination of diagrams on a common k."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        tidy = {}
        for d, c in (terms or {}).items():
            if d.k != k:
                raise ValueError("diagram size mismatch")
            if not scalar_is_zero(c, 0.0):
                tidy[d] = c
        self.terms = tidy

    @classmethod
    def from_diagram(cls, d: TLDiagram, coeff=Fraction(1)) -> "TLElement":
        return cls(d.k, {d: coeff})

    @classmethod
    def identity(cls, k: int, coeff=Fraction(1)) -> "TLElement":
        return cls.from_diagram(TLDiagram.identity(k), coeff)

    @classmethod
    def zero(cls, k: int) -> "TLElement":
        return cls(k, {})

    def __add__(self, other):
        if not isinstance(other, TLElement) or other.k != self.k:
            raise ValueError("can only add TL elements of equal k")
        t = dict(self.terms)
        for d, c in other.terms.items():
            t[d] = scalar_add(t[d], c) if d in t else c
        return TLElement(self.k, t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s) -> "TLElement":
        if isinstance(s, int):
            if s == 0:
                return TLElement.zero(self.k)
            out = {}
            for d, c in self.terms.items():
                out[d] = scalar_mul(c, s * scalar_one_like(c))
            return TLElement(self.k, out)
        return TLElement(self.k, {d: scalar_mul(c, s) for d, c in self.terms.items()})

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(scalar_is_zero(c, tol) for c in self.terms.values())

    def __eq__(self, other):
        return (
            isinstance(other, TLElement)
            and other.k == self.k
            and (self - other).is_zero()
        )

    def __hash__(self):
        raise TypeError("TLElement is unhashable")

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{d!r}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].match))


def _stack_diagrams(x: TLDiagram, y: TLDiagram):
    """Glue x above y; return (result diagram pairs, loop interface-minima).

    Interface position h (1-based, 1..k) glues x's bottom point 2k-h to y's
    top point h-1.  Each closed loop is reported by the minimum interface
    position it passes through.
    """
    k = x.k
    n = 2 * k
    # node ids: x-points 0..n-1, y-points n..2n-1
    nxt = {}
    for i, j in enumerate(x.match):
        nxt[i] = j
    for i, j in enumerate(y.match):
        nxt[n + i] = n + j
    # interface gluing as a separate involution
    glue = {}
    for h in range(1, k + 1):
        a = 2 * k - h  # x bottom point
        b = n + (h - 1)  # y top point
        glue[a] = b
        glue[b] = a

    outer_x = list(range(k))  # x top points = result top
    outer_y = [n + p for p in range(k, 2 * k)]  # y bottom points = result bottom

    # walk strands from outer points
    result_pairs = []
    seen = set()

    def walk(start):
        cur = nxt[start]
        seen.add(start)
        while cur in glue:
            seen.add(cur)
            cur = glue[cur]
            seen.add(cur)
            cur = nxt[cur]
        seen.add(cur)
        return cur

    def res_index(node):
        if node < k:
            return node
        assert node >= n + k
        return node - n

    for p in outer_x + outer_y:
        if p in seen:
            continue
        q = walk(p)
        result_pairs.append((res_index(p), res_index(q)))

    # remaining interface nodes form closed loops
    loop_minima = []
    interior = [a for a in glue if a not in seen]
    visited = set()
    for start in interior:
        if start in visited:
            continue
        min_h = None
        cur = start
        while cur not in visited:
            visited.add(cur)
            if cur < n:  # x bottom point at position h = 2k - cur
                h = 2 * k - cur
            else:  # y top point at position h = cur - n + 1
                h = cur - n + 1
            min_h = h if min_h is None else min(min_h, h)
            cur = glue[cur]
            visited.add(cur)
            cur = nxt[cur]
        loop_minima.append(min_h)

    match = [0] * n
    for a, b in result_pairs:
        match[a], match[b] = b, a
    return TLDiagram(k, match), loop_minima


def tl_multiply(x: TLElement, y: TLElement, p: TLParams) -> TLElement:
    """Stack x above y; interior-black loops count delta1, white delta2.

    A middle loop through interface positions S is black iff min(S) is odd
    (1-based), matching E_i^2 = delta1*E_i for odd i.
    """
    if x.k != y.k:
        raise ValueError(f"k mismatch: {x.k} != {y.k}")
    out = TLElement.zero(x.k)
    acc: dict[TLDiagram, object] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, minima = _stack_diagrams(dx, dy)
            c = scalar_mul(cx, cy)
            for h in minima:
                c = scalar_mul(c, p.delta1 if h % 2 == 1 else p.delta2)
            acc[d] = scalar_add(acc[d], c) if d in acc else c
    return TLElement(x.k, acc)


def tl_include(x: TLElement) -> TLElement:
    """Unital inclusion TL_k -> TL_{k+1}: append a through-strand at the right."""
    k = x.k
    out = {}
    for d, c in x.terms.items():
        match = [0] * (2 * k + 2)

        def shift(p):
            return p if p < k else p + 2

        for i, j in enumerate(d.match):
            match[shift(i)] = shift(j)
        match[k], match[k + 1] = k + 1, k
        out[TLDiagram(k + 1, match)] = c
    return TLElement(k + 1, out)


def diagram_star(d: TLDiagram) -> TLDiagram:
    """Reflection in the horizontal midline (point p <-> 2k-1-p)."""
    n = 2 * d.k
    match = [0] * n
    for i, j in enumerate(d.match):
        match[n - 1 - i] = n - 1 - j
    return TLDiagram(d.k, match)


def tl_star(x: TLElement) -> TLElement:
    """Antilinear * would conjugate float coefficients; exact ones pass through."""
    out = {}
    for d, c in x.terms.items():
        cc = c.conjugate() if isinstance(c, complex) else c
        out[diagram_star(d)] = cc
    return TLElement(x.k, out)


def tl_rotate(x: TLElement) -> TLElement:
    """Rotate by one shaded click (two boundary points); period divides k.

    Point p of the input moves to position (p + 2) mod 2k.  Under the
    spin-model representation this is the black-slot shift
    rho(z)(j_1, ..., j_n) = z(j_2, ..., j_n, j_1).
    """
    n = 2 * x.k
    out = {}
    for d, c in x.terms.items():
        match = [0] * n
        for i, j in enumerate(d.match):
            match[(i + 2) % n] = (j + 2) % n
        rd = TLDiagram(d.k, match)
        out[rd] = scalar_add(out[rd], c) if rd in out else c
    return TLElement(x.k, out)


def _close_once_right(match, k):
    """Join the rightmost top/bottom points of a k-strand matching."""
    n = 2 * k
    t, b = k - 1, k  # rightmost top point and rightmost bottom point
    loop = match[t] == b
    if loop:
        keep = [p for p in range(n) if p not in (t, b)]
        sub = {p: match[p] for p in keep}
    else:
        a, c = match[t], match[b]
        keep = [p for p in range(n) if p not in (t, b)]
        sub = {p: match[p] for p in keep}
        sub[a], sub[c] = c, a
    relabel = {}
    for p in keep:
        relabel[p] = p if p < t else p - 2
    new_match = [0] * (n - 2)
    for p in keep:
        new_match[relabel[p]] = relabel[sub[p]]
    return new_match, loop


def _close_once_left(match, k):
    n = 2 * k
    t, b = 0, n - 1  # leftmost top and leftmost bottom point
    loop = match[t] == b
    keep = [p for p in range(n) if p not in (t, b)]
    sub = {p: match[p] for p in keep}
    if not loop:
        a, c = match[t], match[b]
        sub[a], sub[c] = c, a
    new_match = [0] * (n - 2)
    for p in keep:
        new_match[p - 1] = sub[p] - 1
    return new_match, loop


def diagram_trace(d: TLDiagram, p: TLParams, side: str = "right"):
    """Unnormalized Markov trace Tr of a single diagram (close all strands).

    Right closure: the loop created while j strands remain has black interior
    iff j is odd.  Left closure: the s-th closed loop (s = 1, 2, ...) has
    white interior for odd s, mirroring the left wall's white region.
    """
    k = d.k
    match = list(d.match)
    value = None
    for step in range(k, 0, -1):
        if side == "right":
            match, loop = _close_once_right(match, step)
            factor = p.delta1 if step % 2 == 1 else p.delta2
        elif side == "left":
            match, loop = _close_once_left(match, step)
            s = k - step + 1
            factor = p.delta2 if s % 2 == 1 else p.delta1
        else:
            raise ValueError("side must be 'left' or 'right'")
        if loop:
            value = factor if value is None else scalar_mul(value, factor)
    return scalar_one_like(p.delta1) if value is None else value


def markov_trace(x: TLElement, p: TLParams, side: str = "right", normalized: bool = False):
    """Tr (or tr = delta^{-k} Tr in normalized spherical mode) of x."""
    if normalized and not p.spherical:
        raise ValueError("normalized trace requires delta1 == delta2")
    total = None
    for d, c in x.terms.items():
        v = scalar_mul(c, diagram_trace(d, p, side))
        total = v if total is None else scalar_add(total, v)
    if total is None:
        return Fraction(0)
    if normalized:
        delta = p.delta
        if isinstance(delta, (float, complex)):
            return complex(total) / complex(delta) ** x.k
        if isinstance(delta, (int, Fraction)):
            return scalar_mul(total, (Fraction(1) / Fraction(delta)) ** x.k)
        raise TypeError("normalized trace needs rational or binary64 delta")
    return total


def gram_matrix(k: int, p: TLParams):
    """G[i][j] = Tr(d_i* d_j) over the lexicographic basis."""
    basis = tl_basis(k)
    one = scalar_one_like(p.delta1)
    starred = [TLElement.from_diagram(diagram_star(d), one) for d in basis]
    elems = [TLElement.from_diagram(d, one) for d in basis]
    out = []
    for bi in starred:
        row = []
        for bj in elems:
            row.append(markov_trace(tl_multiply(bi, bj, p), p, "right"))
        out.append(row)
    return out


def gram_rank(k: int, delta: float, tol: float = 1e-6) -> int:
    """Rank of the Gram matrix at spherical binary64 delta.

    Pivoted Gaussian elimination; a pivot below tol times the largest pivot
    seen counts as zero.
    """
    import numpy as np

    p = TLParams(complex(delta))
    g = np.array(
        [[complex(v) for v in row] for row in gram_matrix(k, p)], dtype=complex
    )
    n = g.shape[0]
    rank = 0
    max_piv = 0.0
    for col in range(n):
        piv_row = None
        piv_val = 0.0
        for r in range(rank, n):
            v = abs(g[r, col])
            if v > piv_val:
                piv_val, piv_row = v, r
        max_piv = max(max_piv, piv_val)
        if piv_val <= tol * max(max_piv, 1e-300):
            continue
        g[[rank, piv_row]] = g[[piv_row, rank]]
        g[rank] = g[rank] / g[rank, col]
        for r in range(n):
            if r != rank and g[r, col] != 0:
                g[r] = g[r] - g[r, col] * g[rank]
        rank += 1
    return rank


def _proportionality(x: TLElement, y: TLElement):
    """Scalar c with x == c*y, or None; exact when coefficients are exact."""
    if y.is_zero():
        return None
    d0, c0 = next(iter(y.terms.items()))
    cx = x.terms.get(d0)
    if cx is None:
        return None
    if isinstance(c0, complex) or isinstance(cx, complex):
        c = complex(cx) / complex(c0)
        diff = x - y.scale(c)
        return c if diff.is_zero(_FLOAT_TOL) else None
    c = Fraction(cx) / Fraction(c0)
    diff = x - y.scale(c)
    return c if diff.is_zero() else None


def jones_wenzl(k: int, delta) -> TLElement:
    """The idempotent killed by every E_i, by the one-step recursion.

    f_{j+1} = f_j - r_j f_j E_j f_j with r_j fixed by f_{j+1} E_j = 0.
    Raises NotSemisimple when the required coefficient cannot be solved
    (delta at a Chebyshev root).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(delta, float):
        delta = complex(delta)
    if isinstance(delta, int):
        delta = Fraction(delta)
    exact = isinstance(delta, Fraction)
    p = TLParams(delta)
    f = TLElement.identity(1, Fraction(1) if exact else complex(1))
    for j in range(1, k):
        fj = tl_include(f)  # now in TL_{j+1}
        ej = TLElement.from_diagram(
            TLDiagram.e(j, j + 1), Fraction(1) if exact else complex(1)
        )
        fe = tl_multiply(fj, ej, p)
        fef = tl_multiply(fe, fj, p)
        fefe = tl_multiply(fef, ej, p)
        c = _proportionality(fefe, fe)
        if c is None:
            raise NotSemisimple(f"f_{j + 1}E_{j}f_{j + 1} not proportional to f E at delta={delta}")
        if scalar_is_zero(c, _FLOAT_TOL if not exact else 0.0):
            raise NotSemisimple(f"vanishing Wenzl coefficient at step {j}, delta={delta}")
        rinv = (Fraction(1) / c) if exact else (1.0 / c)
        f = fj - fef.scale(rinv)
    return f
