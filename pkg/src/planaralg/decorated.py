"""Temperley-Lieb diagrams decorated by a finite-dimensional algebra.

Strings carry basis labels of an associative algebra (A, tr).  Joining a
string labelled a_i with one labelled a_j contracts through the structure
constants; a closed loop labelled w is removed with the factor tr(w).
With every label equal to the unit this collapses to spherical TL with
delta = tr(1).

Label words compose in the order the strings are traversed: each product
string is walked from its even endpoint (0-based) to its odd one, which
reproduces the sector rules (a1 (x) b1)(a2 (x) b2) = a1a2 (x) b2b1 of the
two-strand case.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .coeff import scalar_add, scalar_is_zero, scalar_mul, scalar_one_like
from .errors import NotSemisimple
from .tl import TLDiagram, TLElement, TLParams, jones_wenzl, tl_basis

_FLOAT_TOL = 1e-9


class DecoratedAlgebraSpec:
    """Finite-dimensional algebra data: structure constants, unit, trace.

    ``structure[i][j]`` is a dict {k: coeff} with a_i a_j = sum_k coeff a_k.
    ``trace[i]`` is tr(a_i); tr(unit) plays the role of the loop parameter.
    """

    __slots__ = ("dim", "structure", "unit", "trace")

    def __init__(self, structure, unit: int, trace):
        self.dim = len(structure)
        self.structure = [
            [{k: c for k, c in cell.items() if not scalar_is_zero(c)} for cell in row]
            for row in structure
        ]
        self.unit = unit
        self.trace = list(trace)

        def is_unit_cell(cell, i):
            return set(cell) == {i} and cell[i] == scalar_one_like(cell[i])

        for i in range(self.dim):
            if not is_unit_cell(self.structure[self.unit][i], i):
                raise ValueError("unit index does not act as a left identity")
            if not is_unit_cell(self.structure[i][self.unit], i):
                raise ValueError("unit index does not act as a right identity")

    @classmethod
    def orthogonal_idempotents(cls, traces) -> "DecoratedAlgebraSpec":
        """Commutative algebra spanned by orthogonal idempotents p_i
        (p_i p_j = [i=j] p_i) with the unit sum(p_i) adjoined as the last
        basis element when there is more than one."""
        d = len(traces)
        one = scalar_one_like(traces[0])
        if d == 1:
            return cls([[{0: one}]], 0, [traces[0]])
        dim = d + 1
        structure = [[{} for _ in range(dim)] for _ in range(dim)]
        for i in range(d):
            structure[i][i] = {i: one}
        for i in range(d):
            structure[d][i] = {i: one}
            structure[i][d] = {i: one}
        structure[d][d] = {d: one}
        traces = list(traces)
        total = traces[0]
        for t in traces[1:]:
            total = scalar_add(total, t)
        return cls(structure, d, traces + [total])

    def mul_vec(self, vec: dict, label: int) -> dict:
        """Right-multiply a coefficient vector over the basis by a_label."""
        out: dict[int, object] = {}
        for i, c in vec.items():
            for k, s in self.structure[i][label].items():
                v = scalar_mul(c, s)
                out[k] = scalar_add(out[k], v) if k in out else v
        return {k: v for k, v in out.items() if not scalar_is_zero(v)}

    def word_vec(self, word) -> dict:
        vec = {self.unit: scalar_one_like(self.trace[self.unit])}
        for l in word:
            vec = self.mul_vec(vec, l)
        return vec

    def trace_word(self, word):
        vec = self.word_vec(word)
        total = None
        for k, c in vec.items():
            v = scalar_mul(c, self.trace[k])
            total = v if total is None else scalar_add(total, v)
        return Fraction(0) if total is None else total


def _strings_of(d: TLDiagram):
    """Strings as (even endpoint, odd endpoint) pairs, sorted."""
    return sorted((min(i, j), max(i, j)) for i, j in d.pairs())


class DecoratedElement:
    """Linear combination of (diagram, per-string label tuple) pairs.

    Labels are listed in the order of ``_strings_of`` on the diagram.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        tidy = {}
        for (d, labels), c in (terms or {}).items():
            if d.k != k or len(labels) != k:
                raise ValueError("diagram/label size mismatch")
            if not scalar_is_zero(c):
                tidy[(d, tuple(labels))] = c
        self.terms = tidy

    @classmethod
    def from_labelled(cls, d: TLDiagram, labels, coeff=Fraction(1)):
        return cls(d.k, {(d, tuple(labels)): coeff})

    def __add__(self, other):
        if other.k != self.k:
            raise ValueError("k mismatch")
        t = dict(self.terms)
        for key, c in other.terms.items():
            t[key] = scalar_add(t[key], c) if key in t else c
        return DecoratedElement(self.k, t)

    def scale(self, s):
        if isinstance(s, int):
            return DecoratedElement(
                self.k,
                {key: scalar_mul(c, s * scalar_one_like(c)) for key, c in self.terms.items()},
            )
        return DecoratedElement(
            self.k, {key: scalar_mul(c, s) for key, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(scalar_is_zero(c, tol) for c in self.terms.values())

    def __eq__(self, other):
        return (
            isinstance(other, DecoratedElement)
            and other.k == self.k
            and (self - other).is_zero()
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*{d.match}{labels}" for (d, labels), c in self.terms.items()
        )


def decorated_basis(k: int, spec: DecoratedAlgebraSpec) -> list:
    """All Catalan(k) * dim^k labelled diagrams."""
    out = []
    for d in tl_basis(k):
        for labels in itertools.product(range(spec.dim), repeat=k):
            out.append((d, labels))
    return out


def _walk_product(dx: TLDiagram, labx, dy: TLDiagram, laby):
    """Stack labelled dx over labelled dy; return (diagram, open-string words,
    loop words).  Words list labels in traversal order (even -> odd endpoint
    for open strings)."""
    k = dx.k
    n = 2 * k
    sx = _strings_of(dx)
    sy = _strings_of(dy)
    lab_of_x = {}
    for s, (a, b) in enumerate(sx):
        lab_of_x[a] = labx[s]
        lab_of_x[b] = labx[s]
    lab_of_y = {}
    for s, (a, b) in enumerate(sy):
        lab_of_y[a] = laby[s]
        lab_of_y[b] = laby[s]

    nxt = {}
    for i, j in enumerate(dx.match):
        nxt[i] = j
    for i, j in enumerate(dy.match):
        nxt[n + i] = n + j
    glue = {}
    for h in range(1, k + 1):
        a = 2 * k - h
        b = n + (h - 1)
        glue[a] = b
        glue[b] = a

    def label_at(node):
        return lab_of_x[node] if node < n else lab_of_y[node - n]

    def res_index(node):
        return node if node < k else node - n

    seen = set()
    open_words = {}
    result_pairs = []
    outer = list(range(k)) + [n + p for p in range(k, 2 * k)]
    for p in outer:
        if p in seen:
            continue
        word = [label_at(p)]
        seen.add(p)
        cur = nxt[p]
        while cur in glue:
            seen.add(cur)
            cur = glue[cur]
            seen.add(cur)
            word.append(label_at(cur))
            cur = nxt[cur]
        seen.add(cur)
        a, b = res_index(p), res_index(cur)
        result_pairs.append((a, b))
        # canonical order reads from the even endpoint of the result string
        if a % 2 == 1:
            word.reverse()
        open_words[(min(a, b), max(a, b))] = word

    loops = []
    visited = set()
    for start in [a for a in glue if a not in seen]:
        if start in visited:
            continue
        word = []
        first_y = None
        cur = start
        while cur not in visited:
            visited.add(cur)
            word.append(label_at(cur))
            cur = glue[cur]
            if first_y is None and cur >= n:
                first_y = cur - n
            visited.add(cur)
            cur = nxt[cur]
        # normalize direction: enter segments at even endpoints
        if first_y is not None and first_y % 2 == 1:
            word.reverse()
        loops.append(word)

    match = [0] * n
    for a, b in result_pairs:
        match[a], match[b] = b, a
    d = TLDiagram(k, match)
    ordered_words = [open_words[s] for s in _strings_of(d)]
    return d, ordered_words, loops


def decorated_multiply(
    x: DecoratedElement, y: DecoratedElement, spec: DecoratedAlgebraSpec
) -> DecoratedElement:
    """Bilinear product: contract joined strings, trace out closed loops."""
    if x.k != y.k:
        raise ValueError("k mismatch")
    acc: dict = {}
    for (dx, labx), cx in x.terms.items():
        for (dy, laby), cy in y.terms.items():
            d, words, loops = _walk_product(dx, labx, dy, laby)
            base = scalar_mul(cx, cy)
            for w in loops:
                base = scalar_mul(base, spec.trace_word(w))
                if scalar_is_zero(base):
                    break
            if scalar_is_zero(base):
                continue
            # expand each open-string word over the basis
            expansions = [spec.word_vec(w) for w in words]
            for combo in itertools.product(*[list(v.items()) for v in expansions]):
                labels = tuple(l for l, _ in combo)
                c = base
                for _, s in combo:
                    c = scalar_mul(c, s)
                key = (d, labels)
                acc[key] = scalar_add(acc[key], c) if key in acc else c
    return DecoratedElement(x.k, acc)


def decorated_markov_trace(
    x: DecoratedElement, spec: DecoratedAlgebraSpec, normalized: bool = False, delta=None
):
    """Close every strand to the right; each closed loop w becomes tr(w).

    Normalized mode divides by tr(1)^k (requires delta = tr(1) supplied or
    taken from the spec).
    """
    if delta is None:
        delta = spec.trace[spec.unit]
    total = None
    for (d, labels), c in x.terms.items():
        k = d.k
        lab_of = {}
        for s, (a, b) in enumerate(_strings_of(d)):
            lab_of[a] = labels[s]
            lab_of[b] = labels[s]
        closure = {i: 2 * k - 1 - i for i in range(2 * k)}
        value = c
        visited = set()
        for start in range(2 * k):
            if start in visited:
                continue
            word = []
            cur = start
            while cur not in visited:
                visited.add(cur)
                word.append(lab_of[cur])
                nxt_pt = d.match[cur]
                visited.add(nxt_pt)
                cur = closure[nxt_pt]
            if start % 2 == 1:
                word.reverse()
            value = scalar_mul(value, spec.trace_word(word))
        total = value if total is None else scalar_add(total, value)
    if total is None:
        return Fraction(0)
    if normalized:
        k = x.k
        if isinstance(delta, (float, complex)):
            return complex(total) / complex(delta) ** k
        return scalar_mul(total, (Fraction(1) / Fraction(delta)) ** k)
    return total


def _juxtapose(d1: TLDiagram, d2: TLDiagram) -> TLDiagram:
    """Place d2 to the right of d1 (horizontal tensor of diagrams)."""
    k1, k2 = d1.k, d2.k
    k = k1 + k2
    match = [0] * (2 * k)

    def m1(p):  # d1 point -> result point
        return p if p < k1 else p + 2 * k2

    def m2(p):  # d2 point -> result point
        return p + k1 if p < k2 else p + k1  # bottom also shifts by k1

    for i, j in enumerate(d1.match):
        match[m1(i)] = m1(j)
    for i, j in enumerate(d2.match):
        match[i + k1] = d2.match[i] + k1
    return TLDiagram(k, match)


def labelled_from_tl(x: TLElement, label: int, k: int) -> DecoratedElement:
    """A TL element with every string carrying the same label."""
    out = {}
    for d, c in x.terms.items():
        out[(d, tuple([label] * k))] = c
    return DecoratedElement(k, out)


def decorated_juxtapose(x: DecoratedElement, y: DecoratedElement) -> DecoratedElement:
    out: dict = {}
    for (dx, labx), cx in x.terms.items():
        for (dy, laby), cy in y.terms.items():
            d = _juxtapose(dx, dy)
            sx = _strings_of(dx)
            sy = _strings_of(dy)
            lab_of = {}
            k1, k2 = dx.k, dy.k
            for s, (a, b) in enumerate(sx):
                a2 = a if a < k1 else a + 2 * k2
                b2 = b if b < k1 else b + 2 * k2
                lab_of[(min(a2, b2), max(a2, b2))] = labx[s]
            for s, (a, b) in enumerate(sy):
                lab_of[(a + k1, b + k1)] = laby[s]
            labels = tuple(lab_of[s] for s in _strings_of(d))
            key = (d, labels)
            c = scalar_mul(cx, cy)
            out[key] = scalar_add(out[key], c) if key in out else c
    return DecoratedElement(x.k + y.k, out)


def pw_projection(word, spec: DecoratedAlgebraSpec, delta) -> DecoratedElement:
    """Idempotent for a reduced word [(label, multiplicity), ...].

    Each run (p, m) contributes the TL idempotent f_m computed at loop
    parameter tau_p * delta, with every string labelled p; runs are placed
    side by side.  tau_p = tr(p)/delta.
    """
    if not word:
        raise ValueError("empty word")
    for (p1, _), (p2, _) in zip(word, word[1:]):
        if p1 == p2:
            raise ValueError("word must be reduced (adjacent labels differ)")
    exact = isinstance(delta, (int, Fraction))
    result = None
    for label, mult in word:
        if mult < 1:
            raise ValueError("multiplicities must be >= 1")
        tr_p = spec.trace[label]
        if exact:
            tau_delta = Fraction(tr_p)  # tr(p) = tau_p * delta already
        else:
            tau_delta = complex(tr_p)
        f = jones_wenzl(mult, tau_delta) if mult >= 1 else None
        block = labelled_from_tl(f, label, mult)
        result = block if result is None else decorated_juxtapose(result, block)
    return result
