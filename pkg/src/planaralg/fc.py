"""Fuss-Catalan algebras: colored non-crossing diagrams with per-color loops.

A diagram on n * c strands colors the 2nc boundary points by the cyclic
pattern (1..c c..1) repeated; strands join equal colors only.  Removing a
closed loop of color m multiplies by the loop parameter a_m.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import scalar_add, scalar_is_zero, scalar_mul, scalar_one_like
from .tl import TLDiagram, _stack_diagrams


def color_pattern(n: int, c: int) -> list[int]:
    """Color (1-based) of each of the 2nc cyclic boundary points."""
    block = list(range(1, c + 1)) + list(range(c, 0, -1))
    return [block[p % (2 * c)] for p in range(2 * n * c)]


class FCDiagram:
    """Color-respecting non-crossing pairing on 2nc points."""

    __slots__ = ("n", "c", "diagram")

    def __init__(self, n: int, c: int, diagram: TLDiagram):
        if diagram.k != n * c:
            raise ValueError("underlying diagram has wrong size")
        colors = color_pattern(n, c)
        for i, j in diagram.pairs():
            if colors[i] != colors[j]:
                raise ValueError(f"strand {i}-{j} joins colors {colors[i]} != {colors[j]}")
        self.n = n
        self.c = c
        self.diagram = diagram

    @classmethod
    def identity(cls, n: int, c: int) -> "FCDiagram":
        return cls(n, c, TLDiagram.identity(n * c))

    def __eq__(self, other):
        return (
            isinstance(other, FCDiagram)
            and (other.n, other.c) == (self.n, self.c)
            and other.diagram == self.diagram
        )

    def __hash__(self):
        return hash((self.n, self.c, self.diagram))

    def __repr__(self):
        return f"FCDiagram({self.n}, {self.c}, {list(self.diagram.match)})"


def fc_basis(n: int, c: int) -> list[FCDiagram]:
    """All color-respecting non-crossing pairings, lexicographic order."""
    colors = color_pattern(n, c)

    def gen(points):
        if not points:
            yield []
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            j = points[idx]
            if colors[first] != colors[j]:
                continue
            for inner in gen(points[1:idx]):
                for outer in gen(points[idx + 1 :]):
                    yield [(first, j)] + inner + outer

    out = []
    for pairing in gen(list(range(2 * n * c))):
        match = [0] * (2 * n * c)
        for a, b in pairing:
            match[a], match[b] = b, a
        out.append(FCDiagram(n, c, TLDiagram(n * c, match)))
    out.sort(key=lambda d: d.diagram.match)
    return out


class FCElement:
    __slots__ = ("n", "c", "terms")

    def __init__(self, n: int, c: int, terms=None):
        self.n = n
        self.c = c
        self.terms = {
            d: v for d, v in (terms or {}).items() if not scalar_is_zero(v)
        }

    @classmethod
    def from_diagram(cls, d: FCDiagram, coeff=Fraction(1)):
        return cls(d.n, d.c, {d: coeff})

    def __add__(self, other):
        if (other.n, other.c) != (self.n, self.c):
            raise ValueError("size/color mismatch")
        t = dict(self.terms)
        for d, v in other.terms.items():
            t[d] = scalar_add(t[d], v) if d in t else v
        return FCElement(self.n, self.c, t)

    def __eq__(self, other):
        if not isinstance(other, FCElement) or (other.n, other.c) != (self.n, self.c):
            return False
        for d in set(self.terms) | set(other.terms):
            a = self.terms.get(d)
            b = other.terms.get(d)
            if a is None or b is None:
                if not scalar_is_zero(b if a is None else a):
                    return False
            elif not scalar_is_zero(scalar_add(a, scalar_mul(b, -scalar_one_like(b)))):
                return False
        return True

    __hash__ = None


def fc_multiply(x: FCElement, y: FCElement, loop_params) -> FCElement:
    """Stack x over y; a closed loop of color m contributes loop_params[m-1]."""
    if (x.n, x.c) != (y.n, y.c):
        raise ValueError("size/color mismatch")
    n, c = x.n, x.c
    if len(loop_params) != c:
        raise ValueError(f"need {c} loop parameters")
    colors = color_pattern(n, c)
    acc: dict[FCDiagram, object] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, minima = _stack_diagrams(dx.diagram, dy.diagram)
            v = scalar_mul(cx, cy)
            for h in minima:
                # interface position h corresponds to top boundary point h-1
                v = scalar_mul(v, loop_params[colors[h - 1] - 1])
            fd = FCDiagram(n, c, d)
            acc[fd] = scalar_add(acc[fd], v) if fd in acc else v
    return FCElement(n, c, acc)


def fc_reflect(d: FCDiagram) -> FCDiagram:
    """Reflection in the horizontal midline (adjoint diagram)."""
    from .tl import diagram_star

    return FCDiagram(d.n, d.c, diagram_star(d.diagram))
