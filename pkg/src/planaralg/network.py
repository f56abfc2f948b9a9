"""Partition functions of labelled planar networks.

Spin models sum box weights over assignments of {1..Q} to black regions;
vertex models color the strings instead.  Networks are combinatorial: region
and string incidences plus optional orientation hints (counts of oriented
circles and semicircles after smoothing boxes) for the normalization
exponent.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .coeff import scalar_add, scalar_is_zero, scalar_mul
from .errors import SizeGuardExceeded

DEFAULT_GUARD = 10**7


class SpinLabel:
    """Weight table {1..Q}^r -> scalar, sparse with default 0."""

    __slots__ = ("arity", "table")

    def __init__(self, arity: int, table):
        self.arity = arity
        self.table = {}
        for key, v in dict(table).items():
            key = tuple(int(i) for i in key)
            if len(key) != arity:
                raise ValueError("entry arity mismatch")
            if not scalar_is_zero(v):
                self.table[key] = v

    def __call__(self, spins):
        return self.table.get(tuple(spins), Fraction(0))

    def rotate(self) -> "SpinLabel":
        """Shift black slots by one: rho(w)(j1..jr) = w(j2..jr, j1)."""
        return SpinLabel(
            self.arity, {key[-1:] + key[:-1]: v for key, v in self.table.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, SpinLabel)
            and other.arity == self.arity
            and other.table == self.table
        )

    __hash__ = None


def spin_rotate(x: SpinLabel) -> SpinLabel:
    return x.rotate()


class ShadedNetwork:
    """Black-region incidence data for a spin-model network.

    boxes: list of (label name, [region ids clockwise from the box's marked
    corner]).  boundary: region ids met along the outer boundary (empty for
    closed networks).  geometry: optional orientation hints with keys
    n_plus / n_minus (oriented circles after smoothing all boxes) and
    nd_plus / nd_minus (oriented semicircles).
    """

    __slots__ = ("black_regions", "boxes", "boundary", "geometry")

    def __init__(self, black_regions: int, boxes=(), boundary=(), geometry=None):
        self.black_regions = int(black_regions)
        self.boxes = [(name, tuple(int(r) for r in regs)) for name, regs in boxes]
        self.boundary = tuple(int(r) for r in boundary)
        self.geometry = dict(geometry or {})
        for _, regs in self.boxes:
            for r in regs:
                if not 0 <= r < self.black_regions:
                    raise ValueError(f"region id {r} out of range")
        for r in self.boundary:
            if not 0 <= r < self.black_regions:
                raise ValueError(f"boundary region id {r} out of range")

    @property
    def k(self) -> int:
        return len(self.boundary)


def _check_labels(net: ShadedNetwork, labels: dict) -> None:
    for name, regs in net.boxes:
        if name not in labels:
            raise ValueError(f"unbound label {name!r}")
        if labels[name].arity != len(regs):
            raise ValueError(
                f"label {name!r} has arity {labels[name].arity}, box has {len(regs)} regions"
            )


def eval_spin_raw(
    net: ShadedNetwork,
    q: int,
    labels: dict | None = None,
    boundary_spins=None,
    guard: int = DEFAULT_GUARD,
):
    """Sum of box-weight products over all spin states of interior regions.

    Closed networks give a scalar; open ones a SpinLabel on the boundary
    unless boundary_spins pins the boundary.  Empty sums are 0, empty
    products 1; a black region meeting no box and no boundary contributes a
    free factor q.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    labels = labels or {}
    _check_labels(net, labels)

    used = sorted({r for _, regs in net.boxes for r in regs} | set(net.boundary))
    free = net.black_regions - len(used)
    boundary_set = set(net.boundary)
    interior = [r for r in used if r not in boundary_set]
    if q ** max(len(interior), 0) > guard:
        raise SizeGuardExceeded(f"q^{len(interior)} interior states exceed guard")

    def weight(assign: dict) -> object:
        total = None
        for name, regs in net.boxes:
            w = labels[name](tuple(assign[r] for r in regs))
            if scalar_is_zero(w):
                return None
            total = w if total is None else scalar_mul(total, w)
        return Fraction(1) if total is None else total

    def summed(fixed: dict):
        total = None
        for combo in itertools.product(range(1, q + 1), repeat=len(interior)):
            assign = dict(fixed)
            assign.update(zip(interior, combo))
            w = weight(assign)
            if w is None:
                continue
            total = w if total is None else scalar_add(total, w)
        return Fraction(0) if total is None else total

    def with_free_factor(v):
        if free == 0:
            return v
        if isinstance(v, complex):
            return v * q**free
        return scalar_mul(v, Fraction(q) ** free)

    if net.boundary and boundary_spins is None:
        table = {}
        # boundary entries range over assignments of the boundary *regions*
        bregions = sorted(boundary_set)
        for combo in itertools.product(range(1, q + 1), repeat=len(bregions)):
            fixed = dict(zip(bregions, combo))
            v = summed(fixed)
            if scalar_is_zero(v):
                continue
            key = tuple(fixed[r] for r in net.boundary)
            table[key] = with_free_factor(v)
        return SpinLabel(net.k, table)

    fixed = {}
    if boundary_spins is not None:
        if len(boundary_spins) != net.k:
            raise ValueError("boundary spin count mismatch")
        for r, s in zip(net.boundary, boundary_spins):
            if fixed.get(r, s) != s:
                return Fraction(0)  # same region pinned to two values
            fixed[r] = int(s)
    return with_free_factor(summed(fixed))


def f_exponent(net: ShadedNetwork) -> Fraction:
    """Normalization exponent (1/2)(n+ - n-) + (1/4)(nd+ - nd-).

    Circle/semicircle orientation counts after smoothing boxes must be in
    the network's geometry hints; box-free identity tangles default to 0.
    """
    g = net.geometry
    if not g:
        if not net.boxes and net.black_regions == len(set(net.boundary)):
            return Fraction(0)  # identity-like tangle: no extrema, no circles
        raise ValueError("missing geometry hints for the normalization exponent")
    n_plus = g.get("n_plus", 0)
    n_minus = g.get("n_minus", 0)
    nd_plus = g.get("nd_plus", 0)
    nd_minus = g.get("nd_minus", 0)
    return Fraction(n_plus - n_minus, 2) + Fraction(nd_plus - nd_minus, 4)


def _q_power(q: int, e: Fraction):
    """q^e, exact when possible (integer exponent, or q a perfect square)."""
    e = Fraction(e)
    if e.denominator == 1:
        return Fraction(q) ** e.numerator
    if e.denominator == 2:
        root = int(round(q**0.5))
        if root * root == q:
            return Fraction(root) ** e.numerator
    return float(q) ** float(e)


def eval_spin_normalized(net: ShadedNetwork, q: int, labels=None, boundary_spins=None):
    """q^{f(T)} times the raw partition function."""
    raw = eval_spin_raw(net, q, labels, boundary_spins)
    scale = _q_power(q, f_exponent(net))
    if isinstance(raw, SpinLabel):
        if isinstance(scale, float):
            return SpinLabel(
                raw.arity, {k: complex(v) * scale for k, v in raw.table.items()}
            )
        return SpinLabel(
            raw.arity, {k: scalar_mul(v, scale) for k, v in raw.table.items()}
        )
    if isinstance(scale, float):
        return complex(raw) * scale
    return scalar_mul(raw, scale)


# ---------------------------------------------------------------------------
# vertex models: indices live on strings


class VertexLabel:
    """Tensor with 2k indices of dimension n, as a sparse table (0-based)."""

    __slots__ = ("arity", "dim", "table")

    def __init__(self, arity: int, dim: int, table):
        if arity % 2 != 0:
            raise ValueError("vertex labels need an even number of indices")
        self.arity = arity
        self.dim = dim
        self.table = {}
        for key, v in dict(table).items():
            key = tuple(int(i) for i in key)
            if len(key) != arity or any(not 0 <= i < dim for i in key):
                raise ValueError("bad tensor index")
            if not scalar_is_zero(v):
                self.table[key] = v

    def __call__(self, idx):
        return self.table.get(tuple(idx), Fraction(0))


class TensorNetwork:
    """Boxes wired along strings; strings are connected components of the
    tangle's curves, boundary strings listed in order."""

    __slots__ = ("strings", "boxes", "boundary")

    def __init__(self, strings: int, boxes=(), boundary=()):
        self.strings = int(strings)
        self.boxes = [(name, tuple(int(s) for s in ss)) for name, ss in boxes]
        self.boundary = tuple(int(s) for s in boundary)
        for _, ss in self.boxes:
            for s in ss:
                if not 0 <= s < self.strings:
                    raise ValueError("string id out of range")


def eval_vertex(
    net: TensorNetwork, n: int, labels: dict, boundary_colors=None, guard: int = DEFAULT_GUARD
):
    """Contract over interior string colorings; boundary fixed or tabulated."""
    for name, ss in net.boxes:
        if labels[name].arity != len(ss):
            raise ValueError(f"label {name!r} arity mismatch")
        if labels[name].dim != n:
            raise ValueError(f"label {name!r} dimension mismatch")
    boundary_set = set(net.boundary)
    interior = [s for s in range(net.strings) if s not in boundary_set]
    if n ** len(interior) > guard:
        raise SizeGuardExceeded("interior coloring count exceeds guard")

    def weight(color):
        total = None
        for name, ss in net.boxes:
            w = labels[name](tuple(color[s] for s in ss))
            if scalar_is_zero(w):
                return None
            total = w if total is None else scalar_mul(total, w)
        return Fraction(1) if total is None else total

    def summed(fixed):
        total = None
        for combo in itertools.product(range(n), repeat=len(interior)):
            color = dict(fixed)
            color.update(zip(interior, combo))
            w = weight(color)
            if w is None:
                continue
            total = w if total is None else scalar_add(total, w)
        return Fraction(0) if total is None else total

    if net.boundary and boundary_colors is None:
        bstrings = sorted(boundary_set)
        table = {}
        for combo in itertools.product(range(n), repeat=len(bstrings)):
            fixed = dict(zip(bstrings, combo))
            v = summed(fixed)
            if not scalar_is_zero(v):
                table[tuple(fixed[s] for s in net.boundary)] = v
        return table
    fixed = {}
    if boundary_colors is not None:
        for s, c in zip(net.boundary, boundary_colors):
            if fixed.get(s, c) != c:
                return Fraction(0)
            fixed[s] = int(c)
    return summed(fixed)


# ---------------------------------------------------------------------------
# chromatic polynomial via the spin model with w(a,b) = 1 - [a=b]


def chromatic(n_vertices: int, edges, q: int) -> Fraction:
    """Number of proper q-colorings: vertices are black regions, each edge a
    2-box with weight 1 - [a=b]."""
    w = SpinLabel(
        2,
        {
            (a, b): Fraction(1)
            for a in range(1, q + 1)
            for b in range(1, q + 1)
            if a != b
        },
    )
    boxes = [("edge", (u, v)) for u, v in edges]
    net = ShadedNetwork(n_vertices, boxes)
    labels = {"edge": w}
    return eval_spin_raw(net, q, labels)
