"""Kauffman bracket from PD codes, and the four-spin triple-point model.

The bracket here is raw: <unknot> = 1, each extra closed loop contributes
delta = -A^2 - A^{-2}, no writhe correction.  Crossings are resolved
recursively; tests cross-check against a flat 2^n state enumeration with an
independent loop counter.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import LaurentPoly
from .errors import SizeGuardExceeded
from .network import ShadedNetwork, SpinLabel, eval_spin_raw, f_exponent, _q_power

DEFAULT_CROSSING_GUARD = 24


class PDLink:
    """Planar diagram code: one 4-tuple of edge labels per crossing,
    counterclockwise starting at the incoming under-strand.  Crossing-free
    unknot components are carried in free_loops."""

    __slots__ = ("crossings", "free_loops")

    def __init__(self, crossings, free_loops: int = 0):
        self.crossings = [tuple(int(e) for e in c) for c in crossings]
        self.free_loops = int(free_loops)
        if self.free_loops < 0 or (not self.crossings and self.free_loops == 0):
            if self.free_loops < 0:
                raise ValueError("free_loops must be >= 0")
        counts: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError("each crossing needs 4 edge labels")
            for e in c:
                counts[e] = counts.get(e, 0) + 1
        bad = [e for e, n in counts.items() if n != 2]
        if bad:
            raise ValueError(f"edge labels {bad} do not appear exactly twice")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


def _loops_of_state(link: PDLink, state) -> int:
    """Number of closed curves when crossing i is smoothed per state[i].

    state[i] = 0 joins slots (0,1) and (2,3); 1 joins (0,3) and (1,2).
    Slots are glued across crossings wherever they share an edge label.
    """
    # nodes are (crossing, slot); unify via smoothing pairs + edge gluing
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for ci in range(len(link.crossings)):
        for s in range(4):
            parent[(ci, s)] = (ci, s)
    for ci, sm in enumerate(state):
        if sm == 0:
            union((ci, 0), (ci, 1))
            union((ci, 2), (ci, 3))
        else:
            union((ci, 0), (ci, 3))
            union((ci, 1), (ci, 2))
    ends: dict[int, list] = {}
    for ci, cr in enumerate(link.crossings):
        for s, e in enumerate(cr):
            ends.setdefault(e, []).append((ci, s))
    for e, nodes in ends.items():
        union(nodes[0], nodes[1])
    return len({find(x) for x in parent})


def kauffman_bracket(
    link: PDLink, var: str = "A", guard: int = DEFAULT_CROSSING_GUARD
) -> LaurentPoly:
    """Raw bracket by recursive smoothing: <X> = A<0-smoothing> + A^{-1}<oo>.

    The 0-smoothing of a crossing (a, b, c, d) joins a-b and c-d.
    """
    n = link.n_crossings
    if n > guard:
        raise SizeGuardExceeded(f"{n} crossings exceed guard {guard}")
    delta = LaurentPoly(var, {2: Fraction(-1), -2: Fraction(-1)})
    a_pos = LaurentPoly.monomial(1, 1, var)
    a_neg = LaurentPoly.monomial(-1, 1, var)

    # join maps: each crossing slot ends up glued to a partner slot
    def rec(idx, joins):
        """joins: dict (crossing, slot) -> (crossing, slot) for resolved ones."""
        if idx == n:
            loops = _count_loops_from_joins(link, joins)
            total_loops = loops + link.free_loops
            out = LaurentPoly.const(1, var)
            for _ in range(total_loops - 1):
                out = out * delta
            return out
        out = None
        for sm, coeff in ((0, a_pos), (1, a_neg)):
            j = dict(joins)
            if sm == 0:
                j[(idx, 0)] = (idx, 1)
                j[(idx, 1)] = (idx, 0)
                j[(idx, 2)] = (idx, 3)
                j[(idx, 3)] = (idx, 2)
            else:
                j[(idx, 0)] = (idx, 3)
                j[(idx, 3)] = (idx, 0)
                j[(idx, 1)] = (idx, 2)
                j[(idx, 2)] = (idx, 1)
            v = coeff * rec(idx + 1, j)
            out = v if out is None else out + v
        return out

    if n == 0:
        out = LaurentPoly.const(1, var)
        for _ in range(link.free_loops - 1):
            out = out * delta
        return out
    return rec(0, {})


def _count_loops_from_joins(link: PDLink, joins) -> int:
    """Follow slot-join and edge-glue permutations to count closed curves."""
    ends: dict[int, list] = {}
    for ci, cr in enumerate(link.crossings):
        for s, e in enumerate(cr):
            ends.setdefault(e, []).append((ci, s))
    partner = {}
    for e, nodes in ends.items():
        partner[nodes[0]] = nodes[1]
        partner[nodes[1]] = nodes[0]
    seen = set()
    loops = 0
    for start in partner:
        if start in seen:
            continue
        loops += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            nxt = joins[cur]
            seen.add(nxt)
            cur = partner[nxt]
    return loops


def kauffman_state_sum(link: PDLink, var: str = "A", guard: int = DEFAULT_CROSSING_GUARD) -> LaurentPoly:
    """Independent 2^n oracle: enumerate all states, count loops by
    union-find, sum A^{(#0 - #1)} delta^{loops-1}."""
    import itertools

    n = link.n_crossings
    if n > guard:
        raise SizeGuardExceeded(f"{n} crossings exceed guard {guard}")
    delta = LaurentPoly(var, {2: Fraction(-1), -2: Fraction(-1)})
    total = LaurentPoly(var)
    if n == 0:
        out = LaurentPoly.const(1, var)
        for _ in range(link.free_loops - 1):
            out = out * delta
        return out
    for state in itertools.product((0, 1), repeat=n):
        loops = _loops_of_state(link, state) + link.free_loops
        exp = state.count(0) - state.count(1)
        term = LaurentPoly.monomial(exp, 1, var)
        for _ in range(loops - 1):
            term = term * delta
        total = total + term
    return total


# ---------------------------------------------------------------------------
# the alternating-group triple-point model at Q = 4


def _parity(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv % 2


def even_orbit(a: int, b: int, c: int) -> bool:
    """True when (a,b,c) are distinct spins in {1..4} and 1->a, 2->b, 3->c,
    4->(the remaining spin) is an even permutation."""
    if len({a, b, c}) != 3:
        return False
    d = ({1, 2, 3, 4} - {a, b, c}).pop()
    return _parity((a, b, c, d)) == 0


def a4_weight_3box() -> SpinLabel:
    """Triple-point weight at Q=4: +1 on the even orbit, -1 when all equal."""
    table = {}
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                if even_orbit(a, b, c):
                    table[(a, b, c)] = Fraction(1)
                elif a == b == c:
                    table[(a, b, c)] = Fraction(-1)
    return SpinLabel(3, table)


def a4_evaluate(net: ShadedNetwork) -> Fraction:
    """Partition function of a closed triple-point network at Q=4.

    Every box must be a 3-box bound to the even-orbit weight; the smoothing
    circle counts in the geometry hints supply the 4^{f(T)} normalization
    (one negatively oriented circle halves the raw sum, so the box-free
    unknot evaluates to 2).
    """
    if net.boundary:
        raise ValueError("a4_evaluate expects a closed network")
    for _, regs in net.boxes:
        if len(regs) != 3:
            raise ValueError("all boxes must be 3-boxes")
    labels = {name: a4_weight_3box() for name, _ in net.boxes}
    raw = eval_spin_raw(net, 4, labels)
    scale = _q_power(4, f_exponent(net))
    if isinstance(scale, float):
        raise ValueError("geometry hints gave a non-exact normalization at Q=4")
    return raw * scale


def a4_unknot() -> ShadedNetwork:
    """A single closed loop with black interior (one negative circle)."""
    return ShadedNetwork(1, boxes=(), boundary=(), geometry={"n_minus": 1})
