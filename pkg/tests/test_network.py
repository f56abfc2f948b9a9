import itertools
import random
from fractions import Fraction

import pytest

from planaralg.errors import SizeGuardExceeded
from planaralg.network import (
    ShadedNetwork,
    SpinLabel,
    TensorNetwork,
    VertexLabel,
    chromatic,
    eval_spin_normalized,
    eval_spin_raw,
    eval_vertex,
    f_exponent,
    spin_rotate,
)


def test_closed_circle_values():
    # one circle with black interior sums Q spins; white interior has none
    assert eval_spin_raw(ShadedNetwork(1), 5) == 5
    assert eval_spin_raw(ShadedNetwork(0), 5) == 1


def test_single_box_fixed_boundary_returns_entry():
    w = SpinLabel(2, {(1, 2): Fraction(7)})
    net = ShadedNetwork(2, boxes=[("w", (0, 1))], boundary=(0, 1))
    assert eval_spin_raw(net, 3, {"w": w}, boundary_spins=(1, 2)) == 7
    assert eval_spin_raw(net, 3, {"w": w}, boundary_spins=(2, 2)) == 0


def test_open_network_tabulates_boundary():
    w = SpinLabel(2, {(a, b): Fraction(a * b) for a in (1, 2) for b in (1, 2)})
    net = ShadedNetwork(2, boxes=[("w", (0, 1))], boundary=(0, 1))
    out = eval_spin_raw(net, 2, {"w": w})
    assert isinstance(out, SpinLabel)
    assert out((2, 2)) == 4 and out((1, 2)) == 2


def _random_net(rng, q):
    nregions = rng.randint(1, 3)
    boxes, labels = [], {}
    for bi in range(rng.randint(0, 2)):
        arity = rng.randint(1, 3)
        regs = tuple(rng.randrange(nregions) for _ in range(arity))
        table = {}
        for key in itertools.product(range(1, q + 1), repeat=arity):
            if rng.random() < 0.5:
                table[key] = Fraction(rng.randint(-3, 3))
        name = f"b{bi}"
        boxes.append((name, regs))
        labels[name] = SpinLabel(arity, table)
    return ShadedNetwork(nregions, boxes), labels


def test_multiplicative_over_disjoint_unions():
    rng = random.Random(5)
    for _ in range(25):
        q = rng.randint(1, 3)
        n1, l1 = _random_net(rng, q)
        n2, l2 = _random_net(rng, q)
        shift = n1.black_regions
        boxes2 = [(f"y{name}", tuple(r + shift for r in regs)) for name, regs in n2.boxes]
        labels = dict(l1)
        labels.update({f"y{k}": v for k, v in l2.items()})
        union = ShadedNetwork(shift + n2.black_regions, list(n1.boxes) + boxes2)
        assert eval_spin_raw(union, q, labels) == eval_spin_raw(n1, q, l1) * eval_spin_raw(n2, q, l2)


def test_normalization_exponent_and_circles():
    black = ShadedNetwork(1, geometry={"n_minus": 1})
    white = ShadedNetwork(0, geometry={"n_plus": 1})
    assert f_exponent(black) == Fraction(-1, 2)
    assert f_exponent(white) == Fraction(1, 2)
    # normalized circle value is sqrt(Q) regardless of interior shading
    assert eval_spin_normalized(black, 4) == 2
    assert eval_spin_normalized(white, 4) == 2
    assert abs(eval_spin_normalized(black, 5) - 5**0.5) < 1e-12
    # box-free identity tangle has exponent 0
    ident = ShadedNetwork(2, boundary=(0, 1))
    assert f_exponent(ident) == 0
    # boxes without hints are an error
    w = SpinLabel(1, {(1,): Fraction(1)})
    with pytest.raises(ValueError):
        f_exponent(ShadedNetwork(1, boxes=[("w", (0,))]))


def test_chromatic_small_closed_forms():
    assert chromatic(1, [], 7) == 7
    assert chromatic(2, [(0, 1)], 7) == 42
    assert chromatic(3, [(0, 1), (1, 2), (0, 2)], 3) == 6


def _proper_colorings(n, edges, q):
    count = 0
    for col in itertools.product(range(q), repeat=n):
        count += all(col[u] != col[v] for u, v in edges)
    return count


FIXTURE_GRAPHS = [
    (1, []),
    (2, [(0, 1)]),
    (3, [(0, 1), (1, 2), (0, 2)]),
    (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    (6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]),
    (7, [(i, i + 1) for i in range(6)] + [(0, 6)]),
    (8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 4)]),
]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_chromatic_matches_brute_force(q):
    for n, edges in FIXTURE_GRAPHS:
        assert chromatic(n, edges, q) == _proper_colorings(n, edges, q)


def test_vertex_single_box_and_loop():
    x = VertexLabel(2, 3, {(i, i): Fraction(i + 1) for i in range(3)})
    net = TensorNetwork(1, [("x", (0, 0))])
    assert eval_vertex(net, 3, {"x": x}) == 6
    assert eval_vertex(TensorNetwork(1, []), 3, {}) == 3


def test_vertex_contraction_matches_loop_oracle():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(1, 3)
        nstrings = rng.randint(1, 4)
        boxes, labels = [], {}
        for bi in range(rng.randint(1, 3)):
            arity = rng.choice((2, 4))
            ss = tuple(rng.randrange(nstrings) for _ in range(arity))
            table = {}
            for key in itertools.product(range(n), repeat=arity):
                if rng.random() < 0.6:
                    table[key] = Fraction(rng.randint(-2, 2))
            name = f"b{bi}"
            boxes.append((name, ss))
            labels[name] = VertexLabel(arity, n, table)
        net = TensorNetwork(nstrings, boxes)
        got = eval_vertex(net, n, labels)
        # brute-force loop oracle over every coloring
        want = Fraction(0)
        for col in itertools.product(range(n), repeat=nstrings):
            term = Fraction(1)
            for name, ss in boxes:
                term *= labels[name](tuple(col[s] for s in ss))
            want += term
        assert got == want


def test_spin_rotate_period_and_constants():
    rng = random.Random(2)
    const = SpinLabel(3, {key: Fraction(2) for key in itertools.product((1, 2), repeat=3)})
    assert spin_rotate(const) == const
    for arity in (2, 3, 4):
        table = {}
        for _ in range(5):
            table[tuple(rng.randint(1, 3) for _ in range(arity))] = Fraction(rng.randint(1, 9))
        x = SpinLabel(arity, table)
        y = x
        for _ in range(arity):
            y = spin_rotate(y)
        assert y == x


def test_spin_rotate_delta_tensor():
    delta3 = SpinLabel(3, {(i, i, i): Fraction(1) for i in range(1, 4)})
    assert spin_rotate(delta3) == delta3


def test_size_guard():
    net = ShadedNetwork(9, boxes=[("w", tuple(range(9)))])
    w = SpinLabel(9, {})
    with pytest.raises(SizeGuardExceeded):
        eval_spin_raw(net, 10, {"w": w}, guard=10**6)
