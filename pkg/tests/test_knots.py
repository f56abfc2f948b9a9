import itertools
from fractions import Fraction

import pytest

from planaralg.coeff import LaurentPoly
from planaralg.knots import (
    PDLink,
    a4_evaluate,
    a4_unknot,
    a4_weight_3box,
    even_orbit,
    kauffman_bracket,
    kauffman_state_sum,
)
from planaralg.network import ShadedNetwork, eval_spin_raw

DELTA = LaurentPoly("A", {2: Fraction(-1), -2: Fraction(-1)})

UNKNOT = PDLink([], free_loops=1)
UNLINK2 = PDLink([], free_loops=2)
HOPF = PDLink([(1, 3, 2, 4), (3, 1, 4, 2)])
TREFOIL = PDLink([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
FIG8 = PDLink([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
# one-crossing curl of the unknot
CURL = PDLink([(1, 1, 2, 2)])


def braid_closure_pd(word, strands):
    """Trace closure of a positive braid word as a PD code.

    Crossing tuples list the four edges in cyclic order (in-left, in-right,
    out-right, out-left); the converter is the same for every input, so two
    words equal in the braid group give bracket-equal diagrams (RII/RIII).
    """
    label = 0

    def fresh():
        nonlocal label
        label += 1
        return label

    start = [fresh() for _ in range(strands)]
    cur = list(start)
    crossings = []
    for i in word:
        left, right = cur[i], cur[i + 1]
        out_left, out_right = fresh(), fresh()
        crossings.append((left, right, out_right, out_left))
        cur[i], cur[i + 1] = out_left, out_right
    # close the braid: identify final edges with initial ones
    rename = {}
    for p in range(strands):
        if cur[p] != start[p]:
            rename[cur[p]] = start[p]
    closed = [tuple(rename.get(e, e) for e in c) for c in crossings]
    free = sum(1 for p in range(strands) if cur[p] == start[p])
    return PDLink(closed, free_loops=free)


def test_unknot_and_unlink():
    assert kauffman_bracket(UNKNOT) == LaurentPoly.const(1)
    assert kauffman_bracket(UNLINK2) == DELTA


def test_known_bracket_values():
    # frozen from the independent 2^n state enumeration below
    b3 = kauffman_bracket(TREFOIL)
    assert b3 == LaurentPoly("A", {7: Fraction(1), 3: Fraction(-1), -5: Fraction(-1)})
    b4 = kauffman_bracket(FIG8)
    assert b4 == LaurentPoly(
        "A",
        {8: Fraction(1), 4: Fraction(-1), 0: Fraction(1), -4: Fraction(-1), -8: Fraction(1)},
    )
    assert kauffman_bracket(HOPF) == LaurentPoly("A", {4: Fraction(-1), -4: Fraction(-1)})


@pytest.mark.parametrize("link", [UNKNOT, UNLINK2, HOPF, TREFOIL, FIG8, CURL])
def test_bracket_equals_state_sum_oracle(link):
    assert kauffman_bracket(link) == kauffman_state_sum(link)


def test_bracket_reidemeister_ii_invariance():
    # cancelling pair of mirrored crossings on two strands; a mirrored
    # crossing is an odd rotation of the PD tuple
    up = PDLink([(1, 2, 3, 4), (4, 1, 2, 3)])
    assert kauffman_bracket(up) == kauffman_bracket(UNLINK2)
    # same with the pair closed into one component
    rii = PDLink([(1, 4, 2, 3), (2, 4, 3, 1)])
    assert kauffman_bracket(rii) == kauffman_bracket(UNKNOT)


def test_bracket_reidemeister_iii_invariance():
    # braid relation sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 is exactly
    # an RIII move; the trace closures must have equal brackets
    lhs = braid_closure_pd([0, 1, 0], 3)
    rhs = braid_closure_pd([1, 0, 1], 3)
    assert kauffman_bracket(lhs) == kauffman_bracket(rhs)
    # and with extra letters around the move
    lhs = braid_closure_pd([1, 0, 1, 0, 1], 3)
    rhs = braid_closure_pd([1, 1, 0, 1, 1], 3)
    assert kauffman_bracket(lhs) == kauffman_bracket(rhs)
    # RIII on 4 strands with a spectator strand
    lhs4 = braid_closure_pd([0, 1, 0, 2], 4)
    rhs4 = braid_closure_pd([1, 0, 1, 2], 4)
    assert kauffman_bracket(lhs4) == kauffman_bracket(rhs4)


def test_bad_pd_codes_rejected():
    with pytest.raises(ValueError):
        PDLink([(1, 2, 3, 4)])  # labels appear once
    with pytest.raises(ValueError):
        PDLink([(1, 1, 1, 1)])  # label appears four times


# ---------------------------------------------------------------------------


def test_even_orbit_partition():
    orbit = [t for t in itertools.product(range(1, 5), repeat=3) if even_orbit(*t)]
    assert len(orbit) == 12
    # membership example: (1,2,3) with 4 -> 4 is the identity, which is even
    assert even_orbit(1, 2, 3)
    assert not even_orbit(2, 1, 3)  # transposition, odd
    assert not even_orbit(1, 1, 2)


def test_a4_weight_table():
    w = a4_weight_3box()
    assert w((1, 1, 1)) == -1
    assert w((1, 2, 3)) == 1
    assert w((2, 1, 3)) == 0
    assert sum(1 for v in w.table.values() if v == 1) == 12
    assert sum(1 for v in w.table.values() if v == -1) == 4


def test_a4_unknot_value():
    assert a4_evaluate(a4_unknot()) == 2


def test_a4_single_box_closure_against_spin_sum():
    # one 3-box with all three corners on the same black region, closed up:
    # raw value by exhaustive spin sum, normalization from the hints
    net = ShadedNetwork(1, boxes=[("e", (0, 0, 0))], geometry={"n_minus": 1})
    raw = eval_spin_raw(net, 4, {"e": a4_weight_3box()})
    assert raw == sum(a4_weight_3box()((s, s, s)) for s in range(1, 5))
    assert a4_evaluate(net) == Fraction(raw, 2)


def test_a4_rii_inverse_identity():
    # sum_c R(a,j,c) R(b,j,c) = [a = b]: exhaustive 4-index contraction
    w = a4_weight_3box()
    for a in range(1, 5):
        for j in range(1, 5):
            for b in range(1, 5):
                s = sum(w((a, j, c)) * w((b, j, c)) for c in range(1, 5))
                assert s == (1 if a == b else 0)
                # first-slot contraction variant
                s = sum(w((c, j, a)) * w((c, j, b)) for c in range(1, 5))
                assert s == (1 if a == b else 0)
    # operator form in the 4-box algebra: A A* = identity
    A, Astar, ID4, mul4 = _fourbox_ops()
    assert mul4(A, Astar) == ID4


def _fourbox_ops():
    w = a4_weight_3box()
    idxs = list(itertools.product(range(1, 5), repeat=4))

    def as4(fn):
        return {t: fn(*t) for t in idxs}

    A = as4(lambda i1, i2, i3, i4: w((i1, i2, i4)) if i2 == i3 else Fraction(0))
    Astar = as4(lambda i1, i2, i3, i4: w((i4, i2, i1)) if i2 == i3 else Fraction(0))
    ID4 = as4(lambda i1, i2, i3, i4: Fraction(1 if (i1 == i4 and i2 == i3) else 0))

    def mul4(f, g):
        out = {}
        for i1, i2, i3, i4 in idxs:
            s = Fraction(0)
            for a in range(1, 5):
                for b in range(1, 5):
                    s += f[(i1, i2, b, a)] * g[(a, b, i3, i4)]
            out[(i1, i2, i3, i4)] = s
        return out

    return A, Astar, ID4, mul4


def test_a4_yang_baxter_braid_relation():
    # 6-index tensor identity: with A the crossing box on the first three
    # slots and B its shading-flipped partner on the last three (mirror slot
    # order), ABA = BAB as exact rational contractions over 4 spins
    w = a4_weight_3box()
    A, _, _, mul4 = _fourbox_ops()
    idxs = list(itertools.product(range(1, 5), repeat=4))
    B = {
        (i1, i2, i3, i4): (w((i1, i3, i2)) if i1 == i4 else Fraction(0))
        for i1, i2, i3, i4 in idxs
    }
    lhs = mul4(mul4(A, B), A)
    rhs = mul4(mul4(B, A), B)
    assert lhs == rhs
