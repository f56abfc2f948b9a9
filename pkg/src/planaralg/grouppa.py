"""Group planar algebra dimensions for finite groups via alternating words.

A finite group is carried as a Cayley table; labels map into the group and
dim P_k counts the length-2k label words whose alternating product
g_1 g_2^{-1} g_3 g_4^{-1} ... is the identity.
"""

from __future__ import annotations

import itertools
import random

from .errors import SizeGuardExceeded

DEFAULT_GUARD = 10**7


class FiniteGroup:
    """Cayley-table group: table[g][h] = g*h, with identity and inverses."""

    __slots__ = ("order", "table", "identity", "inverse")

    def __init__(self, table, identity: int | None = None, check: bool = True, seed: int = 0):
        self.order = len(table)
        self.table = [list(row) for row in table]
        if identity is None:
            identity = next(
                g for g in range(self.order)
                if all(self.table[g][h] == h for h in range(self.order))
            )
        self.identity = identity
        inv = [None] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == identity:
                    inv[g] = h
        if any(v is None for v in inv):
            raise ValueError("some element has no inverse")
        self.inverse = inv
        if check:
            self._spot_check(seed)

    def _spot_check(self, seed: int, rounds: int = 64) -> None:
        rng = random.Random(seed)
        n = self.order
        for g in range(n):
            if self.table[self.identity][g] != g or self.table[g][self.identity] != g:
                raise ValueError("identity law fails")
        for _ in range(rounds):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError("associativity spot-check failed")

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(table, 0, check=False)

    @classmethod
    def product(cls, g1: "FiniteGroup", g2: "FiniteGroup") -> "FiniteGroup":
        n1, n2 = g1.order, g2.order

        def pack(a, b):
            return a * n2 + b

        table = [
            [
                pack(g1.mul(a1, b1), g2.mul(a2, b2))
                for b1 in range(n1)
                for b2 in range(n2)
            ]
            for a1 in range(n1)
            for a2 in range(n2)
        ]
        return cls(table, pack(g1.identity, g2.identity), check=False)

    @classmethod
    def elementary_abelian_2(cls, n: int) -> "FiniteGroup":
        """(Z/2)^n via bitwise xor."""
        size = 1 << n
        table = [[a ^ b for b in range(size)] for a in range(size)]
        return cls(table, 0, check=False)

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], 0, check=False)


class LabelMap:
    """Finite label set with an image map into the group."""

    __slots__ = ("group", "image")

    def __init__(self, group: FiniteGroup, image):
        if not image:
            raise ValueError("label set must be nonempty")
        self.group = group
        self.image = list(image)

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def has_identity_label(self) -> bool:
        return self.group.identity in self.image


def alt(labels: LabelMap, word) -> int:
    """Alternating product g_1 g_2^{-1} g_3 g_4^{-1} ... in the group."""
    g = labels.group
    out = g.identity
    for pos, l in enumerate(word):
        x = labels.image[l]
        if pos % 2 == 1:
            x = g.inverse[x]
        out = g.mul(out, x)
    return out


def dim_pk(labels: LabelMap, k: int, guard: int = DEFAULT_GUARD) -> int:
    """Count words in Delta^{2k} with alternating product = identity."""
    d = labels.size
    total = d ** (2 * k)
    if total > guard:
        raise SizeGuardExceeded(f"|Delta|^(2k) = {total} exceeds guard {guard}")
    g = labels.group
    # dynamic programming over prefix products beats raw enumeration
    counts = {g.identity: 1}
    for pos in range(2 * k):
        nxt: dict[int, int] = {}
        for acc, c in counts.items():
            for l in range(d):
                x = labels.image[l]
                if pos % 2 == 1:
                    x = g.inverse[x]
                y = g.mul(acc, x)
                nxt[y] = nxt.get(y, 0) + c
        counts = nxt
    return counts.get(g.identity, 0)


def alt_trivial_words(labels: LabelMap, k: int, guard: int = DEFAULT_GUARD):
    """Explicit list of the alt-trivial words of length 2k (small cases)."""
    d = labels.size
    if d ** (2 * k) > guard:
        raise SizeGuardExceeded("word enumeration too large")
    out = []
    for word in itertools.product(range(d), repeat=2 * k):
        if alt(labels, word) == labels.group.identity:
            out.append(word)
    return out


def rotate_word(word):
    """Shift an even-length word by two positions."""
    if len(word) % 2 != 0:
        raise ValueError("word rotation needs even length")
    word = tuple(word)
    return word[2:] + word[:2]
