"""Principal-graph path algebras, Perron trace vectors, and ADE obstructions.

A principal graph is a connected bipartite rooted graph; the k-th algebra in
its tower has as basis the loops of length 2k at the root, multiplied by
half-overlap concatenation.  Parallel edges are carried as labelled copies so
walks distinguish them.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .coeff import chebyshev_T


class PrincipalGraph:
    """Undirected multigraph with a root; bipartite by distance parity."""

    __slots__ = ("n", "root", "edges", "adj", "dist")

    def __init__(self, n: int, edges, root: int = 0):
        """edges: iterable of (u, v, multiplicity)."""
        self.n = n
        self.root = root
        self.edges = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v, *rest in edges:
            mult = rest[0] if rest else 1
            for copy in range(mult):
                eid = len(self.edges)
                self.edges.append((u, v))
                adj[u].append((v, eid))
                adj[v].append((u, eid))
        self.adj = adj
        # BFS distances from the root
        dist = [-1] * n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v, _ in self.adj[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        if any(d < 0 for d in dist):
            raise ValueError("graph is not connected")
        self.dist = dist
        for u, v in self.edges:
            if dist[u] % 2 == dist[v] % 2:
                raise ValueError("graph is not bipartite by distance parity")

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] += 1
            a[v, u] += 1
        return a


class Walk:
    """A loop at the root: vertex sequence plus chosen edge ids."""

    __slots__ = ("vertices", "edge_ids")

    def __init__(self, vertices, edge_ids):
        self.vertices = tuple(vertices)
        self.edge_ids = tuple(edge_ids)

    def __eq__(self, other):
        return (
            isinstance(other, Walk)
            and other.vertices == self.vertices
            and other.edge_ids == self.edge_ids
        )

    def __hash__(self):
        return hash((self.vertices, self.edge_ids))

    def __repr__(self):
        return f"Walk({list(self.vertices)})"


def walk_basis(g: PrincipalGraph, k: int) -> list[Walk]:
    """All loops of length 2k at the root, lexicographic in (vertices, edges)."""
    out = []

    def rec(v, verts, eids):
        if len(eids) == 2 * k:
            if v == g.root:
                out.append(Walk(verts, eids))
            return
        for w, eid in sorted(g.adj[v]):
            rec(w, verts + [w], eids + [eid])

    rec(g.root, [g.root], [])
    out.sort(key=lambda w: (w.vertices, w.edge_ids))
    return out


def walk_multiply(w1: Walk, w2: Walk):
    """Concatenate when the first half of w2 equals the second half of w1."""
    if len(w1.vertices) != len(w2.vertices):
        raise ValueError("length mismatch")
    k2 = len(w1.edge_ids)
    k = k2 // 2
    if w1.vertices[k:] != w2.vertices[: k + 1] or w1.edge_ids[k:] != w2.edge_ids[:k]:
        return None
    return Walk(
        w1.vertices[: k + 1] + w2.vertices[k + 1 :],
        w1.edge_ids[:k] + w2.edge_ids[k:],
    )


def loop_count(g: PrincipalGraph, k: int) -> int:
    """(A^{2k})_{root,root} via integer matrix powers."""
    a = np.array(g.adjacency(), dtype=object)
    m = np.identity(g.n, dtype=object)
    for _ in range(2 * k):
        m = m @ a
    return int(m[g.root, g.root])


class TraceVector:
    __slots__ = ("values", "eigenvalue")

    def __init__(self, values, eigenvalue):
        self.values = list(values)
        self.eigenvalue = float(eigenvalue)


def perron_trace(g: PrincipalGraph, delta: float | None = None, tol: float = 1e-12, max_iter: int = 10**6) -> TraceVector:
    """Positive eigenvector with t_root = 1; power iteration from all-ones."""
    a = g.adjacency()
    b = a + np.eye(g.n)  # shift: bipartite adjacency alone oscillates
    v = np.ones(g.n)
    lam = 0.0
    for _ in range(max_iter):
        w = b @ v
        w = w / float(np.linalg.norm(w))
        lam_new = float(w @ (a @ w)) / float(w @ w)
        if np.linalg.norm(a @ w - lam_new * w, ord=np.inf) < tol:
            v, lam = w, lam_new
            break
        v = w
    else:
        raise RuntimeError("power iteration did not converge")
    if delta is not None:
        lam = float(delta)
    v = v / v[g.root]
    return TraceVector(v.tolist(), lam)


# ---------------------------------------------------------------------------
# rooted trees from run-length constrained words


class TreeSpec:
    """Symbols p with edge multiplicities n_p, weights tau_p, run limits."""

    __slots__ = ("symbols", "n", "tau", "lam")

    def __init__(self, symbols, n, tau, lam):
        if not symbols:
            raise ValueError("empty spec")
        self.symbols = list(symbols)
        self.n = dict(n)
        self.tau = dict(tau)
        self.lam = dict(lam)  # positive int or math.inf


def _run_ok(word, sym, lam) -> bool:
    run = 0
    for s in reversed(word):
        if s == sym:
            run += 1
        else:
            break
    return run + 1 <= lam


def build_tree(spec: TreeSpec, depth: int) -> tuple[PrincipalGraph, list[tuple]]:
    """Tree of admissible words up to the depth; returns (graph, word list).

    Vertex i is word_list[i]; n_p parallel edges join w and wp.
    """
    words = [()]
    index = {(): 0}
    edges = []
    frontier = [()]
    for _ in range(depth):
        nxt = []
        for w in frontier:
            for s in spec.symbols:
                if not _run_ok(w, s, spec.lam[s]):
                    continue
                w2 = w + (s,)
                index[w2] = len(words)
                words.append(w2)
                edges.append((index[w], index[w2], spec.n[s]))
                nxt.append(w2)
        frontier = nxt
    return PrincipalGraph(len(words), edges, root=0), words


def word_trace(word, delta, tau_map):
    """Normalized trace of the minimal idempotent for a reduced run word.

    For runs (p_i, m_i) the value is the Chebyshev product
    prod_i tau_{p_i}^{m_i} * T_{m_i+1}(1/(tau_{p_i} delta)^2),
    which agrees with the diagram-closure trace of the corresponding
    string-labelled idempotent.
    """
    for (p1, _), (p2, _) in zip(word, word[1:]):
        if p1 == p2:
            raise ValueError("word must be reduced")
    exact = isinstance(delta, (int, Fraction)) and all(
        isinstance(tau_map[p], (int, Fraction)) for p, _ in word
    )
    total = Fraction(1) if exact else complex(1)
    for p, m in word:
        tau = tau_map[p]
        if exact:
            x = Fraction(1) / (Fraction(tau) * Fraction(delta)) ** 2
            total *= Fraction(tau) ** m * chebyshev_T(m + 1, x)
        else:
            x = 1.0 / complex(tau * delta) ** 2
            total *= complex(tau) ** m * chebyshev_T(m + 1, x)
    return total


# ---------------------------------------------------------------------------
# annular obstruction: bordered tridiagonal determinant and ADE chirality


def delta_matrix(n: int, delta: float, omega: complex) -> np.ndarray:
    if n < 3:
        raise ValueError("n must be >= 3")
    m = np.zeros((n, n), dtype=complex)
    for i in range(n):
        m[i, i] = delta
    for i in range(n - 1):
        m[i, i + 1] = 1
        m[i + 1, i] = 1
    m[0, n - 1] += omega
    m[n - 1, 0] += np.conj(omega)
    return m


def delta_matrix_det(n: int, delta: float, omega: complex) -> float:
    """det of the omega-bordered tridiagonal matrix, by LU elimination.

    The value is real since the matrix is Hermitian.
    """
    m = delta_matrix(n, delta, omega)
    det = complex(1)
    a = m.copy()
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r, col]))
        if abs(a[piv, col]) == 0:
            return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        det *= a[col, col]
        a[col + 1 :] -= np.outer(a[col + 1 :, col] / a[col, col], a[col])
    return float(det.real)


_ADE_DATA = {
    # family -> (critical depth k, Coxeter number kappa) rules
    "E6": (3, 12),
    "E7": (4, 18),
    "E8": (5, 30),
}


def ade_admissibility(family: str, n: int | None = None) -> dict:
    """Chirality obstruction for a Coxeter-Dynkin principal graph.

    Solves 2cos((2k+2)pi/kappa) = omega + conj(omega) over the k-th roots of
    unity, k the critical depth.  A-series graphs carry no excess over the
    diagram subalgebra, so no obstruction applies.
    """
    family = family.upper()
    if family == "A":
        if n is None or n < 2:
            raise ValueError("A_n needs n >= 2")
        return {
            "family": f"A{n}",
            "admissible": True,
            "chirality": None,
            "note": "no excess over the diagram subalgebra; no obstruction",
        }
    if family == "D":
        if n is None or n < 4:
            raise ValueError("D_n needs n >= 4")
        k, kappa = n - 2, 2 * n - 2
        name = f"D{n}"
    elif family in _ADE_DATA:
        k, kappa = _ADE_DATA[family]
        name = family
    else:
        raise ValueError(f"unsupported family {family!r}")
    target = 2 * math.cos((2 * k + 2) * math.pi / kappa)
    tol = 1e-9
    solutions = []
    for j in range(k):
        omega = cmath.exp(2j * math.pi * j / k)
        if abs(2 * omega.real - target) < tol:
            solutions.append(omega)
    return {
        "family": name,
        "critical_depth": k,
        "coxeter_number": kappa,
        "admissible": bool(solutions),
        "chirality": solutions or None,
    }


def ade_graph(family: str, n: int | None = None) -> PrincipalGraph:
    """Coxeter-Dynkin graph with the root at the end of the long tail."""
    family = family.upper()
    if family == "A":
        return PrincipalGraph(n, [(i, i + 1) for i in range(n - 1)], root=0)
    if family == "D":
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return PrincipalGraph(n, edges, root=0)
    if family in ("E6", "E7", "E8"):
        size = int(family[1])
        # tail 0-1-...-(size-2), branch vertex at index 2 from the far end
        tail = [(i, i + 1) for i in range(size - 2)]
        branch = (size - 4, size - 1)
        return PrincipalGraph(size, tail + [branch], root=0)
    raise ValueError(f"unsupported family {family!r}")
