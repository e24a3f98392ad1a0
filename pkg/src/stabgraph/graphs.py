"""Simple graphs and local complementation.

Vertices are numbered 1..n on every public interface (and in the file
formats); internally they index bit positions 0..n-1. Graphs are immutable:
every transformation returns a new graph.
"""

from __future__ import annotations

from . import gf2
from .errors import ParseError
from .gf2 import BitMatrix


class Graph:
    """Simple undirected graph held as a symmetric, zero-diagonal adjacency matrix."""

    __slots__ = ("n", "adj")

    def __init__(self, adj):
        if not adj.is_square():
            raise ValueError("adjacency matrix must be square")
        if not gf2.is_symmetric(adj):
            raise ValueError("adjacency matrix must be symmetric")
        if gf2.diagonal(adj).bits != 0:
            raise ValueError("adjacency matrix must have zero diagonal (no self-loops)")
        object.__setattr__(self, "n", adj.rows)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def empty(cls, n):
        return cls(BitMatrix.zeros(n, n))

    @classmethod
    def complete(cls, n):
        return cls(gf2.all_ones_offdiag(n))

    @classmethod
    def path(cls, n):
        """The path 1-2-...-n."""
        rows = [0] * n
        for i in range(n - 1):
            rows[i] |= 1 << (i + 1)
            rows[i + 1] |= 1 << i
        return cls(BitMatrix(n, n, rows))

    @classmethod
    def star(cls, n, center=1):
        """All edges from ``center`` to every other vertex."""
        c = _check_vertex(n, center)
        rows = [1 << c if i != c else 0 for i in range(n)]
        rows[c] = ((1 << n) - 1) ^ (1 << c)
        return cls(BitMatrix(n, n, rows))

    @classmethod
    def from_edges(cls, n, edges):
        """Graph on n vertices with the given (i, j) edges, 1-based."""
        rows = [0] * n
        for i, j in edges:
            a, b = _check_vertex(n, i), _check_vertex(n, j)
            if a == b:
                raise ValueError(f"self-loop at vertex {i}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(BitMatrix(n, n, rows))

    def edges(self):
        """Sorted list of (i, j) edge pairs with i < j, 1-based."""
        out = []
        for a in range(self.n):
            bits = self.adj.row_ints[a] >> (a + 1)
            b = a + 1
            while bits:
                if bits & 1:
                    out.append((a + 1, b + 1))
                bits >>= 1
                b += 1
        return out

    def has_edge(self, i, j):
        return bool(self.adj.entry(_check_vertex(self.n, i), _check_vertex(self.n, j)))

    def degree(self, i):
        return self.adj.row(_check_vertex(self.n, i)).weight()

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(n, i):
    """Validate a 1-based vertex id and return its 0-based index."""
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} out of range 1..{n}")
    return i - 1


def neighborhood(g, i):
    """The set of neighbors of vertex i, as 1-based ids."""
    idx = _check_vertex(g.n, i)
    return {b + 1 for b in g.adj.row(idx).support()}


def induced_subgraph(g, vertices):
    """Subgraph on the given vertex set, relabeled 1..k in sorted order."""
    order = sorted(_check_vertex(g.n, v) for v in set(vertices))
    k = len(order)
    rows = [0] * k
    for new_a, old_a in enumerate(order):
        for new_b, old_b in enumerate(order):
            if new_a != new_b and g.adj.entry(old_a, old_b):
                rows[new_a] |= 1 << new_b
    return Graph(BitMatrix(k, k, rows))


def complement(g):
    """Complement graph: every non-edge becomes an edge and vice versa."""
    full = gf2.all_ones_offdiag(g.n)
    rows = [a ^ b for a, b in zip(g.adj.row_ints, full.row_ints)]
    return Graph(BitMatrix(g.n, g.n, rows))


def local_complement(g, i):
    """Complement the induced subgraph on the neighborhood of vertex i.

    Edge-toggling path: for every pair of neighbors j, k of i the edge {j, k}
    is toggled, one row XOR against the neighborhood mask per neighbor. This
    is the performance implementation; :func:`local_complement_matrix_form`
    computes the same map from the closed adjacency-matrix formula and the two
    are kept as permanent cross-checks of each other.
    """
    idx = _check_vertex(g.n, i)
    mask = g.adj.row_ints[idx]
    rows = list(g.adj.row_ints)
    bits = mask
    while bits:
        low = bits & -bits
        j = low.bit_length() - 1
        rows[j] ^= mask & ~low
        bits ^= low
    return Graph(BitMatrix(g.n, g.n, rows))


def local_complement_matrix_form(adj, i):
    """Local complementation as the literal matrix formula.

    Adds to the adjacency matrix the outer product of row i with itself
    (adj . unit_diag_i . adj), then zeroes the diagonal. Input must be a
    symmetric zero-diagonal BitMatrix; returns a BitMatrix of the same shape.
    """
    if not gf2.is_symmetric(adj) or gf2.diagonal(adj).bits != 0:
        raise ValueError("matrix is not a simple-graph adjacency matrix")
    n = adj.rows
    idx = _check_vertex(n, i)
    unit_diag = BitMatrix(n, n, [(1 << idx) if r == idx else 0 for r in range(n)])
    correction = gf2.mat_mul(gf2.mat_mul(adj, unit_diag), adj)
    summed = BitMatrix(n, n, [a ^ b for a, b in zip(adj.row_ints, correction.row_ints)])
    return gf2.set_diagonal_zero(summed)


def format_edge_list(g):
    """Edge-list text: line 1 is "n", then one "i j" line per edge (i < j)."""
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Inverse of :func:`format_edge_list`; '#' comments and blank lines allowed."""
    n = None
    rows = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError("expected vertex count", line=lineno) from None
            if n < 1:
                raise ParseError("vertex count must be >= 1", line=lineno)
            rows = [0] * n
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected an edge 'i j'", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected two vertex ids", line=lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex out of range 1..{n}", line=lineno)
        if i >= j:
            raise ParseError("edges must be written with i < j", line=lineno)
        if rows[i - 1] >> (j - 1) & 1:
            raise ParseError(f"duplicate edge {i} {j}", line=lineno)
        rows[i - 1] |= 1 << (j - 1)
        rows[j - 1] |= 1 << (i - 1)
    if n is None:
        raise ParseError("empty graph file", line=1)
    return Graph(BitMatrix(n, n, rows))


def to_dot(g):
    """Undirected DOT text with vertices labeled 1..n."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(1, g.n + 1))
    lines.extend(f"  {i} -- {j};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
