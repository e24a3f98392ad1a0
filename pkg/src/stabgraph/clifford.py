"""Local Clifford operations in the binary symplectic picture.

A local Clifford operation is a 2n x 2n symplectic matrix whose four n x n
blocks are diagonal; only the four diagonals are stored, as n-bit vectors
(a, b, c, d). Per qubit i the 2x2 matrix [[a_i, b_i], [c_i, d_i]] must be
invertible, i.e. a_i d_i + b_i c_i = 1, which is equivalent to the assembled
matrix preserving the symplectic form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2, graphs
from .errors import InternalError, ParseError
from .gf2 import BitMatrix, BitVec


class InvalidCliffordError(ValueError):
    """The four diagonals fail per-qubit invertibility."""


class LocalCliffordOp:
    """Four block diagonals (a, b, c, d), one bit of each per qubit."""

    __slots__ = ("n", "a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        n = a.n
        if not (b.n == n and c.n == n and d.n == n):
            raise ValueError("diagonal lengths differ")
        ones = (1 << n) - 1
        if ((a.bits & d.bits) ^ (b.bits & c.bits)) != ones:
            bad = [
                i + 1
                for i in range(n)
                if ((a.bits >> i) & (d.bits >> i) ^ (b.bits >> i) & (c.bits >> i)) & 1 == 0
            ]
            raise InvalidCliffordError(f"qubit blocks not invertible at {bad}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("LocalCliffordOp is immutable")

    @classmethod
    def identity(cls, n):
        return cls(BitVec.ones(n), BitVec.zeros(n), BitVec.zeros(n), BitVec.ones(n))

    @classmethod
    def hadamard_all(cls, n):
        """The Z/X swap [[0, 1], [1, 0]] on every qubit."""
        return cls(BitVec.zeros(n), BitVec.ones(n), BitVec.ones(n), BitVec.zeros(n))

    @classmethod
    def from_qubit_blocks(cls, blocks):
        """Build from an iterable of per-qubit (a, b, c, d) bit tuples."""
        blocks = list(blocks)
        a = BitVec.from_bits(bl[0] for bl in blocks)
        b = BitVec.from_bits(bl[1] for bl in blocks)
        c = BitVec.from_bits(bl[2] for bl in blocks)
        d = BitVec.from_bits(bl[3] for bl in blocks)
        return cls(a, b, c, d)

    def qubit_block(self, i):
        """The 2x2 block acting on qubit i (1-based) as an (a, b, c, d) tuple."""
        idx = graphs._check_vertex(self.n, i)
        return (
            (self.a.bits >> idx) & 1,
            (self.b.bits >> idx) & 1,
            (self.c.bits >> idx) & 1,
            (self.d.bits >> idx) & 1,
        )

    def assemble(self):
        """Materialize the full 2n x 2n matrix (debug / cross-check only)."""
        n = self.n
        rows = []
        for i in range(n):
            rows.append((((self.a.bits >> i) & 1) << i) | (((self.b.bits >> i) & 1) << (n + i)))
        for i in range(n):
            rows.append((((self.c.bits >> i) & 1) << i) | (((self.d.bits >> i) & 1) << (n + i)))
        return BitMatrix(2 * n, 2 * n, rows)

    def __eq__(self, other):
        return (
            isinstance(other, LocalCliffordOp)
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return (
            f"LocalCliffordOp(a={self.a.to01()}, b={self.b.to01()}, "
            f"c={self.c.to01()}, d={self.d.to01()})"
        )


@dataclass(frozen=True)
class GraphDomainReport:
    """Outcome of acting on a graph: both conditions must hold for an image.

    ``invertible_cd`` is the nonsingularity of C.adj + D; ``zero_diagonal``
    is the zero-diagonal condition on the transformed matrix. ``image`` is
    present exactly when both hold.
    """

    invertible_cd: bool
    zero_diagonal: bool
    image: graphs.Graph | None = None

    def in_domain(self):
        return self.image is not None


def compose(q2, q1):
    """Group product: q1 applied first, then q2 (right-to-left operator order)."""
    if q2.n != q1.n:
        raise ValueError("qubit count mismatch")
    a = (q2.a.bits & q1.a.bits) ^ (q2.b.bits & q1.c.bits)
    b = (q2.a.bits & q1.b.bits) ^ (q2.b.bits & q1.d.bits)
    c = (q2.c.bits & q1.a.bits) ^ (q2.d.bits & q1.c.bits)
    d = (q2.c.bits & q1.b.bits) ^ (q2.d.bits & q1.d.bits)
    n = q1.n
    return LocalCliffordOp(BitVec(n, a), BitVec(n, b), BitVec(n, c), BitVec(n, d))


def inverse(q):
    """Per-qubit 2x2 inverse: over GF(2), [[a, b], [c, d]]^-1 = [[d, b], [c, a]]."""
    return LocalCliffordOp(q.d, q.b, q.c, q.a)


def apply_to_stabilizer(q, stab):
    """Left-multiply a generator matrix by the operation; returns the raw 2n x n matrix.

    Z-row i of the result is a_i * Z_i + b_i * X_i, X-row i is
    c_i * Z_i + d_i * X_i. The result always spans a valid stabilizer
    subspace but is returned unwrapped because callers typically keep
    transforming it.
    """
    n = stab.n
    if q.n != n:
        raise ValueError("qubit count mismatch")
    return apply_to_rows(q, stab.s)


def apply_to_rows(q, m):
    """Row-level action on a raw 2n x m matrix (Z rows on top, X rows below)."""
    n = q.n
    if m.rows != 2 * n:
        raise ValueError("matrix must have 2n rows")
    zrows = m.row_ints[:n]
    xrows = m.row_ints[n:]
    out_z = []
    out_x = []
    for i in range(n):
        abit = (q.a.bits >> i) & 1
        bbit = (q.b.bits >> i) & 1
        cbit = (q.c.bits >> i) & 1
        dbit = (q.d.bits >> i) & 1
        out_z.append((zrows[i] if abit else 0) ^ (xrows[i] if bbit else 0))
        out_x.append((zrows[i] if cbit else 0) ^ (xrows[i] if dbit else 0))
    return BitMatrix(2 * n, m.cols, out_z + out_x)


def cd_matrix(adj, c, d):
    """diag(c) . adj + diag(d): row i is c_i * adj_i + d_i * e_i."""
    n = adj.rows
    rows = []
    for i in range(n):
        row = adj.row_ints[i] if (c.bits >> i) & 1 else 0
        if (d.bits >> i) & 1:
            row ^= 1 << i
        rows.append(row)
    return BitMatrix(n, n, rows)


def graph_action(q, g):
    """Act on a graph; returns a GraphDomainReport rather than raising.

    The image adjacency is (A.adj + B)(C.adj + D)^-1 when C.adj + D is
    invertible; the graph is in the domain when additionally that matrix has
    zero diagonal. Symmetry of the image is guaranteed by the symplectic
    structure and is asserted, not imposed.
    """
    if q.n != g.n:
        raise ValueError("qubit count mismatch")
    denom = cd_matrix(g.adj, q.c, q.d)
    denom_inv = gf2.try_invert(denom)
    if denom_inv is None:
        return GraphDomainReport(invertible_cd=False, zero_diagonal=False)
    numer = cd_matrix(g.adj, q.a, q.b)
    image = gf2.mat_mul(numer, denom_inv)
    if gf2.diagonal(image).bits != 0:
        return GraphDomainReport(invertible_cd=True, zero_diagonal=False)
    if not gf2.is_symmetric(image):
        raise InternalError("graph action produced an asymmetric adjacency matrix")
    return GraphDomainReport(invertible_cd=True, zero_diagonal=True, image=graphs.Graph(image))


def local_complement_op(g, i):
    """The local Clifford operation whose graph action is local complementation at i.

    Blocks: A = I, B = diag(row i of the adjacency), C = the single-entry
    diagonal at i, D = I. Every graph is in its domain, and the action equals
    :func:`graphs.local_complement` at the same vertex.
    """
    idx = graphs._check_vertex(g.n, i)
    n = g.n
    return LocalCliffordOp(
        BitVec.ones(n),
        BitVec(n, g.adj.row_ints[idx]),
        BitVec(n, 1 << idx),
        BitVec.ones(n),
    )


def complete_from_cd(g, c, d):
    """The unique operation with lower diagonals (c, d) that keeps g in-domain.

    Requires C.adj + D invertible. Per qubit there are exactly two (a_i, b_i)
    choices keeping the 2x2 block invertible, and they differ by (c_i, d_i);
    switching between them flips diagonal entry i of the image, so exactly one
    choice yields the required zero diagonal. The first valid candidate in the
    order (0,1) < (1,0) < (1,1) is tried and flipped when its diagonal entry
    is 1; uniqueness makes the order irrelevant to the result.
    """
    if c.n != g.n or d.n != g.n:
        raise ValueError("diagonal length mismatch")
    n = g.n
    denom = cd_matrix(g.adj, c, d)
    denom_inv = gf2.try_invert(denom)
    if denom_inv is None:
        raise gf2.SingularError("lower blocks do not give an invertible denominator")
    inv_cols = [gf2.column(denom_inv, i) for i in range(n)]
    abits = 0
    bbits = 0
    for i in range(n):
        ci = (c.bits >> i) & 1
        di = (d.bits >> i) & 1
        ai, bi = next(
            (cand_a, cand_b)
            for cand_a, cand_b in ((0, 1), (1, 0), (1, 1))
            if (cand_a & di) ^ (cand_b & ci)
        )
        row = (g.adj.row_ints[i] if ai else 0) ^ ((1 << i) if bi else 0)
        if (row & inv_cols[i].bits).bit_count() & 1:
            ai ^= ci
            bi ^= di
        abits |= ai << i
        bbits |= bi << i
    q = LocalCliffordOp(BitVec(n, abits), BitVec(n, bbits), c, d)
    report = graph_action(q, g)
    if not report.in_domain():
        raise InternalError("completion failed to place the graph in the domain")
    return q


def format_clifford(q):
    """Text form: line 1 is "n", then one "a b c d" bit line per qubit."""
    lines = [str(q.n)]
    for i in range(q.n):
        a, b, c, d = q.qubit_block(i + 1)
        lines.append(f"{a} {b} {c} {d}")
    return "\n".join(lines) + "\n"


def parse_clifford(text):
    """Inverse of :func:`format_clifford`; raises ParseError with line info."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("empty clifford file", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError("expected qubit count", line=1) from None
    if n < 1:
        raise ParseError("qubit count must be >= 1", line=1)
    if len(lines) - 1 < n:
        raise ParseError(f"expected {n} qubit lines, found {len(lines) - 1}", line=len(lines))
    blocks = []
    for i in range(n):
        parts = lines[1 + i].split()
        if len(parts) != 4 or any(p not in ("0", "1") for p in parts):
            raise ParseError("expected four bits 'a b c d'", line=2 + i)
        blocks.append(tuple(int(p) for p in parts))
    for extra in range(1 + n, len(lines)):
        if lines[extra].strip():
            raise ParseError("trailing content after qubit lines", line=extra + 1)
    try:
        return LocalCliffordOp.from_qubit_blocks(blocks)
    except InvalidCliffordError as exc:
        raise ParseError(str(exc), line=2) from exc
