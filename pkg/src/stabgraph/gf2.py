"""Exact bit-packed linear algebra over GF(2).

Vectors and matrix rows are packed into Python integers: bit ``k`` of the
integer is coordinate ``k``, so a row XOR is a single arbitrary-precision
integer XOR (CPython stores the integer as an array of machine words, which
makes any width fast; widths up to one word are a single-word operation).

All values are immutable and hashable; every operation returns a new value.
"""

from __future__ import annotations

from .errors import ParseError


class SingularError(Exception):
    """Raised when a matrix that must be invertible has rank below its size."""


class BitVec:
    """Immutable vector over GF(2), packed into one integer.

    Bits at positions >= ``n`` are guaranteed zero in storage.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n, bits=0):
        if n < 0:
            raise ValueError("length must be >= 0")
        if bits < 0 or bits >> n:
            raise ValueError("bits set beyond vector length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BitVec is immutable")

    @classmethod
    def from_bits(cls, bits):
        """Build from an iterable of 0/1 values, coordinate 0 first."""
        acc = 0
        count = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")
            acc |= b << count
            count += 1
        return cls(count, acc)

    @classmethod
    def zeros(cls, n):
        return cls(n, 0)

    @classmethod
    def ones(cls, n):
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n, i):
        """Standard basis vector with a single 1 at coordinate ``i`` (0-based)."""
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range for length {n}")
        return cls(n, 1 << i)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other):
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVec(self.n, self.bits ^ other.bits)

    def __and__(self, other):
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVec(self.n, self.bits & other.bits)

    def with_bit(self, i, value):
        if not 0 <= i < self.n:
            raise IndexError(i)
        if value:
            return BitVec(self.n, self.bits | (1 << i))
        return BitVec(self.n, self.bits & ~(1 << i))

    def dot(self, other):
        """Inner product over GF(2): parity of the AND."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self):
        return self.bits.bit_count()

    def support(self):
        """Sorted 0-based indices of the nonzero coordinates."""
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def to01(self):
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __eq__(self, other):
        return (
            isinstance(other, BitVec) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.n, self.bits))

    def __repr__(self):
        return f"BitVec({self.to01()!r})"


class BitMatrix:
    """Immutable dense matrix over GF(2); each row is one packed integer."""

    __slots__ = ("rows", "cols", "row_ints")

    def __init__(self, rows, cols, row_ints):
        if rows < 0 or cols < 0:
            raise ValueError("dimensions must be >= 0")
        row_ints = tuple(row_ints)
        if len(row_ints) != rows:
            raise ValueError(f"expected {rows} rows, got {len(row_ints)}")
        for r in row_ints:
            if r < 0 or r >> cols:
                raise ValueError("row bits set beyond column count")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "row_ints", row_ints)

    def __setattr__(self, name, value):
        raise AttributeError("BitMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * rows)

    @classmethod
    def from_rows(cls, rows_of_bits, cols=None):
        """Build from an iterable of rows, each an iterable of 0/1 values."""
        ints = []
        width = cols
        for row in rows_of_bits:
            v = BitVec.from_bits(row)
            if width is None:
                width = v.n
            elif v.n != width:
                raise ValueError("ragged rows")
            ints.append(v.bits)
        if width is None:
            width = 0
        return cls(len(ints), width, ints)

    @classmethod
    def from_bitvecs(cls, vecs):
        vecs = list(vecs)
        if not vecs:
            return cls(0, 0, [])
        width = vecs[0].n
        if any(v.n != width for v in vecs):
            raise ValueError("ragged rows")
        return cls(len(vecs), width, [v.bits for v in vecs])

    def row(self, i):
        return BitVec(self.cols, self.row_ints[i])

    def entry(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_ints[i] >> j) & 1

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(r == 0 for r in self.row_ints)

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.row_ints == other.row_ints
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.row_ints))

    def __repr__(self):
        body = ",".join(BitVec(self.cols, r).to01() for r in self.row_ints)
        return f"BitMatrix({self.rows}x{self.cols}:[{body}])"


class SymplecticForm:
    """The fixed symplectic form on 2n-bit vectors: [[0, I], [I, 0]] in block form.

    Held implicitly; the inner product pairs the low n bits of one vector with
    the high n bits of the other. Materialize with :meth:`matrix` only when a
    dense product is genuinely needed.
    """

    __slots__ = ("n",)

    def __init__(self, n):
        if n < 0:
            raise ValueError("n must be >= 0")
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticForm is immutable")

    def product(self, u, v):
        """Symplectic inner product of two 2n-bit vectors; 0 means commuting."""
        n = self.n
        if u.n != 2 * n or v.n != 2 * n:
            raise ValueError("vectors must have length 2n")
        mask = (1 << n) - 1
        uz, ux = u.bits & mask, u.bits >> n
        vz, vx = v.bits & mask, v.bits >> n
        return ((uz & vx).bit_count() + (ux & vz).bit_count()) & 1

    def matrix(self):
        n = self.n
        rows = [1 << (n + i) for i in range(n)] + [1 << i for i in range(n)]
        return BitMatrix(2 * n, 2 * n, rows)


def identity(n):
    return BitMatrix(n, n, [1 << i for i in range(n)])


def all_ones_offdiag(n):
    """The n x n matrix of all ones except a zero diagonal (complete-graph adjacency)."""
    full = (1 << n) - 1
    return BitMatrix(n, n, [full ^ (1 << i) for i in range(n)])


def mat_mul(a, b):
    """Exact GF(2) product a.b.

    Row i of the result is the XOR of the rows of ``b`` selected by the set
    bits of row i of ``a``.
    """
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.cols} columns vs {b.rows} rows")
    brows = b.row_ints
    out = []
    for ra in a.row_ints:
        acc = 0
        bits = ra
        while bits:
            low = bits & -bits
            acc ^= brows[low.bit_length() - 1]
            bits ^= low
        out.append(acc)
    return BitMatrix(a.rows, b.cols, out)


def mat_vec(m, v):
    """Matrix-vector product m.v over GF(2)."""
    if m.cols != v.n:
        raise ValueError("dimension mismatch")
    acc = 0
    for i, row in enumerate(m.row_ints):
        acc |= ((row & v.bits).bit_count() & 1) << i
    return BitVec(m.rows, acc)


def transpose(m):
    out = [0] * m.cols
    for i, row in enumerate(m.row_ints):
        bits = row
        while bits:
            low = bits & -bits
            out[low.bit_length() - 1] |= 1 << i
            bits ^= low
    return BitMatrix(m.cols, m.rows, out)


def column(m, j):
    if not 0 <= j < m.cols:
        raise IndexError(j)
    acc = 0
    for i, row in enumerate(m.row_ints):
        acc |= ((row >> j) & 1) << i
    return BitVec(m.rows, acc)


def diagonal(m):
    if not m.is_square():
        raise ValueError("diagonal of a non-square matrix")
    acc = 0
    for i, row in enumerate(m.row_ints):
        acc |= ((row >> i) & 1) << i
    return BitVec(m.rows, acc)


def set_diagonal_zero(m):
    if not m.is_square():
        raise ValueError("diagonal of a non-square matrix")
    return BitMatrix(m.rows, m.cols, [row & ~(1 << i) for i, row in enumerate(m.row_ints)])


def is_symmetric(m):
    return m.is_square() and m == transpose(m)


def diag_from_vec(v):
    """Diagonal matrix with the coordinates of ``v`` on the diagonal."""
    return BitMatrix(v.n, v.n, [((v.bits >> i) & 1) << i for i in range(v.n)])


def hstack(a, b):
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    rows = [ra | (rb << a.cols) for ra, rb in zip(a.row_ints, b.row_ints)]
    return BitMatrix(a.rows, a.cols + b.cols, rows)


def vstack(a, b):
    if a.cols != b.cols:
        raise ValueError("column count mismatch")
    return BitMatrix(a.rows + b.rows, a.cols, a.row_ints + b.row_ints)


def rank(m):
    """GF(2) row rank, by elimination on a scratch copy."""
    rows = list(m.row_ints)
    r = 0
    for col in range(m.cols):
        pivot = None
        for i in range(r, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        r += 1
        if r == len(rows):
            break
    return r


def try_invert(m):
    """Inverse of a square matrix, or None when singular.

    Gauss-Jordan elimination; the pivot for each column is always the
    lowest-index remaining row with a 1 there, so the computation is
    deterministic.
    """
    if not m.is_square():
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    work = list(m.row_ints)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for i in range(n):
            if i != col and (work[i] >> col) & 1:
                work[i] ^= work[col]
                inv[i] ^= inv[col]
    return BitMatrix(n, n, inv)


def invert(m):
    """Inverse of a square matrix; raises SingularError when rank < n."""
    inv = try_invert(m)
    if inv is None:
        raise SingularError(f"{m.rows}x{m.cols} matrix is singular")
    return inv


def is_invertible(m):
    return m.is_square() and try_invert(m) is not None


def reduced_echelon(m):
    """Reduced row-echelon form and its pivot columns (sorted)."""
    rows = list(m.row_ints)
    pivots = []
    r = 0
    for col in range(m.cols):
        pivot = None
        for i in range(r, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return BitMatrix(m.rows, m.cols, rows), pivots


def solve_homogeneous(m):
    """Basis of the null space {x : m.x = 0}, in reduced echelon order.

    One basis vector per free column, ordered by ascending free-column index;
    each has a 1 at its free column and the matching echelon entries at the
    pivot columns. Deterministic.
    """
    rref, pivots = reduced_echelon(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for r, pcol in enumerate(pivots):
            if (rref.row_ints[r] >> free) & 1:
                bits |= 1 << pcol
        basis.append(BitVec(m.cols, bits))
    return basis


def format_matrix(m):
    """Text form: first line "rows cols", then one '0'/'1' line per row."""
    lines = [f"{m.rows} {m.cols}"]
    for r in m.row_ints:
        lines.append(BitVec(m.cols, r).to01())
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Inverse of :func:`format_matrix`; raises ParseError with line info."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty matrix text", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("expected header 'rows cols'", line=1)
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("expected two integers in header", line=1) from None
    if rows < 0 or cols < 0:
        raise ParseError("dimensions must be >= 0", line=1)
    if len(lines) - 1 < rows:
        raise ParseError(f"expected {rows} data rows, found {len(lines) - 1}", line=len(lines))
    ints = []
    for i in range(rows):
        line = lines[1 + i].strip()
        if len(line) != cols:
            raise ParseError(f"expected {cols} bits, found {len(line)}", line=2 + i)
        acc = 0
        for j, ch in enumerate(line):
            if ch == "1":
                acc |= 1 << j
            elif ch != "0":
                raise ParseError(f"invalid character {ch!r}", line=2 + i, column=j + 1)
        ints.append(acc)
    for extra in range(1 + rows, len(lines)):
        if lines[extra].strip():
            raise ParseError("trailing content after matrix rows", line=extra + 1)
    return BitMatrix(rows, cols, ints)
