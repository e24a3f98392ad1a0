"""Binary representation of Pauli operators and stabilizer generator matrices.

A generator matrix is a full-rank 2n x n matrix over GF(2) whose columns
encode n independent, pairwise commuting Pauli operators: the top n rows hold
the Z bits, the bottom n rows the X bits. Overall phases are not tracked at
all in this representation; the dense oracle compensates by checking
stabilization only up to per-generator signs.
"""

from __future__ import annotations

import random

from . import gf2
from .errors import ParseError
from .gf2 import BitMatrix, BitVec, SymplecticForm


class StabilizerError(ValueError):
    """Base class for invalid stabilizer constructions."""


class NotCommutingError(StabilizerError):
    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(f"generators {i} and {j} anticommute")


class NotIndependentError(StabilizerError):
    def __init__(self):
        super().__init__("generators are linearly dependent")


class WrongCountError(StabilizerError):
    def __init__(self, n, count):
        super().__init__(f"need exactly {n} generators on {n} qubits, got {count}")


_PAULI_TO_ZX = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_ZX_TO_PAULI = {v: k for k, v in _PAULI_TO_ZX.items()}


class PauliString:
    """Phase-free n-qubit Pauli operator as a pair of n-bit vectors (z, x)."""

    __slots__ = ("n", "z", "x")

    def __init__(self, z, x):
        if z.n != x.n:
            raise ValueError("z and x parts must have equal length")
        object.__setattr__(self, "n", z.n)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", x)

    def __setattr__(self, name, value):
        raise AttributeError("PauliString is immutable")

    @classmethod
    def from_text(cls, text):
        """Parse a string over {I, X, Y, Z}; a leading '+' or '-' is ignored."""
        body = text.strip()
        if body[:1] in ("+", "-"):
            body = body[1:]
        zbits = 0
        xbits = 0
        for i, ch in enumerate(body):
            try:
                zb, xb = _PAULI_TO_ZX[ch]
            except KeyError:
                raise ParseError(f"invalid Pauli letter {ch!r}", column=i + 1) from None
            zbits |= zb << i
            xbits |= xb << i
        n = len(body)
        return cls(BitVec(n, zbits), BitVec(n, xbits))

    def to_text(self):
        return "".join(
            _ZX_TO_PAULI[((self.z.bits >> i) & 1, (self.x.bits >> i) & 1)]
            for i in range(self.n)
        )

    def commutes_with(self, other):
        """True iff the symplectic inner product of the encodings is zero."""
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return (self.z.dot(other.x) ^ self.x.dot(other.z)) == 0

    def __eq__(self, other):
        return isinstance(other, PauliString) and self.z == other.z and self.x == other.x

    def __hash__(self):
        return hash((self.z, self.x))

    def __repr__(self):
        return f"PauliString({self.to_text()!r})"


class StabilizerGenMatrix:
    """Validated 2n x n generator matrix: full rank and symplectically self-orthogonal."""

    __slots__ = ("n", "s")

    def __init__(self, s):
        if s.rows % 2 != 0 or s.cols * 2 != s.rows:
            raise StabilizerError(f"expected a 2n x n matrix, got {s.rows} x {s.cols}")
        n = s.cols
        if gf2.rank(s) != n:
            raise NotIndependentError()
        form = SymplecticForm(n)
        cols = [gf2.column(s, j) for j in range(n)]
        for i in range(n):
            for j in range(i, n):
                if form.product(cols[i], cols[j]) != 0:
                    raise NotCommutingError(i + 1, j + 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("StabilizerGenMatrix is immutable")

    def z_block(self):
        return BitMatrix(self.n, self.n, self.s.row_ints[: self.n])

    def x_block(self):
        return BitMatrix(self.n, self.n, self.s.row_ints[self.n :])

    def generator(self, j):
        """Column j (0-based) as a PauliString."""
        col = gf2.column(self.s, j)
        mask = (1 << self.n) - 1
        return PauliString(BitVec(self.n, col.bits & mask), BitVec(self.n, col.bits >> self.n))

    def to_pauli_strings(self):
        return [self.generator(j) for j in range(self.n)]

    def __eq__(self, other):
        return isinstance(other, StabilizerGenMatrix) and self.s == other.s

    def __hash__(self):
        return hash(self.s)

    def __repr__(self):
        return f"StabilizerGenMatrix({[p.to_text() for p in self.to_pauli_strings()]})"


def from_pauli_strings(paulis):
    """Assemble a generator matrix with column j encoding the j-th operator.

    Raises WrongCountError / NotCommutingError / NotIndependentError when the
    input is not a valid set of stabilizer generators.
    """
    paulis = list(paulis)
    if not paulis:
        raise WrongCountError(0, 0)
    n = paulis[0].n
    if len(paulis) != n or any(p.n != n for p in paulis):
        raise WrongCountError(n, len(paulis))
    for i in range(n):
        for j in range(i + 1, n):
            if not paulis[i].commutes_with(paulis[j]):
                raise NotCommutingError(i + 1, j + 1)
    rows = [0] * (2 * n)
    for j, p in enumerate(paulis):
        for i in range(n):
            rows[i] |= ((p.z.bits >> i) & 1) << j
            rows[n + i] |= ((p.x.bits >> i) & 1) << j
    return StabilizerGenMatrix(BitMatrix(2 * n, n, rows))


def from_graph(g):
    """Graph-state generator matrix: adjacency block on top of an identity block."""
    return StabilizerGenMatrix(gf2.vstack(g.adj, gf2.identity(g.n)))


def basis_change(stab, r):
    """Right-multiply by an invertible matrix: new generators for the same subspace."""
    if not gf2.is_invertible(r):
        raise gf2.SingularError("basis change matrix must be invertible")
    return StabilizerGenMatrix(gf2.mat_mul(stab.s, r))


def same_subspace(a, b):
    """True iff the two generator matrices span the same column space."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    return gf2.rank(gf2.hstack(a.s, b.s)) == a.n


_TRANSVECTIONS_PER_QUBIT = 8


def random_stabilizer(n, seed, transvections=None):
    """Random stabilizer generator matrix, deterministic in the seed.

    Starts from the X-only matrix [0; I] and applies random symplectic
    transvections x -> x + <v, x> v to all columns (8n of them by default;
    zero transvections returns [0; I] itself). Transvections preserve the
    symplectic form, so self-orthogonality and full rank hold by
    construction; empirically the X-block rank of the output ranges over
    0..n across seeds.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if transvections is None:
        transvections = _TRANSVECTIONS_PER_QUBIT * n
    rng = random.Random(seed)
    form = SymplecticForm(n)
    cols = [BitVec(2 * n, 1 << (n + j)) for j in range(n)]
    for _ in range(transvections):
        vbits = 0
        while vbits == 0:
            vbits = rng.getrandbits(2 * n)
        v = BitVec(2 * n, vbits)
        cols = [c ^ v if form.product(v, c) else c for c in cols]
    rows = [0] * (2 * n)
    for j, c in enumerate(cols):
        for i in range(2 * n):
            rows[i] |= ((c.bits >> i) & 1) << j
    return StabilizerGenMatrix(BitMatrix(2 * n, n, rows))


def format_stabilizer(stab):
    """One generator per line as a Pauli string (no sign prefix)."""
    return "\n".join(p.to_text() for p in stab.to_pauli_strings()) + "\n"


def parse_stabilizer(text):
    """Parse either Pauli lines or a raw 2n x n matrix block (gf2 text format).

    The matrix alternative is detected by a first line of two integers.
    """
    stripped = [ln for ln in text.splitlines() if ln.strip()]
    if stripped and len(stripped[0].split()) == 2 and _all_ints(stripped[0].split()):
        m = gf2.parse_matrix(text)
        try:
            return StabilizerGenMatrix(m)
        except StabilizerError as exc:
            raise ParseError(f"not a valid stabilizer matrix: {exc}", line=1) from exc
    paulis = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            paulis.append(PauliString.from_text(line))
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno, column=exc.column) from None
    if not paulis:
        raise ParseError("empty stabilizer file", line=1)
    try:
        return from_pauli_strings(paulis)
    except StabilizerError as exc:
        raise ParseError(f"not a valid stabilizer: {exc}", line=1) from exc


def _all_ints(tokens):
    try:
        for t in tokens:
            int(t)
    except ValueError:
        return False
    return True
