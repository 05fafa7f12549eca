"""Dense linear algebra over GF(2) with rows packed into 64-bit words.

Column ``c`` of a row lives in bit ``c % 64`` of word ``c // 64``.  Padding
bits beyond ``cols`` are kept at zero by every constructor and operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD = 64


def _nwords(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-d boolean array into uint64 words along the last axis."""
    bits = np.asarray(bits, dtype=bool)
    rows, cols = bits.shape
    nw = _nwords(cols)
    if nw == 0:
        return np.zeros((rows, 0), dtype=np.uint64)
    padded = np.zeros((rows, nw * WORD), dtype=bool)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(rows, nw)


def unpack_bits(words: np.ndarray, cols: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.uint64)
    rows = words.shape[0]
    if cols == 0 or rows == 0:
        return np.zeros((rows, cols), dtype=bool)
    raw = np.unpackbits(words.view(np.uint8).reshape(rows, -1), axis=1, bitorder="little")
    return raw[:, :cols].astype(bool)


class BitMatrix:
    """Immutable dense matrix over GF(2)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        nw = _nwords(cols)
        if data is None:
            data = np.zeros((rows, nw), dtype=np.uint64)
        else:
            data = np.array(data, dtype=np.uint64, copy=True).reshape(rows, nw)
            tail = cols % WORD
            if tail and rows:
                data[:, -1] &= np.uint64((1 << tail) - 1)
        data.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_dense(np.eye(n, dtype=bool))

    @classmethod
    def from_dense(cls, a) -> BitMatrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        a = (a % 2).astype(bool) if a.dtype != bool else a
        return cls(a.shape[0], a.shape[1], pack_bits(a))

    @classmethod
    def from_rows(cls, rows, cols: int) -> BitMatrix:
        rows = list(rows)
        if not rows:
            return cls(0, cols)
        return cls.from_dense(np.array(rows, dtype=np.uint8).reshape(len(rows), cols))

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator, density: float = 0.5) -> BitMatrix:
        return cls.from_dense(rng.random((rows, cols)) < density)

    def to_dense(self) -> np.ndarray:
        """Return an unpacked ``uint8`` array of shape (rows, cols)."""
        return unpack_bits(self.data, self.cols).astype(np.uint8)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_dense(unpack_bits(self.data, self.cols).T)

    T = property(transpose)

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def get(self, i: int, j: int) -> int:
        return int((self.data[i, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1))

    def column_bits(self, j: int) -> np.ndarray:
        return ((self.data[:, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1)).astype(bool)

    def matvec(self, v) -> np.ndarray:
        """Return m·v for a 0/1 vector v of length cols, as a bool array."""
        w = pack_bits(np.asarray(v, dtype=bool).reshape(1, self.cols))[0]
        prod = self.data & w
        return np.bitwise_count(prod).sum(axis=1) % 2 == 1 if self.rows else np.zeros(0, bool)

    def matmul(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        a = unpack_bits(self.data, self.cols).astype(np.int64)
        b = unpack_bits(other.data, other.cols).astype(np.int64)
        return BitMatrix.from_dense((a @ b) % 2 == 1)

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise ValueError("dimension mismatch")
        return BitMatrix(self.rows + other.rows, self.cols, np.vstack([self.data, other.data]))

    def nonzero_rows(self) -> int:
        return int(np.count_nonzero(self.data.any(axis=1))) if self.data.size else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class EchelonForm:
    matrix: BitMatrix
    pivot_cols: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def basis(self) -> BitMatrix:
        """The nonzero rows of the reduced form."""
        return BitMatrix(self.rank, self.matrix.cols, self.matrix.data[: self.rank])


def _eliminate(a: np.ndarray, cols: int) -> list[int]:
    """Gauss-Jordan elimination in place on packed rows; returns pivot columns.

    Pivot choice is the lowest-index row with a 1 in the lowest unresolved
    column, so the output depends only on the input matrix.
    """
    nrows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        w = c // WORD
        bit = np.uint64(c % WORD)
        below = np.flatnonzero((a[r:, w] >> bit) & np.uint64(1))
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        hits = np.flatnonzero((a[:, w] >> bit) & np.uint64(1))
        hits = hits[hits != r]
        if hits.size:
            a[hits, w:] ^= a[r, w:]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: BitMatrix) -> EchelonForm:
    """Reduced row-echelon form of m; m itself is left untouched."""
    a = np.array(m.data, copy=True)
    pivots = _eliminate(a, m.cols)
    return EchelonForm(BitMatrix(m.rows, m.cols, a), tuple(pivots))


def rank(m: BitMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate along the shorter side
    if m.rows > m.cols and m.rows > 2 * WORD:
        m = m.transpose()
    a = np.array(m.data, copy=True)
    return len(_eliminate(a, m.cols))


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis (as rows) of the right null space {v : m v = 0}.

    The basis vector for free column f has a 1 at f, zeros at the other free
    columns, and the negated (= same, over GF(2)) entries of column f of the
    reduced form at the pivot columns.
    """
    ef = rref(m)
    n = m.cols
    piv = np.array(ef.pivot_cols, dtype=np.int64)
    free_mask = np.ones(n, dtype=bool)
    free_mask[piv] = False
    free = np.flatnonzero(free_mask)
    if free.size == 0:
        return BitMatrix(0, n)
    red = unpack_bits(ef.matrix.data[: ef.rank], n)
    out = np.zeros((free.size, n), dtype=bool)
    out[np.arange(free.size), free] = True
    if ef.rank:
        out[:, piv] = red[:, free].T
    return BitMatrix(free.size, n, pack_bits(out))


def in_span(v, basis: EchelonForm) -> bool:
    """True iff v (0/1 sequence or packed words) lies in the row space of basis."""
    v = _as_words(v, basis.matrix.cols)
    return not _reduce(v, basis.matrix.data[: basis.rank], basis.pivot_cols).any()


def _as_words(v, cols: int) -> np.ndarray:
    v = np.asarray(v)
    if v.dtype == np.uint64:
        if v.shape != (_nwords(cols),):
            raise ValueError("dimension mismatch")
        return v
    if v.shape != (cols,):
        raise ValueError(f"vector of length {v.shape} against {cols} columns")
    return pack_bits(v.astype(bool).reshape(1, cols))[0]


def _reduce(v: np.ndarray, rows: np.ndarray, pivots) -> np.ndarray:
    if len(pivots) == 0:
        return v.copy()
    piv = np.asarray(pivots, dtype=np.int64)
    sel = ((v[piv // WORD] >> (piv % WORD).astype(np.uint64)) & np.uint64(1)).astype(bool)
    if not sel.any():
        return v.copy()
    return v ^ np.bitwise_xor.reduce(rows[sel], axis=0)


class SpanBuilder:
    """Incrementally grown reduced echelon basis of a subspace of GF(2)^n.

    Used by generator-selection loops, which add vectors one at a time and
    ask whether each new candidate is already in the span.
    """

    def __init__(self, cols: int, capacity: int = 64):
        self.cols = cols
        self._rows = np.zeros((max(capacity, 1), _nwords(cols)), dtype=np.uint64)
        self._pivots: list[int] = []
        self._piv_arr = np.zeros(0, dtype=np.int64)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, v) -> np.ndarray:
        v = _as_words(v, self.cols)
        return _reduce(v, self._rows[: self.dim], self._piv_arr)

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def add(self, v) -> bool:
        """Add v to the span; return True iff the dimension grew."""
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        w = int(nz[0])
        word = int(v[w])
        c = w * WORD + ((word & -word).bit_length() - 1)
        k = self.dim
        rows = self._rows[:k]
        if k:
            hits = np.flatnonzero((rows[:, w] >> np.uint64(c % WORD)) & np.uint64(1))
            if hits.size:
                rows[hits] ^= v
        if k == self._rows.shape[0]:
            self._rows = np.vstack([self._rows, np.zeros_like(self._rows)])
        self._rows[k] = v
        self._pivots.append(c)
        self._piv_arr = np.asarray(self._pivots, dtype=np.int64)
        return True

    def add_many(self, vecs: np.ndarray) -> int:
        """Add packed rows; returns how many increased the dimension."""
        grown = 0
        for v in vecs:
            if self.dim == self.cols:
                break
            grown += self.add(v)
        return grown

    def echelon(self) -> EchelonForm:
        """Snapshot as a sorted reduced echelon form."""
        order = np.argsort(self._piv_arr, kind="stable")
        rows = self._rows[: self.dim][order]
        return EchelonForm(BitMatrix(self.dim, self.cols, rows), tuple(int(p) for p in self._piv_arr[order]))
