"""Packed GF(3) vectors and incremental row-reduced bases.

A ``TritVec`` stores n trits as two bit-planes held in Python ints: bit i of
``one`` is set iff entry i equals 1, bit i of ``two`` iff it equals 2.  Addition
mod 3 is a handful of word-parallel bitwise operations on those planes and the
Hamming weight is ``(one | two).bit_count()``.

``SpanBasis`` keeps rows in reduced row echelon form.  Streams of dense rows can
be pushed through :meth:`SpanBasis.insert_dense`, which first reduces a whole
batch against the current basis with one matrix product and only unpacks the
rows that survive.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError


class TritVec:
    __slots__ = ("n", "one", "two")

    def __init__(self, n: int, one: int = 0, two: int = 0):
        self.n = n
        self.one = one
        self.two = two

    @classmethod
    def zeros(cls, n):
        return cls(n)

    @classmethod
    def ones(cls, n):
        return cls(n, (1 << n) - 1, 0)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "TritVec":
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
        return cls.from_array(arr)

    @classmethod
    def from_array(cls, arr) -> "TritVec":
        arr = np.asarray(arr).astype(np.int64) % 3
        if arr.ndim != 1:
            raise ShapeError("expected a one-dimensional array")
        return cls(len(arr), _pack_bits(arr == 1), _pack_bits(arr == 2))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "TritVec":
        one = 0
        for i in support:
            one |= 1 << int(i)
        return cls(n, one, 0)

    @property
    def mask(self):
        return (1 << self.n) - 1

    def __len__(self):
        return self.n

    def __getitem__(self, i: int) -> int:
        if (self.one >> i) & 1:
            return 1
        if (self.two >> i) & 1:
            return 2
        return 0

    def to_array(self) -> np.ndarray:
        out = _unpack_bits(self.one, self.n).astype(np.uint8)
        out += 2 * _unpack_bits(self.two, self.n).astype(np.uint8)
        return out

    def tolist(self):
        return self.to_array().tolist()

    def weight(self) -> int:
        return (self.one | self.two).bit_count()

    def support(self):
        return np.flatnonzero(self.to_array())

    def is_zero(self) -> bool:
        return not (self.one | self.two)

    def _check(self, other: "TritVec"):
        if other.n != self.n:
            raise ShapeError(f"length mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "TritVec") -> "TritVec":
        self._check(other)
        a1, a2, b1, b2 = self.one, self.two, other.one, other.two
        mask = self.mask
        za = ~(a1 | a2) & mask
        zb = ~(b1 | b2) & mask
        one = (a1 & zb) | (za & b1) | (a2 & b2)
        two = (a2 & zb) | (za & b2) | (a1 & b1)
        return TritVec(self.n, one, two)

    def __neg__(self) -> "TritVec":
        return TritVec(self.n, self.two, self.one)

    def __sub__(self, other: "TritVec") -> "TritVec":
        return self + (-other)

    def scale(self, c: int) -> "TritVec":
        c %= 3
        if c == 0:
            return TritVec(self.n)
        return self if c == 1 else -self

    def __mul__(self, c: int) -> "TritVec":
        return self.scale(c)

    __rmul__ = __mul__

    def dot(self, other: "TritVec") -> int:
        self._check(other)
        # products: 1*1=1, 2*2=1, 1*2=2
        plus = (self.one & other.one).bit_count() + (self.two & other.two).bit_count()
        minus = (self.one & other.two).bit_count() + (self.two & other.one).bit_count()
        return (plus - minus) % 3

    def hadamard(self, other: "TritVec") -> "TritVec":
        """Coordinatewise product."""
        self._check(other)
        one = (self.one & other.one) | (self.two & other.two)
        two = (self.one & other.two) | (self.two & other.one)
        return TritVec(self.n, one, two)

    def permute(self, perm: Sequence[int]) -> "TritVec":
        """Return w with w[i] = self[perm[i]]."""
        return TritVec.from_array(self.to_array()[np.asarray(perm)])

    def lowest_nonzero(self) -> int:
        x = self.one | self.two
        return (x & -x).bit_length() - 1

    def __eq__(self, other):
        return (isinstance(other, TritVec) and self.n == other.n
                and self.one == other.one and self.two == other.two)

    def __hash__(self):
        return hash((self.n, self.one, self.two))

    def __repr__(self):
        return f"TritVec({self.dump()})"

    def dump(self) -> str:
        return "".join(str(int(v)) for v in self.to_array())


def _pack_bits(mask: np.ndarray) -> int:
    packed = np.packbits(mask.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _unpack_bits(x: int, n: int) -> np.ndarray:
    raw = np.frombuffer(x.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


class TritMat:
    """A rectangular list of TritVec rows."""

    def __init__(self, rows: Sequence[TritVec], n: int | None = None):
        rows = list(rows)
        if n is None:
            if not rows:
                raise ShapeError("empty matrix needs an explicit column count")
            n = rows[0].n
        for r in rows:
            if r.n != n:
                raise ShapeError("ragged rows")
        self.rows = rows
        self.n = n

    @classmethod
    def from_array(cls, arr) -> "TritMat":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ShapeError("expected a two-dimensional array")
        return cls([TritVec.from_array(r) for r in arr], n=arr.shape[1])

    @classmethod
    def from_lists(cls, rows) -> "TritMat":
        rows = [list(r) for r in rows]
        if rows and len({len(r) for r in rows}) != 1:
            raise ShapeError("ragged rows")
        return cls.from_array(np.array(rows, dtype=np.int64).reshape(len(rows), -1))

    @property
    def shape(self):
        return (len(self.rows), self.n)

    def to_array(self):
        if not self.rows:
            return np.zeros((0, self.n), dtype=np.uint8)
        return np.stack([r.to_array() for r in self.rows])

    def dump(self) -> str:
        return "\n".join(r.dump() for r in self.rows)


class SpanBasis:
    """Row space over GF(3) kept in reduced row echelon form."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[TritVec] = []
        self.pivots: list[int] = []
        self._dense = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "SpanBasis":
        b = SpanBasis(self.n)
        b.rows = list(self.rows)
        b.pivots = list(self.pivots)
        return b

    def reduce(self, v: TritVec) -> TritVec:
        if v.n != self.n:
            raise ShapeError(f"length mismatch: basis {self.n}, vector {v.n}")
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                v = v - row.scale(c)
        return v

    def insert(self, v: TritVec) -> bool:
        """Add v to the span; return True iff the rank grew."""
        r = self.reduce(v)
        if r.is_zero():
            return False
        p = r.lowest_nonzero()
        if r[p] == 2:
            r = -r
        for i, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[i] = row - r.scale(c)
        pos = int(np.searchsorted(self.pivots, p))
        self.rows.insert(pos, r)
        self.pivots.insert(pos, p)
        self._dense = None
        return True

    def __contains__(self, v: TritVec) -> bool:
        return self.reduce(v).is_zero()

    def dense(self) -> np.ndarray:
        if self._dense is None:
            if self.rows:
                self._dense = np.stack([r.to_array() for r in self.rows]).astype(np.float32)
            else:
                self._dense = np.zeros((0, self.n), dtype=np.float32)
        return self._dense

    def reduce_dense(self, batch: np.ndarray) -> np.ndarray:
        """Residues of the rows of a dense 0/1/2 batch modulo the span (uint8)."""
        batch = np.asarray(batch)
        if batch.ndim != 2 or batch.shape[1] != self.n:
            raise ShapeError(f"batch must have {self.n} columns")
        if not self.rows:
            return batch.astype(np.uint8) % 3
        coeff = batch[:, self.pivots].astype(np.float32)
        res = batch.astype(np.float32) - coeff @ self.dense()
        return np.mod(res, 3).astype(np.uint8)

    def insert_dense(self, batch: np.ndarray) -> int:
        """Insert every row of a dense batch; return how many raised the rank."""
        res = self.reduce_dense(batch)
        grew = 0
        for i in np.flatnonzero(res.any(axis=1)):
            if self.insert(TritVec.from_array(res[i])):
                grew += 1
        return grew

    def merge(self, other: "SpanBasis") -> int:
        grew = 0
        for r in other.rows:
            grew += self.insert(r)
        return grew

    def to_matrix(self) -> TritMat:
        return TritMat(self.rows, n=self.n)

    def check_rref(self) -> bool:
        if list(self.pivots) != sorted(set(self.pivots)):
            return False
        for p, row in zip(self.pivots, self.rows):
            if row.is_zero() or row[p] != 1 or row.lowest_nonzero() != p:
                return False
            if sum(1 for r in self.rows if r[p]) != 1:
                return False
        return True


def insert_into_span(basis: SpanBasis, v: TritVec):
    """Functional form: returns (basis, grew).  The basis is updated in place."""
    grew = basis.insert(v)
    return basis, grew


def in_span(basis: SpanBasis, v: TritVec) -> bool:
    return v in basis


def span_of(rows: Iterable[TritVec], n: int) -> SpanBasis:
    basis = SpanBasis(n)
    for r in rows:
        basis.insert(r)
    return basis


def rank(mat) -> int:
    """GF(3) rank of a TritMat, a 2-d array, or a list of equal-length rows."""
    if isinstance(mat, TritMat):
        basis = SpanBasis(mat.n)
        for r in mat.rows:
            basis.insert(r)
        return basis.rank
    if isinstance(mat, np.ndarray):
        if mat.ndim != 2:
            raise ShapeError("expected a two-dimensional array")
        basis = SpanBasis(mat.shape[1])
        basis.insert_dense(mat % 3)
        return basis.rank
    return rank(TritMat.from_lists(mat))
