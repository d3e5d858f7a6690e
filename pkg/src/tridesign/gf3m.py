"""Arithmetic in GF(3^m) on dense element indices.

An element is stored as the integer whose base-3 digits are its coordinates
in the polynomial basis 1, x, ..., x^(m-1) (lowest digit first).  Index 0 is
zero, indices 1 and 2 are the prime-field constants.  Every operation accepts
Python ints or integer numpy arrays and broadcasts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd

import numpy as np

from .errors import ConfigurationError

MAX_M = 12


def _load_moduli():
    text = resources.files("tridesign").joinpath("data/moduli.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m, digits = line.split()
        table[int(m)] = tuple(int(c) for c in digits)
    return table


MODULI = _load_moduli()


def _poly_rem3(a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = b[-1]  # 1 and 2 are their own inverses mod 3
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = (a[-1] * inv_lead) % 3
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % 3
        a.pop()
    return a


def is_irreducible(modulus):
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in range(3**deg):
            divisor = [(low // 3**i) % 3 for i in range(deg)] + [1]
            rem = _poly_rem3(modulus, divisor)
            if not any(rem):
                return False
    return True


class Field:
    """GF(3^m) with the modulus pinned in ``data/moduli.txt``.

    Tables are built once at construction: coordinate digits, exponential and
    logarithm tables for a fixed generator, negation, squares and the absolute
    trace.  Instances are read-only after ``__init__``.
    """

    def __init__(self, m: int):
        if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_M:
            raise ConfigurationError(f"extension degree m must satisfy 1 <= m <= {MAX_M}, got {m!r}")
        m = int(m)
        self.m = m
        self.modulus = MODULI[m]
        if not is_irreducible(self.modulus):
            raise ConfigurationError(f"modulus for m={m} is not irreducible")
        self.q = 3**m
        self.n = self.q - 1
        q = self.q

        self.pow3 = 3 ** np.arange(m, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.digits = ((idx[:, None] // self.pow3[None, :]) % 3).astype(np.int8)
        self.neg_table = ((-self.digits) % 3).astype(np.int64) @ self.pow3

        self._build_exp_log()
        self.square_table = self.mul(idx, idx)
        self.trace_table = self._build_trace()
        for arr in (self.digits, self.neg_table, self.exp_table, self.log_table,
                    self.square_table, self.trace_table):
            arr.setflags(write=False)

    def _build_exp_log(self):
        m, q, n = self.m, self.q, self.n
        if m == 1:
            powers = np.array([1, 2], dtype=np.int64)
        else:
            # multiplication by x as a linear map on coordinate vectors
            mx = np.zeros((m, m), dtype=np.int64)
            for i in range(m - 1):
                mx[i + 1, i] = 1
            mx[:, m - 1] = [(-c) % 3 for c in self.modulus[:m]]
            cols = np.zeros((m, 1), dtype=np.int64)
            cols[0, 0] = 1
            step = mx.copy()
            while cols.shape[1] < n:
                cols = np.concatenate([cols, (step @ cols) % 3], axis=1)
                step = (step @ step) % 3
            powers = self.pow3 @ cols[:, :n]
        if len(np.unique(powers)) != n or 0 in powers:
            raise ConfigurationError(f"modulus for m={m} is not primitive")
        self.exp_table = np.concatenate([powers, powers])
        self.log_table = np.full(q, -1, dtype=np.int64)
        self.log_table[powers] = np.arange(n, dtype=np.int64)

    def _build_trace(self):
        # Tr is GF(3)-linear: evaluate it on the basis by Frobenius sums, extend by coordinates
        basis_traces = []
        for i in range(self.m):
            y = 3**i
            total = 0
            for _ in range(self.m):
                total = self.add(total, y)
                y = self.pow(y, 3)
            if total > 2:
                raise ConfigurationError("trace of a basis element left the prime field")
            basis_traces.append(int(total))
        return ((self.digits.astype(np.int64) @ np.array(basis_traces)) % 3).astype(np.int64)

    # -- arithmetic -----------------------------------------------------

    def add(self, u, v):
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        s = ((self.digits[u].astype(np.int64) + self.digits[v]) % 3) @ self.pow3
        return int(s) if s.ndim == 0 else s

    def neg(self, u):
        r = self.neg_table[np.asarray(u, dtype=np.int64)]
        return int(r) if r.ndim == 0 else r

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def mul(self, u, v):
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        lu, lv = self.log_table[u], self.log_table[v]
        r = np.where((lu < 0) | (lv < 0), 0, self.exp_table[np.maximum(lu, 0) + np.maximum(lv, 0)])
        return int(r) if r.ndim == 0 else r

    def inv(self, u):
        u = np.asarray(u, dtype=np.int64)
        if np.any(u == 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        r = self.exp_table[(self.n - self.log_table[u]) % self.n]
        return int(r) if r.ndim == 0 else r

    def div(self, u, v):
        return self.mul(u, self.inv(v))

    def pow(self, u, e: int):
        u = np.asarray(u, dtype=np.int64)
        if e == 0:
            r = np.ones_like(u)
        else:
            lu = self.log_table[u]
            r = np.where(lu < 0, 0, self.exp_table[(np.maximum(lu, 0) * (e % self.n)) % self.n])
            if e % self.n == 0:
                r = np.where(lu < 0, 0, 1)
        return int(r) if r.ndim == 0 else r

    def trace(self, u):
        r = self.trace_table[np.asarray(u, dtype=np.int64)]
        return int(r) if r.ndim == 0 else r

    def order(self, u: int) -> int:
        if u == 0:
            raise ValueError("zero has no multiplicative order")
        return self.n // gcd(int(self.log_table[u]), self.n)

    # -- structure ------------------------------------------------------

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def basis(self):
        """Indices of the polynomial basis 1, x, ..., x^(m-1)."""
        return [3**i for i in range(self.m)]

    def from_coords(self, coords) -> int:
        coords = [int(c) % 3 for c in coords]
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates")
        return int(sum(c * 3**i for i, c in enumerate(coords)))

    def coords(self, u: int):
        return tuple(int(d) for d in self.digits[u])

    def primitive_element(self) -> int:
        logs = self.log_table[1:]
        for i, lg in enumerate(logs, start=1):
            if gcd(int(lg), self.n) == 1:
                return i
        raise AssertionError("cyclic group has a generator")

    def squares(self):
        """(nonzero squares, nonsquares) as sorted index arrays."""
        sq = np.unique(self.square_table[1:])
        mask = np.zeros(self.q, dtype=bool)
        mask[sq] = True
        mask[0] = True
        return sq, np.flatnonzero(~mask)

    def trace_form(self):
        """m x m matrix of Tr(b_i * b_j) over the polynomial basis; Tr(u*v) = cu @ F @ cv mod 3."""
        b = self.basis()
        return np.array([[self.trace(self.mul(x, y)) for y in b] for x in b], dtype=np.int64)

    def trace_product_table(self, left=None):
        """Rows Tr(c * x) over all x, for each c in ``left`` (default: every element)."""
        left = self.elements() if left is None else np.asarray(left, dtype=np.int64)
        form = self.trace_form()
        d = self.digits.astype(np.int64)
        return ((d[left] @ form @ d.T) % 3).astype(np.uint8)

    def element(self, u: int) -> "FieldElement":
        return FieldElement(self, int(u))

    def __repr__(self):
        return f"Field(m={self.m}, q={self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.m == self.m

    def __hash__(self):
        return hash(("Field", self.m))


@lru_cache(maxsize=None)
def field_new(m: int) -> Field:
    """Return the (cached) field GF(3^m) for 1 <= m <= 12."""
    return Field(m)


@dataclass(frozen=True)
class FieldElement:
    """Convenience wrapper pairing an index with its field."""

    field: Field
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise ValueError(f"index {self.index} outside GF({self.field.q})")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.index
        return int(other) % 3  # prime-field constant

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.index, self._other(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def trace(self) -> int:
        return self.field.trace(self.index)

    @property
    def coords(self):
        return self.field.coords(self.index)

    def is_zero(self):
        return self.index == 0
