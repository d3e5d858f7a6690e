"""Block designs: storage, t-design checks, incidence matrices and p-ranks."""

from __future__ import annotations

import json
import struct
import time
from itertools import combinations
from math import comb

import numpy as np

from .codes import LinearCode, ENUMERATION_GUARD
from .errors import InfeasibleError, ShapeError
from .trits import SpanBasis

T_GUARD = 3
V_GUARD = 3**5


class Design:
    """A simple design on points 0..v-1 with blocks of constant size k."""

    def __init__(self, v: int, blocks, k: int | None = None):
        blocks = [tuple(sorted(int(p) for p in b)) for b in blocks]
        if k is None:
            if not blocks:
                raise ShapeError("an empty design needs an explicit block size")
            k = len(blocks[0])
        for b in blocks:
            if len(b) != k or len(set(b)) != k:
                raise ShapeError("every block must have k distinct points")
            if b and (b[0] < 0 or b[-1] >= v):
                raise ShapeError(f"point index outside [0, {v})")
        if len(set(blocks)) != len(blocks):
            raise ValueError("repeated blocks: design is not simple")
        self.v = v
        self.k = k
        self.blocks = blocks

    @property
    def b(self):
        return len(self.blocks)

    def __repr__(self):
        return f"Design(v={self.v}, k={self.k}, b={self.b})"

    def incidence_matrix(self, rows=None) -> np.ndarray:
        idx = range(self.b) if rows is None else rows
        out = np.zeros((len(idx), self.v), dtype=np.uint8)
        for r, i in enumerate(idx):
            out[r, list(self.blocks[i])] = 1
        return out

    def iter_incidence(self, batch: int = 4096):
        for start in range(0, self.b, batch):
            yield self.incidence_matrix(range(start, min(start + batch, self.b)))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"v": self.v, "k": self.k, "blocks": [list(b) for b in self.blocks]},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Design":
        body = json.loads(text)
        return cls(body["v"], body["blocks"], k=body["k"])

    def to_bytes(self) -> bytes:
        """Little-endian u32 header (v, k, b) followed by b*k u32 point indices."""
        flat = np.array(self.blocks, dtype="<u4").reshape(-1)
        return struct.pack("<3I", self.v, self.k, self.b) + flat.tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "Design":
        v, k, b = struct.unpack_from("<3I", data)
        flat = np.frombuffer(data, dtype="<u4", offset=12, count=b * k)
        return cls(v, flat.reshape(b, k).tolist(), k=k)


def support_design(code: LinearCode, w: int) -> Design:
    """Supports of all weight-w codewords (direct enumeration of the code)."""
    if code.k > ENUMERATION_GUARD:
        raise InfeasibleError(f"code dimension {code.k} exceeds the enumeration guard",
                              guard="enumeration")
    from itertools import product

    g = code.generator_matrix().astype(np.int64)
    supports = set()
    msgs = np.array(list(product(range(3), repeat=code.k)), dtype=np.int64).reshape(-1, code.k)
    for start in range(0, len(msgs), 1 << 14):
        words = (msgs[start:start + (1 << 14)] @ g) % 3
        nz = words != 0
        for row in nz[nz.sum(axis=1) == w]:
            supports.add(tuple(np.flatnonzero(row)))
    if not supports:
        raise ValueError(f"the code has no codewords of weight {w}")
    return Design(code.n, sorted(supports), k=w)


def pair_counts(design: Design) -> np.ndarray:
    """v x v matrix whose (i, j) entry counts blocks containing both i and j."""
    inc = np.zeros((design.v, design.v), dtype=np.int64)
    for chunk in design.iter_incidence():
        c = chunk.astype(np.int64)
        inc += c.T @ c
    return inc


def is_t_design(design: Design, t: int):
    """Return lambda if every t-subset lies in the same number of blocks, else None."""
    if t > T_GUARD or design.v > V_GUARD:
        raise InfeasibleError(f"t-design check limited to t <= {T_GUARD}, v <= {V_GUARD}",
                              guard="t-design")
    if t < 1 or t > design.k:
        raise ValueError("need 1 <= t <= k")
    if t == 1:
        counts = np.zeros(design.v, dtype=np.int64)
        for b in design.blocks:
            counts[list(b)] += 1
        vals = np.unique(counts)
    elif t == 2:
        pc = pair_counts(design)
        vals = np.unique(pc[np.triu_indices(design.v, 1)])
    else:
        counter = {}
        for b in design.blocks:
            for s in combinations(b, t):
                counter[s] = counter.get(s, 0) + 1
        if len(counter) < comb(design.v, t):
            return None
        vals = np.unique(list(counter.values()))
    if len(vals) != 1 or vals[0] == 0:
        return None
    return int(vals[0])


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if not len(nz):
            continue
        piv = r + nz[0]
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        r += 1
    return r


def stream_rank(batches, n: int, deadline: float | None = None, basis: SpanBasis | None = None):
    """Push dense GF(3) batches into a basis; stop early once ``deadline`` passes.

    Returns (basis, complete).
    """
    basis = SpanBasis(n) if basis is None else basis
    for batch in batches:
        basis.insert_dense(batch)
        if deadline is not None and time.monotonic() > deadline:
            return basis, False
    return basis, True


def p_rank(design: Design, p: int = 3) -> int:
    if p == 3:
        basis, _ = stream_rank(design.iter_incidence(), design.v)
        return basis.rank
    return _rank_mod_p(design.incidence_matrix(), p)


def design_code(design: Design, p: int = 3) -> LinearCode:
    if p != 3:
        raise ValueError("design codes are built over GF(3) only")
    basis, _ = stream_rank(design.iter_incidence(), design.v)
    return LinearCode(basis)


def replication_number(design: Design) -> int:
    """Number of blocks through a point (lambda_1), assuming a 1-design."""
    return design.b * design.k // design.v


def hamada_condition(design: Design, lam2: int, p: int = 3) -> bool:
    """p divides lambda_1 - lambda_2 (needed whenever the p-rank is below v - 1)."""
    return (replication_number(design) - lam2) % p == 0
