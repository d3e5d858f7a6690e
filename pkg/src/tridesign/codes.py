"""Ternary linear codes: construction, duality, weight enumeration."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleError, ShapeError
from .trits import SpanBasis, TritVec

ENUMERATION_GUARD = 21
_BLOCK_CELLS = 1 << 23  # size cap for the precomputed low-trit block


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    k: int
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ShapeError("counts must have n + 1 entries")
        if any(c < 0 for c in self.counts) or self.counts[0] != 1:
            raise ValueError("a weight enumerator has A_0 = 1 and nonnegative counts")
        if sum(self.counts) != 3**self.k:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected 3^{self.k}")

    @classmethod
    def from_dict(cls, n: int, k: int, counts: dict):
        arr = [0] * (n + 1)
        for w, c in counts.items():
            arr[int(w)] = int(c)
        return cls(n, k, tuple(arr))

    def __getitem__(self, w):
        return self.counts[w]

    def nonzero(self):
        """{weight: count} for every weight with a nonzero count."""
        return {w: c for w, c in enumerate(self.counts) if c}

    def min_weight(self):
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def to_json(self) -> str:
        body = {"n": self.n, "k": self.k,
                "counts": {str(w): str(c) for w, c in self.nonzero().items()}}
        return json.dumps(body, sort_keys=False)

    @classmethod
    def from_json(cls, text: str):
        body = json.loads(text)
        return cls.from_dict(body["n"], body["k"], body["counts"])

    def polynomial(self) -> str:
        terms = []
        for w, c in self.nonzero().items():
            terms.append(str(c) if w == 0 else f"{c}z^{w}")
        return " + ".join(terms)


def _krawtchouk_column(n: int, i: int, q: int = 3):
    """K_j(i) for j = 0..n via the three-term recurrence (exact integers)."""
    col = [1]
    if n == 0:
        return col
    col.append((q - 1) * n - q * i)
    for j in range(1, n):
        num = ((n - j) * (q - 1) + j - q * i) * col[j] - (q - 1) * (n - j + 1) * col[j - 1]
        col.append(num // (j + 1))
    return col


def macwilliams(we: WeightEnumerator, n: int | None = None, k: int | None = None) -> WeightEnumerator:
    """Weight enumerator of the dual code."""
    n = we.n if n is None else n
    k = we.k if k is None else k
    if n != we.n or k != we.k or sum(we.counts) != 3**k:
        raise ValueError("enumerator is inconsistent with the stated length and dimension")
    acc = [0] * (n + 1)
    for i, a in enumerate(we.counts):
        if a:
            col = _krawtchouk_column(n, i)
            for j in range(n + 1):
                acc[j] += a * col[j]
    size = 3**k
    out = []
    for j, s in enumerate(acc):
        if s % size:
            raise ValueError(f"MacWilliams transform is not integral at weight {j}")
        out.append(s // size)
    return WeightEnumerator(n, n - k, tuple(out))


_NZ = np.array([0, 1, 1, 0, 1], dtype=np.uint8)  # nonzero mod 3 for sums in 0..4


def _enumerate_range(gen: np.ndarray, low_bits: int, high_rows: np.ndarray, start: np.ndarray,
                     steps: int) -> np.ndarray:
    n = gen.shape[1]
    low = np.zeros((1, n), dtype=np.uint8)
    for row in gen[:low_bits]:
        low = np.concatenate([low, (low + row) % 3, (low + 2 * row) % 3])
    hist = np.zeros(n + 1, dtype=np.int64)
    offset = start.astype(np.uint8).copy()
    for step in range(steps):
        if step:
            # modular Gray order: digit v_3(step) advances by one
            j, s = 0, step
            while s % 3 == 0:
                s //= 3
                j += 1
            offset = (offset + high_rows[j]) % 3
        w = _NZ[low + offset].sum(axis=1, dtype=np.int64)
        hist += np.bincount(w, minlength=n + 1)
    return hist


def _shard_task(args):
    return _enumerate_range(*args)


class LinearCode:
    """A length-n GF(3) code held as an RREF generator basis."""

    def __init__(self, basis: SpanBasis):
        self.basis = basis

    @property
    def n(self):
        return self.basis.n

    @property
    def k(self):
        return self.basis.rank

    @classmethod
    def from_rows(cls, rows, n: int | None = None) -> "LinearCode":
        rows = list(rows)
        if n is None:
            if not rows:
                raise ShapeError("an empty row list needs an explicit length")
            n = len(rows[0])
        basis = SpanBasis(n)
        for r in rows:
            if not isinstance(r, TritVec):
                r = TritVec.from_array(r)
            basis.insert(r)
        return cls(basis)

    @classmethod
    def from_array(cls, arr, n: int | None = None) -> "LinearCode":
        arr = np.asarray(arr, dtype=np.int64) % 3
        if arr.ndim != 2:
            raise ShapeError("expected a 2-d generator array")
        n = arr.shape[1] if n is None else n
        basis = SpanBasis(n)
        basis.insert_dense(arr.reshape(-1, n))
        return cls(basis)

    @classmethod
    def zero(cls, n: int) -> "LinearCode":
        return cls(SpanBasis(n))

    def generator_matrix(self) -> np.ndarray:
        if not self.k:
            return np.zeros((0, self.n), dtype=np.uint8)
        return np.stack([r.to_array() for r in self.basis.rows])

    def __contains__(self, v) -> bool:
        if not isinstance(v, TritVec):
            v = TritVec.from_array(v)
        return v in self.basis

    def contains_all(self, arr) -> bool:
        res = self.basis.reduce_dense(np.asarray(arr) % 3)
        return not res.any()

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return self.n == other.n and (self.k == 0 or other.contains_all(self.generator_matrix()))

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.n == other.n and self.k == other.k
                and self.is_subcode_of(other))

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}])"

    # -- derived codes ---------------------------------------------------

    def dual(self) -> "LinearCode":
        n, k = self.n, self.k
        g = self.generator_matrix().astype(np.int64)
        pivots = self.basis.pivots
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        h = np.zeros((len(free), n), dtype=np.int64)
        for r, f in enumerate(free):
            h[r, f] = 1
            for i, p in enumerate(pivots):
                h[r, p] = (-g[i, f]) % 3
        if not free:
            return LinearCode.zero(n)
        code = LinearCode.from_array(h, n=n)
        assert code.k == n - k
        return code

    def extend(self) -> "LinearCode":
        g = self.generator_matrix().astype(np.int64)
        parity = (-g.sum(axis=1)) % 3
        return LinearCode.from_array(np.concatenate([g, parity[:, None]], axis=1), n=self.n + 1)

    def puncture_last(self) -> "LinearCode":
        if self.n < 2:
            raise ValueError("cannot puncture a code of length < 2")
        return LinearCode.from_array(self.generator_matrix()[:, :-1], n=self.n - 1)

    def augment(self) -> "LinearCode":
        basis = self.basis.copy()
        basis.insert(TritVec.ones(self.n))
        return LinearCode(basis)

    def permute(self, perm) -> "LinearCode":
        """Code whose words are w[i] = c[perm[i]]."""
        return LinearCode.from_array(self.generator_matrix()[:, np.asarray(perm)], n=self.n)

    # -- weights ---------------------------------------------------------

    def weight_distribution(self, workers: int = 1) -> WeightEnumerator:
        n, k = self.n, self.k
        if k > ENUMERATION_GUARD:
            raise InfeasibleError(
                f"enumerating 3^{k} codewords exceeds the k <= {ENUMERATION_GUARD} guard; "
                "enumerate the dual and apply macwilliams() instead", guard="enumeration")
        if k == 0:
            return WeightEnumerator(n, 0, (1,) + (0,) * n)
        gen = self.generator_matrix()
        low_bits = 0
        while low_bits < k and 3 ** (low_bits + 1) * n <= _BLOCK_CELLS:
            low_bits += 1
        high_rows = gen[low_bits:]
        high = k - low_bits
        shard_bits = min(high, max(0, _ceil_log3(workers))) if workers > 1 else 0
        if shard_bits == 0:
            hist = _enumerate_range(gen, low_bits, high_rows, np.zeros(n, np.uint8), 3**high)
        else:
            # each shard fixes the top trits and walks the remaining ones in Gray order
            inner = high - shard_bits
            tasks = []
            for top in range(3**shard_bits):
                start = np.zeros(n, dtype=np.int64)
                t = top
                for j in range(shard_bits):
                    start += (t % 3) * high_rows[inner + j]
                    t //= 3
                tasks.append((gen, low_bits, high_rows[:inner] if inner else high_rows[:0],
                              (start % 3).astype(np.uint8), 3**inner))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hist = sum(pool.map(_shard_task, tasks))
        return WeightEnumerator(n, k, tuple(int(c) for c in hist))

    def min_distance(self) -> int:
        if self.k == 0:
            raise ValueError("the zero code has no minimum distance")
        k, r = self.k, self.n - self.k
        if k <= ENUMERATION_GUARD and (k <= r or r > ENUMERATION_GUARD):
            return self.weight_distribution().min_weight()
        if r <= ENUMERATION_GUARD:
            return macwilliams(self.dual().weight_distribution()).min_weight()
        raise InfeasibleError(
            f"both the code (k={k}) and its dual (k={r}) exceed the enumeration guard",
            guard="enumeration")


def _ceil_log3(x: int) -> int:
    b = 0
    while 3**b < x:
        b += 1
    return b


def code_from_rows(rows, n: int | None = None) -> LinearCode:
    return LinearCode.from_rows(rows, n=n)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def extend(code: LinearCode) -> LinearCode:
    return code.extend()


def puncture_last(code: LinearCode) -> LinearCode:
    return code.puncture_last()


def augment(code: LinearCode) -> LinearCode:
    return code.augment()


def weight_distribution(code: LinearCode, workers: int = 1) -> WeightEnumerator:
    return code.weight_distribution(workers=workers)


def min_distance(code: LinearCode) -> int:
    return code.min_distance()


def affine_maps(field):
    """Permutations x -> a*x + b generating the affine group: all translations plus x -> beta*x."""
    xs = field.elements()
    perms = [field.add(xs, b) for b in range(1, field.q)]
    perms.append(field.mul(xs, field.primitive_element()))
    return perms


def check_affine_invariant(code: LinearCode, field) -> bool:
    if code.n != field.q:
        raise ShapeError(f"code length {code.n} differs from field size {field.q}")
    g = code.generator_matrix()
    return all(code.contains_all(g[:, perm]) for perm in affine_maps(field))


def low_weight_codeword(code: LinearCode, target: int, seed: int = 0, max_iter: int = 20000):
    """Search for a nonzero codeword of weight <= target (Lee-Brickell, up to two rows).

    Each round reduces the generator to systematic form on a random information
    set and inspects single rows and all sums r_i +/- r_j.  Returns the word in
    the code's own coordinates, or None when the iteration budget runs out.
    An upper bound only: failing to find a word proves nothing.
    """
    rng = np.random.default_rng(seed)
    k, n = code.k, code.n
    if k == 0:
        return None
    iu, ju = np.triu_indices(k, 1)
    for _ in range(max_iter):
        perm = rng.permutation(n)
        g = code.permute(perm).generator_matrix().astype(np.int16)
        cands = np.concatenate([g, (g[iu] + g[ju]) % 3, (g[iu] - g[ju]) % 3])
        w = np.count_nonzero(cands, axis=1)
        hit = np.flatnonzero(w <= target)
        if len(hit):
            word = np.empty(n, dtype=np.uint8)
            word[perm] = cands[hit[np.argmin(w[hit])]]
            return word
    return None
