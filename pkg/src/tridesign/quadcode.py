"""The quadratic-trace code C(m,3), its minimum-weight design and that design's code.

Coordinates are indexed by field elements in canonical index order, so the
word of a function f: GF(3^m) -> GF(3) is the array ``f(x)`` for ``x in
range(q)``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codes import LinearCode, WeightEnumerator
from .designs import Design, stream_rank
from .errors import ConfigurationError, ConsistencyError
from .gf3m import Field, field_new
from .grm import cyclic_to_field_order
from .poly3 import (cyclic_code_from_check, cyclotomic_coset,
                    product_of_distinct_minimal_polys)
from .trits import SpanBasis, TritVec


def trace_word(field: Field, c: int, e: int = 1) -> np.ndarray:
    """Word of x -> Tr(c * x^e)."""
    xs = field.elements()
    return field.trace(field.mul(c, field.pow(xs, e))).astype(np.uint8)


def quad_word(field: Field, a: int, b: int, h: int = 0) -> np.ndarray:
    """Word of x -> Tr(a x^2 + b x) + h."""
    xs = field.elements()
    vals = field.add(field.mul(a, field.square_table), field.mul(b, xs))
    return ((field.trace(vals) + h) % 3).astype(np.uint8)


def build_code(field: Field) -> LinearCode:
    """C(m,3): spans of Tr(g x^2), Tr(g x) over the polynomial basis, plus the all-one word."""
    if field.m < 2:
        raise ConfigurationError("C(m,3) needs m >= 2")
    rows = [trace_word(field, g, 2) for g in field.basis()]
    rows += [trace_word(field, g, 1) for g in field.basis()]
    rows.append(np.ones(field.q, dtype=np.uint8))
    return LinearCode.from_array(np.array(rows), n=field.q)


def table1_distribution(m: int) -> WeightEnumerator:
    """Closed-form weight distribution of C(m,3) for odd m >= 3."""
    if m < 3 or m % 2 == 0:
        raise ConfigurationError("the closed-form distribution covers odd m >= 3 only")
    q = 3**m
    half = 3 ** ((m - 1) // 2)
    mid = 2 * 3 ** (m - 1)
    counts = {0: 1, mid - half: 3 ** (2 * m) - q, mid: (q + 3) * (q - 1),
              mid + half: 3 ** (2 * m) - q, q: 2}
    return WeightEnumerator.from_dict(q, 2 * m + 1, counts)


def min_weight(m: int) -> int:
    """Minimum distance of C(m,3) for odd m."""
    return 2 * 3 ** (m - 1) - 3 ** ((m - 1) // 2)


def _weights_by_h(field: Field, a: int, b: int):
    base = quad_word(field, a, b)
    return [int(np.count_nonzero((base + h) % 3)) for h in range(3)]


def min_h(field: Field, a: int, b: int, allow_ties: bool = False):
    """The constant h making Tr(a x^2 + b x) + h lightest.

    With ``allow_ties`` the return value is ``(h, tied)``; otherwise a tie raises.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    w = _weights_by_h(field, a, b)
    best = min(w)
    hs = [h for h in range(3) if w[h] == best]
    if allow_ties:
        return hs[0], len(hs) > 1
    if len(hs) > 1:
        raise ConsistencyError(f"weights {w} tie for (a, b) = ({a}, {b})")
    return hs[0]


# -- minimum-weight supports ------------------------------------------------

@dataclass
class _Tables:
    field: Field
    tr: np.ndarray        # tr[c, x] = Tr(c x)
    sq: np.ndarray

    @classmethod
    def of(cls, field):
        return cls(field, field.trace_product_table(), field.square_table)


def base_h(field: Field) -> int:
    """The unique h for which Tr(x^2) + h is a minimum-weight word (odd m)."""
    return min_h(field, 1, 0)


def half_units(field: Field) -> np.ndarray:
    """One representative of each pair {a, -a} of nonzero elements."""
    a = np.arange(1, field.q)
    return a[a < field.neg_table[a]]


def _odd_batches(field: Field, a_values, h: int):
    t = _Tables.of(field)
    bs = field.elements()
    tr_b2 = field.trace(field.square_table).astype(np.uint8)
    for a in a_values:
        a = int(a)
        quad = t.tr[field.mul(a, a)][t.sq]                   # Tr(a^2 x^2)
        lin = t.tr[field.mul(field.mul(2, a), bs)]            # Tr(2ab x), one row per b
        vals = (lin + quad[None, :] + (tr_b2[:, None] + np.uint8(h))) % 3
        yield (vals != 0).astype(np.uint8)


def _even_scan(field: Field):
    """All minimum-weight supports by scanning every (a, b, h); also returns d and tie count."""
    t = _Tables.of(field)
    q = field.q
    best = q
    found = {}
    ties = 0
    for a in range(q):
        quad = t.tr[a][t.sq]
        vals = (t.tr + quad[None, :]) % 3                    # Tr(a x^2 + b x), row b
        per_h = np.stack([np.count_nonzero((vals + h) % 3, axis=1) for h in range(3)])
        if a == 0:
            per_h[0, 0] = q + 1                              # skip the zero word
        else:
            lo = per_h.min(axis=0)
            ties += int(((per_h == lo).sum(axis=0) > 1).sum())
        wmin = int(per_h.min())
        if wmin < best:
            best, found = wmin, {}
        if wmin == best:
            for h, b in zip(*np.nonzero(per_h == best)):
                row = (vals[b] + h) % 3 != 0
                found.setdefault(np.packbits(row).tobytes(), row.astype(np.uint8))
    return best, list(found.values()), ties


@dataclass
class SupportScan:
    d: int
    count: int
    ties: int = 0
    rows: list = dc_field(default_factory=list, repr=False)


_even_cache: dict = {}


def even_scan(field: Field) -> SupportScan:
    if field.m not in _even_cache:
        d, rows, ties = _even_scan(field)
        _even_cache[field.m] = SupportScan(d, len(rows), ties, rows)
    return _even_cache[field.m]


def support_batches(field: Field, a_values=None):
    """Dense 0/1 batches of the incidence rows of the minimum-weight design.

    Odd m uses the (ax+b)^2 parametrization with one row per (a, b) modulo
    (a, b) ~ (-a, -b); even m falls back to a full (a, b, h) scan with dedup.
    """
    if field.m % 2 == 1:
        a_values = half_units(field) if a_values is None else a_values
        yield from _odd_batches(field, a_values, base_h(field))
    else:
        rows = even_scan(field).rows
        for start in range(0, len(rows), 4096):
            yield np.array(rows[start:start + 4096])


def min_weight_supports(field: Field):
    """Stream the incidence rows as TritVec."""
    for batch in support_batches(field):
        for row in batch:
            yield TritVec.from_array(row)


def design_min_weight(field: Field) -> int:
    return min_weight(field.m) if field.m % 2 else even_scan(field).d


def min_weight_design(field: Field) -> Design:
    k = design_min_weight(field)
    blocks = []
    for batch in support_batches(field):
        blocks.extend(tuple(np.flatnonzero(r)) for r in batch)
    return Design(field.q, blocks, k=k)


def _shard_rank(args):
    m, a_values, deadline = args
    f = field_new(m)
    basis, done = stream_rank(support_batches(f, a_values), f.q, deadline)
    return [r.to_array() for r in basis.rows], done


def design_code_rank(field: Field, budget: float | None = None, workers: int = 1):
    """3-rank of the minimum-weight design, streamed. Returns (basis, complete)."""
    deadline = None if budget is None else time.monotonic() + budget
    if workers <= 1 or field.m % 2 == 0:
        return stream_rank(support_batches(field), field.q, deadline)
    reps = half_units(field)
    shards = [(field.m, reps[i::workers], deadline) for i in range(workers)]
    basis = SpanBasis(field.q)
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows, done in pool.map(_shard_rank, shards):
            complete &= done
            if rows:
                basis.insert_dense(np.array(rows))
    return basis, complete


def design_code(field: Field) -> LinearCode:
    """C_3(D_d(C(m,3))): the GF(3) row space of the minimum-weight design."""
    basis, _ = design_code_rank(field)
    return LinearCode(basis)


# -- cyclotomic structure -----------------------------------------------------

def exponent_sets(m: int):
    """The residue sets A, A1, B, C, C1 modulo 3^m - 1 (as ordered lists)."""
    n = 3**m - 1
    half = (m - 1) // 2
    a = [(-(2 * 3**i + 2)) % n for i in range(m)]
    b = [(-(2 * 3**i + 1)) % n for i in range(m)]
    c = [(-(3**i + 1)) % n for i in range(m)]
    return {"A": a, "A1": a[:half + 1], "B": b, "C": c, "C1": c[:half + 1]}


def coset_union(m: int):
    n = 3**m - 1
    sets = exponent_sets(m)
    out = set()
    for i in sets["A"] + sets["B"] + sets["C"]:
        out.update(cyclotomic_coset(i, n).members)
    return out


def design_code_dimension_via_cosets(m: int) -> int:
    if m < 2:
        raise ConfigurationError("need m >= 2")
    return len(coset_union(m)) + 1


def verify_coset_structure(m: int) -> dict:
    """Check the seven coset statements behind the dimension count (odd m >= 5)."""
    if m < 5 or m % 2 == 0:
        raise ConfigurationError("coset structure statements are for odd m >= 5")
    n = 3**m - 1
    sets = exponent_sets(m)
    cos = {i: set(cyclotomic_coset(i, n).members) for name in sets for i in sets[name]}

    def disjoint_within(xs):
        return all(not (cos[i] & cos[j]) for k, i in enumerate(xs) for j in xs[k + 1:] if i != j)

    def disjoint_across(xs, ys):
        return all(not (cos[i] & cos[j]) for i in xs for j in ys)

    def covered(rest, reps):
        pool = set().union(*(cos[i] for i in reps))
        return all(i in pool for i in rest)

    a_all, a1, b, c_all, c1 = (sets[k] for k in ("A", "A1", "B", "C", "C1"))
    coincide = [(i, j) for i, x in enumerate(a1) for j, y in enumerate(c1) if cos[x] & cos[y]]
    same = all(cos[a1[i]] == cos[c1[j]] for i, j in coincide)
    report = {
        "coset_sizes": all(len(cos[i]) == m for i in a_all + b + c_all),
        "B_disjoint": disjoint_within(b),
        "A1_disjoint_and_covers_A": disjoint_within(a1) and covered(a_all, a1),
        "C1_disjoint_and_covers_C": disjoint_within(c1) and covered(c_all, c1),
        "B_vs_A1_disjoint": disjoint_across(b, a1),
        "B_vs_C1_disjoint": disjoint_across(b, c1),
        "A1_vs_C1_single_coincidence": coincide == [(0, 1)] and same,
    }
    report["coincidence"] = coincide
    report["union_size"] = len(coset_union(m))
    report["count_formula"] = (len(a1) + len(c1) - 1 + len(b)) * m
    return report


def check_polynomial(field: Field):
    sets = exponent_sets(field.m)
    return product_of_distinct_minimal_polys(field, sets["A"] + sets["B"] + sets["C"])


def cyclic_design_code(field: Field) -> LinearCode:
    """Augmented extension of the cyclic code with check polynomial lcm(M_i, i in A u B u C),
    reordered into field-index coordinates."""
    cyc = cyclic_code_from_check(check_polynomial(field), field.n)
    return cyc.extend().augment().permute(cyclic_to_field_order(field))


# -- spanning families ------------------------------------------------------

def spanning_set_products(field: Field) -> np.ndarray:
    """Tr(ax^2)Tr(bx^2), Tr(ax^2)Tr(bx), Tr(ax)Tr(bx), Tr(bx) and 1 over basis pairs."""
    sq = np.array([trace_word(field, g, 2) for g in field.basis()], dtype=np.int64)
    lin = np.array([trace_word(field, g, 1) for g in field.basis()], dtype=np.int64)
    m = field.m
    rows = []
    for i in range(m):
        for j in range(i, m):
            rows.append(sq[i] * sq[j])
            rows.append(lin[i] * lin[j])
        for j in range(m):
            rows.append(sq[i] * lin[j])
    rows.extend(lin)
    rows.append(np.ones(field.q, dtype=np.int64))
    return (np.array(rows) % 3).astype(np.uint8)


def trace_rep_generators(field: Field) -> np.ndarray:
    """Tr(g x^(2*3^i+2)), Tr(g x^(2*3^i+1)), Tr(g x^(3^i+1)) over basis g, plus 1."""
    rows = []
    for i in range(field.m):
        for e in (2 * 3**i + 2, 2 * 3**i + 1, 3**i + 1):
            rows.extend(trace_word(field, g, e) for g in field.basis())
    rows.append(np.ones(field.q, dtype=np.uint8))
    return np.array(rows, dtype=np.uint8)


def family_span(field: Field, kind: str) -> LinearCode:
    """Span of one bilinear product family or its monomial trace counterpart.

    ``kind`` is one of lin.lin, sq.lin, sq.sq (products of traces) or
    e3j+1, e2*3j+1, e2*3j+2 (sums of Tr(c x^e) over the exponent family).
    """
    sq = [trace_word(field, g, 2).astype(np.int64) for g in field.basis()]
    lin = [trace_word(field, g, 1).astype(np.int64) for g in field.basis()]
    families = {"lin.lin": (lin, lin), "sq.lin": (sq, lin), "sq.sq": (sq, sq)}
    if kind in families:
        left, right = families[kind]
        rows = [x * y % 3 for x in left for y in right]
    else:
        expo = {"e3j+1": lambda j: 3**j + 1, "e2*3j+1": lambda j: 2 * 3**j + 1,
                "e2*3j+2": lambda j: 2 * 3**j + 2}[kind]
        rows = [trace_word(field, g, expo(j)) for j in range(field.m) for g in field.basis()]
    return LinearCode.from_array(np.array(rows), n=field.q)
