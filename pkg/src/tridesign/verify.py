"""Assmus-Mattson checker and the claim suite.

Every claim is a small function taking a per-m context and returning
``(status, detail)`` with status one of ``pass``, ``fail`` or ``flag``.
``run_suite`` runs the whole registry for each requested m, marks claims
outside their range as ``n/a`` and budget overruns as ``skip``.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import grm, quadcode as qc
from .codes import LinearCode, WeightEnumerator, check_affine_invariant, low_weight_codeword, macwilliams
from .designs import hamada_condition, is_t_design
from .gf3m import field_new

# -- Assmus-Mattson ---------------------------------------------------------


@dataclass
class AmReport:
    t: int
    d: int
    d_dual: int
    w: int
    w_dual: int
    s: int
    applies: bool
    code_design_weights: list
    dual_design_weights: list


def _am_bound(v: int, d: int, q: int) -> int:
    best = 0
    for w in range(v + 1):
        if w - (w + q - 2) // (q - 1) < d:
            best = w
    return best


def assmus_mattson(we: WeightEnumerator, we_dual: WeightEnumerator, t: int, q: int = 3) -> AmReport:
    """Apply the Assmus-Mattson theorem to a code and its dual.

    ``s`` counts nonzero dual weights 1 <= i <= v - t.  Design-holding weight
    lists are empty when the theorem does not apply.
    """
    if macwilliams(we) != we_dual:
        raise ValueError("the enumerators are not MacWilliams duals")
    v = we.n
    d, d_dual = we.min_weight(), we_dual.min_weight()
    if d is None or t >= d:
        raise ValueError(f"need t < d (t={t}, d={d})")
    w = _am_bound(v, d, q)
    w_dual = _am_bound(v, d_dual, q) if d_dual is not None else 0
    s = sum(1 for i in range(1, v - t + 1) if we_dual[i])
    applies = s <= d - t
    code_w, dual_w = [], []
    if applies:
        code_w = [i for i in range(d, w + 1) if we[i]]
        if d_dual is not None:
            dual_w = [i for i in range(d_dual, min(v - t, w_dual) + 1) if we_dual[i]]
    return AmReport(t, d, d_dual, w, w_dual, s, applies, code_w, dual_w)


# -- claim context ------------------------------------------------------------

EXAMPLE_CODE = {2: (9, 5, 4), 3: (27, 7, 15), 4: (81, 9, 48)}
EXAMPLE_DESIGN_CODE = {2: (9, 9, 1), 3: (27, 19, 6), 4: (81, 33, 21)}

DESIGN_CODE_ENUMERATOR_M3 = {
    0: 1, 6: 5148, 7: 14742, 8: 84240, 9: 370500, 10: 1314144, 11: 4081428, 12: 10838880,
    13: 25050870, 14: 49975380, 15: 87147918, 16: 129957048, 17: 168370488, 18: 187697640,
    19: 177251490, 20: 141674832, 21: 94909698, 22: 51504336, 23: 22428900, 24: 7492680,
    25: 1796418, 26: 273780, 27: 20906,
}

SAMPLES = 100


class Context:
    """Lazily built objects shared by the claims for one m."""

    def __init__(self, m: int, deadline: float | None = None, workers: int = 1, seed: int = 0):
        self.m = m
        self.deadline = deadline
        self.workers = workers
        self.rng = np.random.default_rng(seed + m)
        self.rank_complete = True

    @cached_property
    def field(self):
        return field_new(self.m)

    @cached_property
    def code(self):
        return qc.build_code(self.field)

    @cached_property
    def enumerator(self):
        return self.code.weight_distribution(workers=self.workers)

    @cached_property
    def design(self):
        return qc.min_weight_design(self.field)

    @cached_property
    def design_basis(self):
        budget = None if self.deadline is None else max(self.deadline - time.monotonic(), 0.0)
        basis, complete = qc.design_code_rank(self.field, budget=budget, workers=self.workers)
        self.rank_complete = complete
        return basis

    @cached_property
    def design_code(self):
        return LinearCode(self.design_basis)

    def sample_units(self, count=SAMPLES):
        return self.rng.integers(1, self.field.q, size=count)

    def sample_elements(self, count=SAMPLES):
        return self.rng.integers(0, self.field.q, size=count)

    def tr(self, c, e=1):
        return qc.trace_word(self.field, int(c), e).astype(np.int64)


@dataclass
class Claim:
    id: str
    statement: str
    applies: object
    check: object


def _ok(cond, detail=""):
    return ("pass" if cond else "fail"), detail


# -- claims -------------------------------------------------------------------

def c_field_sums(ctx):
    f = ctx.field
    xs = f.elements()
    s1 = s2 = 0
    for x in xs:
        s1 = f.add(s1, int(x))
        s2 = f.add(s2, int(f.square_table[x]))
    return _ok(s1 == 0 and s2 == 0, f"sum x = {s1}, sum x^2 = {s2}")


def c_code_dimension(ctx):
    return _ok(ctx.code.k == 2 * ctx.m + 1, f"k = {ctx.code.k}")


def c_code_example(ctx):
    n, k, d = EXAMPLE_CODE[ctx.m]
    got = (ctx.code.n, ctx.code.k, ctx.enumerator.min_weight())
    return _ok(got == (n, k, d), f"[n,k,d] = {list(got)}")


def c_closed_form(ctx):
    cf = qc.table1_distribution(ctx.m)
    return _ok(ctx.enumerator == cf, ctx.enumerator.polynomial())


def c_dual_distance(ctx):
    d = macwilliams(qc.table1_distribution(ctx.m)).min_weight()
    return _ok(d == 5, f"dual minimum distance {d}")


def c_all_one_in_dual(ctx):
    g = ctx.code.generator_matrix().astype(np.int64)
    return _ok(not (g.sum(axis=1) % 3).any(), "every generator sums to 0")


def c_code_affine(ctx):
    return _ok(check_affine_invariant(ctx.code, ctx.field))


def c_min_h_unique(ctx):
    f = ctx.field
    d = qc.min_weight(ctx.m)
    tables = f.trace_product_table()
    total = 0
    for a in range(1, f.q):
        vals = (tables + tables[a][f.square_table][None, :]) % 3
        w = np.stack([np.count_nonzero((vals + h) % 3, axis=1) for h in range(3)])
        hits = (w == d).sum(axis=0)
        if (hits != 1).any():
            return "fail", f"a = {a}: some b has {int(hits.max())} or 0 minimum-weight constants"
        total += int(hits.sum())
    return _ok(total == f.q * (f.q - 1), f"{total} minimum-weight codewords")


def c_min_h_even(ctx):
    scan = qc.even_scan(ctx.field)
    return "flag", f"d = {scan.d}, distinct supports {scan.count}, tied (a,b) pairs {scan.ties}"


def c_h_shift(ctx):
    f = ctx.field
    h = qc.base_h(f)
    d = qc.min_weight(ctx.m)
    xs = f.elements()
    for a, b in zip(ctx.sample_units(), ctx.sample_elements()):
        lin = f.add(f.mul(int(a), xs), int(b))
        word = (f.trace(f.square_table[lin]) + h) % 3
        if np.count_nonzero(word) != d:
            return "fail", f"(a,b) = ({a},{b})"
    return "pass", f"h = {h}"


def c_design_params(ctx):
    d = qc.min_weight(ctx.m)
    lam = is_t_design(ctx.design, 2)
    want = (ctx.field.q * (ctx.field.q - 1) // 2, d, d * (d - 1) // 2)
    got = (ctx.design.b, ctx.design.k, lam)
    return _ok(got == want, f"b, k, lambda = {got}")


def c_design_params_even(ctx):
    lam = is_t_design(ctx.design, 2)
    return "flag", f"2-({ctx.design.v},{ctx.design.k},{lam}) with b = {ctx.design.b}"


def c_hamada(ctx):
    lam = is_t_design(ctx.design, 2)
    if lam is None:
        return "fail", "not a 2-design"
    if ctx.design_code.k >= ctx.design.v - 1:
        return "pass", "full or near-full rank: no condition"
    return _ok(hamada_condition(ctx.design, lam), f"lambda1 - lambda2 = {ctx.design.b * ctx.design.k // ctx.design.v - lam}")


def c_rank(ctx):
    r = ctx.design_basis.rank
    if not ctx.rank_complete:
        return "skip", f"budget exhausted, partial rank {r}"
    return _ok(r == 2 * ctx.m**2 + 1, f"3-rank {r}")


def c_rank_cosets(ctx):
    dim = qc.design_code_dimension_via_cosets(ctx.m)
    r = ctx.design_basis.rank
    if not ctx.rank_complete:
        return "skip", f"coset dimension {dim}, partial rank {r}"
    return _ok(dim == r, f"coset dimension {dim}, rank {r}")


def c_coset_bullets(ctx):
    rep = qc.verify_coset_structure(ctx.m)
    bullets = {k: v for k, v in rep.items() if isinstance(v, bool)}
    bad = [k for k, v in bullets.items() if not v]
    ok = not bad and rep["union_size"] == rep["count_formula"] == 2 * ctx.m**2
    return _ok(ok, f"failed: {bad}" if bad else f"union {rep['union_size']} = 2m^2")


def c_design_example(ctx):
    n, k, d = EXAMPLE_DESIGN_CODE[ctx.m]
    code = ctx.design_code
    if (code.n, code.k) != (n, k):
        return "fail", f"[{code.n},{code.k}]"
    if ctx.m == 4:
        w = low_weight_codeword(code, d, seed=ctx.m)
        ok = w is not None and np.count_nonzero(w) == d and w in code
        return ("flag" if ok else "fail"), "weight-21 word exhibited; exact distance beyond guard"
    got = code.min_distance()
    return _ok(got == d, f"[{code.n},{code.k},{got}]")


def c_design_enumerator(ctx):
    we = macwilliams(ctx.design_code.dual().weight_distribution())
    want = WeightEnumerator.from_dict(27, 19, DESIGN_CODE_ENUMERATOR_M3)
    return _ok(we == want, we.polynomial())


def c_design_distance_bound(ctx):
    bound = 3 ** (ctx.m - 2)
    r4 = grm.grm_code(ctx.field, 4)
    sub = ctx.design_code.is_subcode_of(r4)
    formula = grm.grm_min_distance(grm.GrmParams(3, ctx.m, 4))
    ok = sub and formula == bound
    if ctx.m == 3:
        d = ctx.design_code.min_distance()
        return _ok(ok and d >= bound, f"d = {d} >= {bound}")
    return _ok(ok, f"subcode of R_3(4,{ctx.m}), whose distance is {formula}")


def c_grm_subcode(ctx):
    return _ok(ctx.design_code.is_subcode_of(grm.grm_code(ctx.field, 4)))


def _same_as_design(ctx, rows):
    other = LinearCode.from_array(rows, n=ctx.field.q)
    eq = other == ctx.design_code
    if eq:
        return "pass", f"dimension {other.k}"
    # outside the theorem's range a mismatch is reported, not failed
    status = "flag" if ctx.m < 5 else "fail"
    return status, f"span dimension {other.k} vs {ctx.design_code.k}"


def c_trace_rep(ctx):
    return _same_as_design(ctx, qc.trace_rep_generators(ctx.field))


def c_product_span(ctx):
    status, detail = _same_as_design(ctx, qc.spanning_set_products(ctx.field))
    if status != "pass":
        return status, detail
    # bilinearity check: random (a, b) products stay inside
    rows = []
    for a, b in zip(ctx.sample_elements(20), ctx.sample_elements(20)):
        rows += [ctx.tr(a, 2) * ctx.tr(b, 2), ctx.tr(a, 2) * ctx.tr(b), ctx.tr(a) * ctx.tr(b)]
    return _ok(ctx.design_code.contains_all(np.array(rows) % 3), detail)


def c_cyclic_equivalence(ctx):
    cyc = qc.cyclic_design_code(ctx.field)
    return _ok(cyc == ctx.design_code, f"augmented extended cyclic code dimension {cyc.k}")


def c_design_affine(ctx):
    return _ok(check_affine_invariant(ctx.design_code, ctx.field))


def c_span_equalities(ctx):
    out = []
    for left, right in (("lin.lin", "e3j+1"), ("sq.lin", "e2*3j+1"), ("sq.sq", "e2*3j+2")):
        a, b = qc.family_span(ctx.field, left), qc.family_span(ctx.field, right)
        out.append(a == b)
    return _ok(all(out), f"{out}")


def c_square_expansion(ctx):
    f = ctx.field
    xs = f.elements()
    for a, b, h in zip(ctx.sample_units(), ctx.sample_elements(), ctx.rng.integers(0, 3, SAMPLES)):
        a, b, h = int(a), int(b), int(h)
        lhs = (f.trace(f.square_table[f.add(f.mul(a, xs), b)]) + h) ** 2 % 3
        u = ctx.tr(f.mul(a, a), 2)
        v = ctx.tr(f.mul(a, b))
        c = (f.trace(f.mul(b, b)) + h) % 3
        rhs = (u * u + v * v + c * c + u * v - c * u + c * v) % 3
        if not np.array_equal(lhs, rhs):
            return "fail", f"(a,b,h) = ({a},{b},{h})"
    return "pass", f"{SAMPLES} samples"


def c_indicator_square(ctx):
    f = ctx.field
    for a, b, h in zip(ctx.sample_units(20), ctx.sample_elements(20), ctx.rng.integers(0, 3, 20)):
        word = qc.quad_word(f, int(a), int(b), int(h)).astype(np.int64)
        if not np.array_equal((word != 0).astype(np.int64), word**2 % 3):
            return "fail", ""
    return "pass", "20 samples"


def c_half_sums(ctx):
    # the difference and the sum of the two (ax +/- b) expansions stay in the design code
    f = ctx.field
    h = qc.base_h(f)
    rows = []
    for a, c in zip(ctx.sample_units(30), ctx.sample_elements(30)):
        a, c = int(a), int(c)
        u = ctx.tr(f.mul(a, a), 2)
        v = ctx.tr(c)
        k = (f.trace(f.square_table[f.div(c, a)]) + h) % 3
        rows.append(u * v + k * v)
        rows.append(u * u + v * v + k * k - k * u)
    return _ok(ctx.design_code.contains_all(np.array(rows) % 3), "30 samples each")


def c_trace_averages(ctx):
    f = ctx.field
    s1 = np.zeros(f.q, dtype=np.int64)
    s3 = np.zeros(f.q, dtype=np.int64)
    b = int(ctx.sample_units(1)[0])
    s2 = np.zeros(f.q, dtype=np.int64)
    for a in range(1, f.q):
        t2 = ctx.tr(f.mul(a, a), 2)
        s1 += t2 * t2
        s3 += t2
        cf = ctx.tr(f.mul(a, b))
        s2 += cf * cf
    ok = not (s1 % 3).any() and not (s2 % 3).any() and not (s3 % 3).any()
    return _ok(ok, f"b = {b}")


def _differences_cover(f, s):
    s = np.asarray(s, dtype=np.int64)
    diffs = np.unique(f.sub(s[:, None], s[None, :]))
    return len(diffs) == f.q


def c_quadric_differences(ctx):
    f = ctx.field
    tables = f.trace_product_table()
    for a, h in zip(ctx.sample_units(20), ctx.rng.integers(0, 3, 20)):
        hs = np.flatnonzero((tables[int(a)][f.square_table] + h) % 3 == 0)
        if set(f.neg(hs).tolist()) != set(hs.tolist()) or not _differences_cover(f, hs):
            return "fail", f"(a,h) = ({a},{h})"
    return "pass", "20 samples"


def c_square_differences(ctx):
    qs, ns = ctx.field.squares()
    return _ok(_differences_cover(ctx.field, qs) and _differences_cover(ctx.field, ns))


def _membership(ctx, rows):
    return _ok(ctx.design_code.contains_all(np.array(rows) % 3), f"{len(rows)} words")


def _basis_and_samples(ctx, count=SAMPLES):
    basis = ctx.field.basis()
    pairs = [(x, y) for x in basis for y in basis]
    pairs += list(zip(ctx.sample_elements(count).tolist(), ctx.sample_elements(count).tolist()))
    return pairs


def c_one_in_code(ctx):
    return _ok(np.ones(ctx.field.q, dtype=np.uint8) in ctx.design_code)


def c_sq_lin(ctx):
    return _membership(ctx, [ctx.tr(a, 2) * ctx.tr(c) for a, c in _basis_and_samples(ctx)])


def c_lin(ctx):
    return _membership(ctx, [ctx.tr(c) for c, _ in _basis_and_samples(ctx)])


def c_lin_lin(ctx):
    return _membership(ctx, [ctx.tr(a) * ctx.tr(b) for a, b in _basis_and_samples(ctx)])


def c_lin_squared(ctx):
    return _membership(ctx, [ctx.tr(a) ** 2 for a, _ in _basis_and_samples(ctx)])


def c_sq(ctx):
    return _membership(ctx, [ctx.tr(a, 2) for a, _ in _basis_and_samples(ctx)])


def c_sq_sq(ctx):
    return _membership(ctx, [ctx.tr(a, 2) * ctx.tr(b, 2) for a, b in _basis_and_samples(ctx)])


def c_am(ctx):
    cf = qc.table1_distribution(ctx.m)
    rep = assmus_mattson(macwilliams(cf), cf, 2)
    want = [w for w in cf.nonzero() if 0 < w < ctx.field.q]
    ok = rep.applies and rep.dual_design_weights == want and rep.s <= rep.d - rep.t
    return _ok(ok, f"s = {rep.s}, weights {rep.dual_design_weights}")


def c_grm_dimensions(ctx):
    bad = []
    for order in range(2 * ctx.m):
        p = grm.GrmParams(3, ctx.m, order)
        if grm.grm_dimension(p) != grm.grm_code(ctx.field, order).k:
            bad.append(order)
    return _ok(not bad, f"mismatched orders {bad}" if bad else f"orders 0..{2 * ctx.m - 1}")


def c_grm_punctured(ctx):
    perm = grm.cyclic_to_field_order(ctx.field)
    bad = [o for o in range(2 * ctx.m)
           if grm.punctured_grm(ctx.field, o).extend().permute(perm) != grm.grm_code(ctx.field, o)]
    return _ok(not bad, f"mismatched orders {bad}")


def c_grm_min_weight_count(ctx):
    p = grm.GrmParams(3, 3, 4)
    formula = grm.grm_min_weight_count(p)
    dual = grm.grm_code(ctx.field, grm.grm_dual_order(p))
    we = macwilliams(dual.weight_distribution())
    d = we.min_weight()
    return _ok(formula == we[d] == 234 and d == 3 == 3 ** (ctx.m - 2), f"A_{d} = {we[d]}, formula {formula}")


def c_grm_dual(ctx):
    bad = []
    for order in range(2 * ctx.m):
        p = grm.GrmParams(3, ctx.m, order)
        if grm.grm_code(ctx.field, order).dual() != grm.grm_code(ctx.field, grm.grm_dual_order(p)):
            bad.append(order)
    return _ok(not bad, f"mismatched orders {bad}")


def _odd(lo, hi=7):
    return lambda m: lo <= m <= hi and m % 2 == 1


def _rng(lo, hi=7):
    return lambda m: lo <= m <= hi


def _in(*ms):
    return lambda m: m in ms


REGISTRY = [
    Claim("field.sums", "sum of x and of x^2 over GF(q) vanish", _rng(2), c_field_sums),
    Claim("code.dimension", "C(m,3) has dimension 2m+1", _rng(2), c_code_dimension),
    Claim("code.example", "C(m,3) parameters for m = 2, 3, 4", _in(2, 3, 4), c_code_example),
    Claim("code.closed_form", "closed-form weight distribution of C(m,3), odd m", _odd(3, 5), c_closed_form),
    Claim("code.dual_distance", "dual of C(m,3) has minimum distance 5", _odd(3), c_dual_distance),
    Claim("code.all_one_in_dual", "all-one word is orthogonal to C(m,3)", _rng(2), c_all_one_in_dual),
    Claim("code.affine_invariant", "C(m,3) is affine-invariant", _rng(2, 5), c_code_affine),
    Claim("code.min_h_unique", "each (a,b), a != 0, has exactly one minimum-weight h; q(q-1) words",
          _odd(3, 5), c_min_h_unique),
    Claim("code.min_h_even", "even m: minimum-weight scan (ties reported)", _in(2, 4, 6), c_min_h_even),
    Claim("code.h_shift", "Tr((ax+b)^2)+h has minimum weight for the fixed h", _odd(3), c_h_shift),
    Claim("code.assmus_mattson", "Assmus-Mattson applies; every weight below q holds 2-designs",
          _odd(3), c_am),
    Claim("design.parameters", "support design is 2-(q, d, d(d-1)/2) with q(q-1)/2 blocks",
          _odd(3, 5), c_design_params),
    Claim("design.parameters_even", "even m support design parameters (report)", _in(2, 4), c_design_params_even),
    Claim("design.hamada", "3 divides lambda1 - lambda2 when the 3-rank is below v - 1", _rng(2, 5), c_hamada),
    Claim("rank.value", "3-rank of the design is 2m^2 + 1", _rng(2), c_rank),
    Claim("rank.cosets", "cyclotomic-coset dimension equals the computed rank", _rng(2), c_rank_cosets),
    Claim("cosets.bullets", "seven coset statements and the 2m^2 count", _odd(5), c_coset_bullets),
    Claim("design_code.example", "design code parameters for m = 2, 3, 4", _in(2, 3, 4), c_design_example),
    Claim("design_code.enumerator", "22-term weight enumerator of the m = 3 design code", _in(3),
          c_design_enumerator),
    Claim("design_code.distance_bound", "minimum distance at least 3^(m-2)", _rng(3), c_design_distance_bound),
    Claim("design_code.grm_subcode", "design code lies in R_3(4, m)", _rng(3), c_grm_subcode),
    Claim("design_code.trace_rep", "trace representation spans the design code", _rng(3, 5), c_trace_rep),
    Claim("design_code.product_span", "trace products, traces and 1 span the design code", _rng(3, 5),
          c_product_span),
    Claim("design_code.cyclic", "augmented extended cyclic code equals the design code", _rng(3, 5),
          c_cyclic_equivalence),
    Claim("design_code.affine_invariant", "design code is affine-invariant", _rng(2, 5), c_design_affine),
    Claim("span.equalities", "trace-product spans equal monomial trace spans", _rng(2, 5), c_span_equalities),
    Claim("identity.square_expansion", "six-term expansion of (Tr((ax+b)^2)+h)^2", _rng(2), c_square_expansion),
    Claim("identity.indicator_square", "support indicator equals the square in GF(3)", _rng(2),
          c_indicator_square),
    Claim("identity.half_sums", "difference and sum of the +b/-b expansions lie in the design code",
          _odd(3), c_half_sums),
    Claim("lemma.trace_averages", "sums over a of Tr(a^2x^2)^2, Tr(abx)^2, Tr(a^2x^2) vanish", _odd(3),
          c_trace_averages),
    Claim("lemma.quadric_differences", "H(a,h) = -H(a,h) and its differences cover GF(q)", _rng(4),
          c_quadric_differences),
    Claim("lemma.square_differences", "differences of squares / nonsquares cover GF(q)", _rng(3),
          c_square_differences),
    Claim("lemma.one_in_code", "all-one word lies in the design code", _rng(4), c_one_in_code),
    Claim("lemma.sq_lin", "Tr(ax^2)Tr(cx) lies in the design code", _odd(5), c_sq_lin),
    Claim("lemma.lin", "Tr(cx) lies in the design code", _rng(4), c_lin),
    Claim("lemma.lin_lin", "Tr(b1x)Tr(b2x) lies in the design code", _rng(4), c_lin_lin),
    Claim("lemma.lin_squared", "Tr(ax)^2 lies in the design code", _rng(4), c_lin_squared),
    Claim("lemma.sq", "Tr(ax^2) lies in the design code", _rng(4), c_sq),
    Claim("lemma.sq_sq", "Tr(b1x^2)Tr(b2x^2) lies in the design code", _odd(5), c_sq_sq),
    Claim("grm.dimensions", "GRM dimension formula equals the construction", _rng(2, 4), c_grm_dimensions),
    Claim("grm.punctured", "extended punctured GRM equals the evaluation construction", _rng(2, 3),
          c_grm_punctured),
    Claim("grm.duality", "dual of R_3(l,m) is R_3(2m-1-l,m)", _rng(2, 3), c_grm_dual),
    Claim("grm.min_weight_count", "R_3(4,3) has 234 words of weight 3", _in(3), c_grm_min_weight_count),
]


@dataclass
class ClaimResult:
    id: str
    m: int
    statement: str
    status: str
    detail: str
    elapsed: float


@dataclass
class SuiteReport:
    m_list: list
    entries: list = dc_field(default_factory=list)

    @property
    def failed(self):
        return [e for e in self.entries if e.status == "fail"]

    def exit_code(self):
        return 1 if self.failed else 0

    def to_json(self) -> str:
        # timings are left out so that reports are byte-identical across runs
        rows = [{k: v for k, v in asdict(e).items() if k != "elapsed"} for e in self.entries]
        return json.dumps({"m": self.m_list, "entries": rows}, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "id", "status", "statement", "detail"])
        for e in self.entries:
            w.writerow([e.m, e.id, e.status, e.statement, e.detail])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            lines.append(f"m={e.m}  {e.status:<4}  {e.id:<32} {e.detail}")
        counts = {}
        for e in self.entries:
            counts[e.status] = counts.get(e.status, 0) + 1
        lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
        return "\n".join(lines)


def run_suite(m_list, budget: float | None = None, workers: int = 1, seed: int = 0,
              progress=None) -> SuiteReport:
    """Run every registered claim for each m in ``m_list`` (each in [2, 7])."""
    for m in m_list:
        if not 2 <= m <= 7:
            raise ValueError(f"m must lie in [2, 7], got {m}")
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    report = SuiteReport(list(m_list))
    for m in m_list:
        ctx = Context(m, deadline=deadline, workers=workers, seed=seed)
        for claim in REGISTRY:
            t0 = time.monotonic()
            if not claim.applies(m):
                status, detail = "n/a", "outside the claim's range of m"
            elif deadline is not None and t0 > deadline:
                status, detail = "skip", "time budget exhausted"
            else:
                try:
                    status, detail = claim.check(ctx)
                except Exception as exc:  # a crash is a failed claim, not a crashed suite
                    status, detail = "fail", f"{type(exc).__name__}: {exc}"
            entry = ClaimResult(claim.id, m, claim.statement, status, detail, time.monotonic() - t0)
            report.entries.append(entry)
            if progress is not None:
                progress(entry)
    return report
