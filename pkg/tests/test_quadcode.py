import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tridesign import quadcode as qc
from tridesign.codes import LinearCode, macwilliams
from tridesign.designs import is_t_design, support_design
from tridesign.errors import ConfigurationError, ConsistencyError
from tridesign.gf3m import field_new
from tridesign.poly3 import cyclotomic_coset

import oracles


def _trace_word_oracle(f, c, e):
    return [oracles.gf_trace(oracles.gf_mul(c, oracles.gf_pow(x, e, f.modulus), f.modulus), f.modulus)
            for x in range(f.q)]


@pytest.mark.parametrize("c,e", [(1, 1), (5, 2), (7, 4), (20, 7)])
def test_trace_word_against_oracle(f3, c, e):
    assert qc.trace_word(f3, c, e).tolist() == _trace_word_oracle(f3, c, e)


def test_code_parameters(code3):
    assert (code3.n, code3.k) == (27, 7)
    assert np.ones(27, dtype=np.uint8) in code3


@pytest.mark.parametrize("m", [3, 5])
def test_table_formula_equals_enumeration(m):
    f = field_new(m)
    assert qc.build_code(f).weight_distribution() == qc.table1_distribution(m)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_table_formula_is_consistent(m):
    we = qc.table1_distribution(m)
    assert we.min_weight() == qc.min_weight(m)
    assert macwilliams(we).min_weight() == 5


def test_table_formula_rejects_even():
    with pytest.raises(ConfigurationError):
        qc.table1_distribution(4)


def test_quad_word_weights_are_code_words(f3, code3):
    for a, b, h in [(1, 0, 0), (5, 3, 1), (26, 11, 2)]:
        assert qc.quad_word(f3, a, b, h) in code3


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 242), st.integers(0, 242))
def test_min_h_unique_for_odd_m(a, b):
    f = field_new(5)
    h = qc.min_h(f, a, b)
    w = np.count_nonzero(qc.quad_word(f, a, b, h))
    assert w == qc.min_weight(5)
    others = [np.count_nonzero(qc.quad_word(f, a, b, g)) for g in range(3) if g != h]
    assert min(others) > w


def test_min_h_ties_on_even_m():
    f = field_new(4)
    tied = sum(qc.min_h(f, a, 0, allow_ties=True)[1] for a in range(1, f.q))
    assert tied > 0
    a = next(a for a in range(1, f.q) if qc.min_h(f, a, 0, allow_ties=True)[1])
    with pytest.raises(ConsistencyError):
        qc.min_h(f, a, 0)


@pytest.mark.parametrize("m", [2, 3])
def test_design_equals_enumerated_support_design(m):
    f = field_new(m)
    code = qc.build_code(f)
    d_enum = support_design(code, code.min_distance())
    assert sorted(qc.min_weight_design(f).blocks) == d_enum.blocks


def test_design_parameters(design3):
    assert (design3.v, design3.k, design3.b) == (27, 15, 351)
    assert is_t_design(design3, 2) == oracles.lambda_by_pairs(27, design3.blocks) == 105


def test_half_units(f3):
    half = qc.half_units(f3)
    assert len(half) == 13
    assert set(half.tolist()) | {int(f3.neg(a)) for a in half} == set(range(1, 27))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_rank_against_oracle(m):
    f = field_new(m)
    design = qc.min_weight_design(f)
    basis, complete = qc.design_code_rank(f)
    assert complete
    assert basis.rank == oracles.rank_mod3(design.incidence_matrix().tolist()) == 2 * m * m + 1


def test_rank_with_workers_agrees():
    f = field_new(5)
    assert qc.design_code_rank(f, workers=2)[0].rank == qc.design_code_rank(f)[0].rank == 51


def test_budget_exhaustion_reports_partial():
    basis, complete = qc.design_code_rank(field_new(5), budget=0.0)
    assert not complete and basis.rank <= 51


def _union_by_brute_force(m):
    """Exponents e with e = -(3^i + 3^j) style members, found by scanning every residue."""
    n = 3**m - 1
    targets = set()
    for i in range(m):
        for base in (2 * 3**i + 2, 2 * 3**i + 1, 3**i + 1):
            targets.add((-base) % n)
    return {e for e in range(n) if any((e * 3**s) % n in targets for s in range(m))}


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
def test_coset_union_dimension(m):
    assert qc.coset_union(m) == _union_by_brute_force(m)
    assert qc.design_code_dimension_via_cosets(m) == 2 * m * m + 1


@pytest.mark.parametrize("m", [5, 7, 9])
def test_coset_statements(m):
    rep = qc.verify_coset_structure(m)
    assert all(v for k, v in rep.items() if isinstance(v, bool))
    assert rep["coincidence"] == [(0, 1)]
    assert rep["union_size"] == rep["count_formula"] == 2 * m * m


def test_coset_coincidence_residue():
    sets = qc.exponent_sets(5)
    n = 3**5 - 1
    assert sets["A1"][0] == sets["C1"][1] == (-4) % n
    assert cyclotomic_coset(sets["A1"][0], n).members == cyclotomic_coset(sets["C1"][1], n).members


def test_coset_statements_range():
    with pytest.raises(ConfigurationError):
        qc.verify_coset_structure(4)


@pytest.mark.parametrize("m", [3, 4])
def test_cyclic_and_trace_forms_equal_design_code(m, design_code3, design_code4):
    f = field_new(m)
    dc = design_code3 if m == 3 else design_code4
    assert qc.cyclic_design_code(f) == dc
    assert LinearCode.from_array(qc.trace_rep_generators(f)) == dc
    assert LinearCode.from_array(qc.spanning_set_products(f)) == dc


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("left,right", [("lin.lin", "e3j+1"), ("sq.lin", "e2*3j+1"), ("sq.sq", "e2*3j+2")])
def test_family_spans(m, left, right):
    f = field_new(m)
    assert qc.family_span(f, left) == qc.family_span(f, right)


def test_design_code_contains_code(code3, design_code3):
    # every minimum-weight indicator is a sum of squared codewords, so C(m,3) words square into it
    for row in code3.generator_matrix().astype(int):
        assert (row * row) % 3 in design_code3


def test_even_scan_counts():
    scan = qc.even_scan(field_new(4))
    assert (scan.d, scan.count) == (48, 1620)
