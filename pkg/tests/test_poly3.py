import pytest
from hypothesis import given, settings, strategies as st

from tridesign.gf3m import field_new
from tridesign.poly3 import (
    all_cyclotomic_cosets, cyclic_code_from_check, cyclic_code_from_generator, cyclotomic_coset,
    degree, lcm_polys, minimal_polynomial, padd, pdivmod, peval, pgcd, pmul, product_of_distinct_minimal_polys,
    psub, qary_weight, trim, x_pow_minus_one,
)

import oracles

polys = st.lists(st.integers(0, 2), max_size=9).map(trim)
nonzero_polys = polys.filter(bool)


@settings(max_examples=200, deadline=None)
@given(polys, nonzero_polys)
def test_division_identity(a, b):
    quo, rem = pdivmod(a, b)
    assert padd(pmul(quo, b), rem) == trim(a)
    assert degree(rem) < degree(b)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_add_sub_inverse(a, b):
    assert psub(padd(a, b), b) == trim(a)


@settings(max_examples=100, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_and_lcm_is_multiple(a, b):
    g = pgcd(a, b)
    assert pdivmod(a, g)[1] == () and pdivmod(b, g)[1] == ()
    m = lcm_polys([a, b])
    assert pdivmod(m, a)[1] == () and pdivmod(m, b)[1] == ()
    assert m[-1] == 1


def test_lcm_rejects_empty_and_zero():
    with pytest.raises(ValueError):
        lcm_polys([])
    with pytest.raises(ValueError):
        lcm_polys([(1, 1), ()])


def test_trim_and_degree():
    assert trim([1, 0, 0]) == (1,)
    assert degree(()) == -1
    assert x_pow_minus_one(3) == (2, 0, 0, 1)


@pytest.mark.parametrize("n", [8, 13, 26, 80])
def test_cyclotomic_cosets_partition(n):
    cosets = all_cyclotomic_cosets(n)
    members = sorted(x for c in cosets for x in c.members)
    assert members == list(range(n))
    for c in cosets:
        assert {(3 * x) % n for x in c.members} == set(c.members)


def test_coset_example():
    c = cyclotomic_coset(1, 26)
    assert c.members == (1, 3, 9)
    assert 29 in c


@pytest.mark.parametrize("m", [2, 3, 4])
def test_minimal_polynomial_roots(m):
    f = field_new(m)
    beta = f.primitive_element()
    for c in all_cyclotomic_cosets(f.n):
        p = minimal_polynomial(f, c.representative)
        assert len(p) - 1 == len(c)
        for j in range(f.n):
            root = peval(f, p, f.pow(beta, j)) == 0
            assert root == (j in c)


def test_minimal_polynomial_of_beta_is_modulus():
    f = field_new(3)
    assert minimal_polynomial(f, 1) == f.modulus


def test_product_divides_x_n_minus_one():
    f = field_new(3)
    g = product_of_distinct_minimal_polys(f, [1, 2, 3, 4])  # 1 and 3 share a coset; three cosets
    assert pdivmod(x_pow_minus_one(f.n), g)[1] == ()
    assert degree(g) == 9


@pytest.mark.parametrize("j,w", [(0, 0), (1, 1), (8, 4), (26, 6), (13, 3)])
def test_qary_weight(j, w):
    assert qary_weight(j) == w


def test_qary_weight_range():
    with pytest.raises(ValueError):
        qary_weight(27, m=3)


def test_cyclic_code_dimension_and_shift_invariance():
    f = field_new(2)
    g = minimal_polynomial(f, 1)
    code = cyclic_code_from_generator(g, f.n)
    assert code.k == f.n - degree(g)
    gen = code.generator_matrix()
    import numpy as np
    assert code.contains_all(np.roll(gen, 1, axis=1))
    h = pdivmod(x_pow_minus_one(f.n), g)[0]
    assert cyclic_code_from_check(h, f.n) == code


def test_cyclic_code_bad_generator():
    with pytest.raises(ValueError):
        cyclic_code_from_generator((1, 1, 1, 1, 1), 8)


def test_cyclic_ternary_golay():
    # the ternary Golay code: x^11 - 1 has factors of degree 5
    g = (2, 0, 1, 2, 1, 1)
    code = cyclic_code_from_generator(g, 11)
    assert (code.n, code.k) == (11, 6)
    counts = oracles.brute_force_enumerator(code.generator_matrix().tolist())
    assert min(w for w in range(1, 12) if counts[w]) == 5
