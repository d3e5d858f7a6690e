from itertools import product

import numpy as np
import pytest

from tridesign import grm
from tridesign.codes import macwilliams
from tridesign.errors import ConfigurationError
from tridesign.gf3m import field_new

CASES = [(m, order) for m in (1, 2, 3) for order in range(2 * m)]


def _dimension_by_counting(m, order):
    return sum(1 for e in product(range(3), repeat=m) if sum(e) <= order)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_dimension_formula_counts_monomials(m):
    for order in range(2 * m):
        assert grm.grm_dimension(grm.GrmParams(3, m, order)) == _dimension_by_counting(m, order)


@pytest.mark.parametrize("m,order", CASES + [(4, o) for o in range(8)])
def test_construction_dimension(m, order):
    code = grm.grm_code(field_new(m), order)
    assert code.k == grm.grm_dimension(grm.GrmParams(3, m, order))


@pytest.mark.parametrize("m,order", CASES)
def test_min_distance_formula(m, order):
    code = grm.grm_code(field_new(m), order)
    assert code.min_distance() == grm.grm_min_distance(grm.GrmParams(3, m, order))


@pytest.mark.parametrize("m,order", [c for c in CASES if c[0] >= 2])
def test_extended_punctured_equals_evaluation(m, order):
    f = field_new(m)
    ext = grm.punctured_grm(f, order).extend().permute(grm.cyclic_to_field_order(f))
    assert ext == grm.grm_code(f, order)


@pytest.mark.parametrize("m,order", CASES)
def test_duality(m, order):
    f = field_new(m)
    p = grm.GrmParams(3, m, order)
    assert grm.grm_code(f, order).dual() == grm.grm_code(f, grm.grm_dual_order(p))


@pytest.mark.parametrize("m,order", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 4)])
def test_min_weight_count(m, order):
    f = field_new(m)
    p = grm.GrmParams(3, m, order)
    code = grm.grm_code(f, order)
    if code.k <= code.n - code.k:
        we = code.weight_distribution()
    else:
        we = macwilliams(code.dual().weight_distribution())
    assert we[we.min_weight()] == grm.grm_min_weight_count(p)


def test_234_words_of_weight_three():
    p = grm.GrmParams(3, 3, 4)
    assert (p.l1, p.l0) == (2, 0)
    assert grm.grm_min_weight_count(p) == 2 * 9 * (27 - 1) // 2 == 234
    assert grm.grm_min_distance(p) == 3


def test_punctured_dual_bound():
    p = grm.GrmParams(3, 3, 1)
    f = field_new(3)
    d = grm.punctured_grm(f, 1).dual().min_distance()
    assert d >= grm.punctured_dual_min_distance_bound(p)


@pytest.mark.parametrize("order", [-1, 6, 7])
def test_order_range(order):
    with pytest.raises(ConfigurationError):
        grm.GrmParams(3, 3, order)


def test_monomials_sorted_and_bounded():
    exps = grm.monomial_exponents(3, 2)
    assert exps == sorted(exps)
    assert len(exps) == 10
    assert all(sum(e) <= 2 for e in exps)


def test_cyclic_map_is_permutation():
    f = field_new(3)
    perm = grm.cyclic_to_field_order(f)
    assert sorted(perm.tolist()) == list(range(f.q))
    beta = f.primitive_element()
    for j in range(f.n):
        assert perm[f.pow(beta, j)] == j
    assert np.asarray(perm)[0] == f.n
