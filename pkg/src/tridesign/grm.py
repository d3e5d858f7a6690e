"""Generalized Reed-Muller codes over GF(3) and their parameter formulas."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from .codes import LinearCode
from .errors import ConfigurationError
from .gf3m import Field
from .poly3 import cyclic_code_from_generator, product_of_distinct_minimal_polys, qary_weight


@dataclass(frozen=True)
class GrmParams:
    q: int
    m: int
    order: int

    def __post_init__(self):
        if not 0 <= self.order < (self.q - 1) * self.m:
            raise ConfigurationError(
                f"order must satisfy 0 <= order < (q-1)m = {(self.q - 1) * self.m}, got {self.order}")

    @property
    def l1(self):
        return self.order // (self.q - 1)

    @property
    def l0(self):
        return self.order % (self.q - 1)


def _binom(a: int, b: int) -> int:
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def grm_dimension(params: GrmParams) -> int:
    q, m = params.q, params.m
    return sum((-1) ** j * comb(m, j) * _binom(i - j * q + m - 1, i - j * q)
               for i in range(params.order + 1) for j in range(m + 1))


def grm_min_distance(params: GrmParams) -> int:
    return (params.q - params.l0) * params.q ** (params.m - params.l1 - 1)


def grm_dual_order(params: GrmParams) -> int:
    return params.m * (params.q - 1) - 1 - params.order


def punctured_dual_min_distance_bound(params: GrmParams) -> int:
    """Lower bound on the minimum distance of the dual of the punctured code."""
    dual = GrmParams(params.q, params.m, grm_dual_order(params))
    return (dual.q - dual.l0) * dual.q ** (dual.m - dual.l1 - 1)


def grm_min_weight_count(params: GrmParams) -> int:
    """Number of minimum-weight codewords of R_q(order, m)."""
    q, m, l1, l0 = params.q, params.m, params.l1, params.l0
    num = q**l1
    for e in range(l1 + 1, m + 1):
        num *= q**e - 1
    den = 1
    for e in range(1, m - l1 + 1):
        den *= q**e - 1
    n_l0 = 1 if l0 == 0 else comb(q, l0) * (q ** (m - l1) - 1) // (q - 1)
    total = (q - 1) * num * n_l0
    assert total % den == 0
    return total // den


def monomial_exponents(m: int, order: int):
    """Exponent vectors in {0,1,2}^m of total degree <= order, lexicographic."""
    return [e for e in product(range(3), repeat=m) if sum(e) <= order]


def grm_code(field: Field, order: int) -> LinearCode:
    """Evaluations of reduced monomials of degree <= order at every point of GF(3^m)."""
    params = GrmParams(3, field.m, order)
    pts = field.digits.astype(np.int64)
    rows = []
    for e in monomial_exponents(field.m, params.order):
        vals = np.ones(field.q, dtype=np.int64)
        for i, ei in enumerate(e):
            if ei:
                vals = vals * pts[:, i] ** ei
        rows.append(vals % 3)
    return LinearCode.from_array(np.array(rows), n=field.q)


def punctured_generator_exponents(field: Field, order: int):
    """Zeros j (1 <= j <= n-1) of the punctured code's generator polynomial."""
    lim = 2 * field.m - order
    return [j for j in range(1, field.n) if qary_weight(j, 3) < lim]


def punctured_grm(field: Field, order: int) -> LinearCode:
    """R_3(order, m)*: cyclic code of length 3^m - 1 with zeros alpha^j, wt_3(j) < 2m - order."""
    GrmParams(3, field.m, order)
    g = product_of_distinct_minimal_polys(field, punctured_generator_exponents(field, order))
    return cyclic_code_from_generator(g, field.n)


def cyclic_to_field_order(field: Field) -> np.ndarray:
    """Coordinate map for extended cyclic codes: position j holds beta^j, position n holds 0.

    Apply as ``code.permute(perm)`` to reorder an extended cyclic code into
    canonical field-index order.
    """
    perm = np.empty(field.q, dtype=np.int64)
    perm[0] = field.n
    beta = field.primitive_element()
    logs = field.log_table[1:]
    if beta != field.exp_table[1]:
        # express every element as a power of beta
        lb = int(field.log_table[beta])
        inv = pow(lb, -1, field.n)
        logs = (logs * inv) % field.n
    perm[1:] = logs
    return perm
