"""Univariate polynomials over GF(3), cyclotomic cosets and minimal polynomials.

Polynomials are tuples of coefficients in {0, 1, 2}, lowest degree first,
without trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .gf3m import Field

Poly = tuple


def trim(p) -> Poly:
    p = [int(c) % 3 for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, tuple((-c) % 3 for c in b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % 3
    return trim(out)


def pdivmod(a: Poly, b: Poly):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(trim(a))
    db = len(b) - 1
    inv_lead = b[-1]  # self-inverse mod 3
    quot = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % 3
        shift = len(a) - 1 - db
        quot[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % 3
        a = list(trim(a))
    return trim(quot), trim(a)


def monic(p: Poly) -> Poly:
    if not p:
        raise ValueError("the zero polynomial has no monic normalization")
    return trim([c * p[-1] for c in p])  # leading coefficient is its own inverse


def pgcd(a: Poly, b: Poly) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return monic(a) if a else ()


def lcm_polys(ps) -> Poly:
    """Monic least common multiple of nonzero polynomials."""
    ps = [trim(p) for p in ps]
    if not ps:
        raise ValueError("lcm of an empty list")
    if any(not p for p in ps):
        raise ValueError("lcm is undefined for the zero polynomial")
    acc = monic(ps[0])
    for p in ps[1:]:
        acc = monic(pdivmod(pmul(acc, p), pgcd(acc, p))[0])
    return acc


def x_pow_minus_one(n: int) -> Poly:
    return trim([2] + [0] * (n - 1) + [1])


def peval(field: Field, p: Poly, u: int) -> int:
    """Evaluate p at a field element (GF(3) constants are indices 0, 1, 2)."""
    acc = 0
    for c in reversed(p):
        acc = field.add(field.mul(acc, u), c)
    return acc


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple
    modulus: int

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i % self.modulus in self.members


def cyclotomic_coset(i: int, n: int, base: int = 3) -> CyclotomicCoset:
    i %= n
    seen = []
    j = i
    while j not in seen:
        seen.append(j)
        j = (j * base) % n
    members = tuple(sorted(seen))
    return CyclotomicCoset(members[0], members, n)


def all_cyclotomic_cosets(n: int, base: int = 3):
    done = set()
    out = []
    for i in range(n):
        if i not in done:
            c = cyclotomic_coset(i, n, base)
            done.update(c.members)
            out.append(c)
    return out


def _poly_over_field_mul(field: Field, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


def minimal_polynomial(field: Field, i: int) -> Poly:
    """Minimal polynomial of beta^i over GF(3), beta the field's primitive element."""
    beta = field.primitive_element()
    coset = cyclotomic_coset(i, field.n)
    prod = [1]
    for j in coset.members:
        root = field.pow(beta, j)
        prod = _poly_over_field_mul(field, prod, [field.neg(root), 1])
    if any(c > 2 for c in prod):
        raise ConsistencyError(f"minimal polynomial of beta^{i} has coefficients outside GF(3)")
    return trim(prod)


def product_of_distinct_minimal_polys(field: Field, exponents) -> Poly:
    """lcm of M_i over ``exponents``, as the product over distinct cosets."""
    cosets = {}
    for i in exponents:
        c = cyclotomic_coset(i, field.n)
        cosets[c.representative] = c
    covered = set()
    for c in cosets.values():
        if covered & set(c.members):
            raise ConsistencyError("distinct cyclotomic cosets overlap")
        covered.update(c.members)
    out = (1,)
    for rep in sorted(cosets):
        out = pmul(out, minimal_polynomial(field, rep))
    return out


def qary_weight(j: int, q: int = 3, m: int | None = None) -> int:
    """Sum of the base-q digits of j."""
    if j < 0 or (m is not None and j >= q**m):
        raise ValueError(f"{j} is not an {m}-digit base-{q} number")
    s = 0
    while j:
        j, r = divmod(j, q)
        s += r
    return s


def _shift_rows(g: Poly, n: int, count: int):
    rows = np.zeros((count, n), dtype=np.uint8)
    for i in range(count):
        rows[i, i:i + len(g)] = g
    return rows


def cyclic_code_from_generator(g: Poly, n: int):
    from .codes import LinearCode

    g = trim(g)
    q_, r = pdivmod(x_pow_minus_one(n), g)
    if r:
        raise ValueError("generator polynomial does not divide x^n - 1")
    return LinearCode.from_array(_shift_rows(g, n, n - degree(g)), n=n)


def cyclic_code_from_check(h: Poly, n: int):
    """Cyclic code of length n with parity-check polynomial h (dimension deg h)."""
    h = trim(h)
    g, r = pdivmod(x_pow_minus_one(n), h)
    if r:
        raise ValueError("parity-check polynomial does not divide x^n - 1")
    return cyclic_code_from_generator(g, n)
