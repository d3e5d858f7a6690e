"""Slow, obviously-correct reference implementations used to check the library.

Nothing here imports library internals except plain data (moduli).
"""

from itertools import product


def poly_mulmod(a, b, modulus):
    """Multiply coefficient lists (low-to-high) over GF(3), reduce by a monic modulus."""
    m = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % 3
    for d in range(len(out) - 1, m - 1, -1):
        c = out[d]
        if c:
            for i in range(m + 1):
                out[d - m + i] = (out[d - m + i] - c * modulus[i]) % 3
    out = (out + [0] * m)[:m]
    return out


def to_coeffs(u, m):
    return [(u // 3**i) % 3 for i in range(m)]


def from_coeffs(c):
    return sum(x * 3**i for i, x in enumerate(c))


def gf_mul(u, v, modulus):
    m = len(modulus) - 1
    return from_coeffs(poly_mulmod(to_coeffs(u, m), to_coeffs(v, m), modulus))


def gf_add(u, v, m):
    return from_coeffs([(x + y) % 3 for x, y in zip(to_coeffs(u, m), to_coeffs(v, m))])


def gf_pow(u, e, modulus):
    r = 1
    for _ in range(e):
        r = gf_mul(r, u, modulus)
    return r


def gf_trace(u, modulus):
    """Sum of the m Frobenius conjugates; the result is a prime-field index 0, 1 or 2."""
    m = len(modulus) - 1
    total, x = 0, u
    for _ in range(m):
        total = gf_add(total, x, m)
        x = gf_pow(x, 3, modulus)
    assert total < 3
    return total


def irreducible_brute(modulus):
    """No monic factor of degree 1..deg/2 divides the polynomial."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(3), repeat=d):
            f = list(low) + [1]
            r = list(modulus)
            for k in range(len(r) - 1, d - 1, -1):
                c = r[k]
                if c:
                    for i in range(d + 1):
                        r[k - d + i] = (r[k - d + i] - c * f[i]) % 3
            if not any(r[:d]):
                return False
    return True


def all_codewords(gen):
    """Every linear combination of the generator rows, as tuples."""
    k, n = len(gen), len(gen[0])
    for coeffs in product(range(3), repeat=k):
        yield tuple(sum(c * g[j] for c, g in zip(coeffs, gen)) % 3 for j in range(n))


def brute_force_enumerator(gen):
    n = len(gen[0])
    counts = [0] * (n + 1)
    for w in all_codewords(gen):
        counts[sum(1 for x in w if x)] += 1
    return counts


def krawtchouk(n, j, i, q=3):
    from math import comb
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams_direct(counts, k, q=3):
    n = len(counts) - 1
    out = []
    for j in range(n + 1):
        tot = sum(counts[i] * krawtchouk(n, j, i, q) for i in range(n + 1))
        assert tot % q**k == 0
        out.append(tot // q**k)
    return out


def rank_mod3(rows):
    """Plain Gaussian elimination on lists of ints."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    n, r = len(a[0]), 0
    for c in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][c] % 3), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 if a[r][c] % 3 == 1 else 2
        a[r] = [(x * inv) % 3 for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] % 3:
                f = a[i][c]
                a[i] = [(x - f * y) % 3 for x, y in zip(a[i], a[r])]
        r += 1
    return r


def lambda_by_pairs(v, blocks):
    """Count every pair explicitly; return the common count or None."""
    from itertools import combinations
    counts = {p: 0 for p in combinations(range(v), 2)}
    for b in blocks:
        for p in combinations(sorted(b), 2):
            counts[p] += 1
    vals = set(counts.values())
    return vals.pop() if len(vals) == 1 else None
