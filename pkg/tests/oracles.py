"""Brute-force reference computations, independent of the package engine.

Everything here works with explicit monomials in finitely many variables:
semistandard tableaux are enumerated directly and decompositions are found
by peeling off the dominant weight, so no power sums, characters or Kostka
recursions from the library are involved.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product


def ssyt(shape, n):
    """All semistandard tableaux of ``shape`` with entries 1..n, as row tuples."""
    shape = tuple(x for x in shape if x)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(filling[(i, j)] for j in range(row)) for i, row in enumerate(shape))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            yield from rec(k + 1)
        filling.pop((i, j), None)

    return list(rec(0))


def ssyt_count(shape, n):
    return len(ssyt(shape, n))


@lru_cache(maxsize=None)
def schur_poly(shape, n):
    """s_shape(x_1..x_n) as a Counter {exponent vector: coefficient}."""
    out = Counter()
    for t in ssyt(shape, n):
        e = [0] * n
        for row in t:
            for v in row:
                e[v - 1] += 1
        out[tuple(e)] += 1
    return out


def plethysm_poly(outer, inner, n):
    """s_outer[s_inner] in n variables, by substituting the monomials of s_inner."""
    inner_monos = []
    for e, c in sorted(schur_poly(tuple(inner), n).items()):
        inner_monos.extend([e] * c)
    N = len(inner_monos)
    out = Counter()
    for t in ssyt(tuple(outer), N):
        e = [0] * n
        for row in t:
            for v in row:
                for i, a in enumerate(inner_monos[v - 1]):
                    e[i] += a
        out[tuple(e)] += 1
    return out


def peel(poly, n):
    """Decompose a symmetric polynomial in n variables into Schur polynomials.

    Repeatedly takes the lexicographically largest exponent (necessarily a
    partition for a symmetric polynomial) and subtracts the matching Schur
    polynomial.
    """
    poly = Counter({e: c for e, c in poly.items() if c})
    result = {}
    while poly:
        top = max(poly)
        if list(top) != sorted(top, reverse=True):
            raise AssertionError(f"leading exponent {top} is not a partition: input not symmetric")
        c = poly[top]
        shape = tuple(x for x in top if x)
        result[shape] = c
        for e, k in schur_poly(shape, n).items():
            poly[e] -= c * k
            if not poly[e]:
                del poly[e]
    return dict(sorted(result.items()))


def plethysm_by_peeling(outer, inner, n):
    return peel(plethysm_poly(outer, inner, n), n)


def signed_permutation_matrices(g):
    for perm in permutations(range(g)):
        for signs in product((1, -1), repeat=g):
            yield perm, signs


def apply_signed(perm, signs, v):
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = signs[i] * x
    return tuple(out)


def orbit_ratio_brute(gamma):
    """max over Weyl elements w and coroot orbits of |<gamma, w a>| / |<gamma, a>|.

    Coroots of C_g: e_i for the long roots 2e_i, and +-e_i +- e_j.
    """
    g = len(gamma)
    coroots = []
    for i in range(g):
        e = [0] * g
        e[i] = 1
        coroots.append(tuple(e))
    for i in range(g):
        for j in range(i + 1, g):
            for s in (1, -1):
                e = [0] * g
                e[i], e[j] = 1, s
                coroots.append(tuple(e))
    best = None
    for a in coroots:
        base = sum(x * y for x, y in zip(gamma, a))
        if base == 0:
            continue
        for perm, signs in signed_permutation_matrices(g):
            wa = apply_signed(perm, signs, a)
            val = sum(x * y for x, y in zip(gamma, wa))
            r = Fraction(abs(val), abs(base))
            if best is None or r > best:
                best = r
    return best


def hilbert_coinvariants(g):
    """Coefficients of prod_i (1 - t^{2i}) / (1 - t)^g, the Hilbert series of the quotient."""
    num = [1]
    for i in range(1, g + 1):
        nxt = [0] * (len(num) + 2 * i)
        for k, c in enumerate(num):
            nxt[k] += c
            nxt[k + 2 * i] -= c
        num = nxt
    for _ in range(g):
        # divide by (1 - t): running sums
        acc, out = 0, []
        for c in num:
            acc += c
            out.append(acc)
        num = out
    while num and num[-1] == 0:
        num.pop()
    return num
