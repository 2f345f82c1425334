"""Exact symmetric functions in the Schur, power-sum and monomial bases.

The pivot for products and plethysm is the power-sum basis with exact
rational coefficients.  Going back to Schur functions is done by repeated
multiplication with single power sums p_r, each of which adds signed border
strips (Murnaghan-Nakayama).  Schur coefficients must come out integral; a
fractional coefficient means something upstream is wrong and raises.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, lcm
from typing import Callable, Iterable, Mapping

from .partitions import Partition, partitions_of

log = logging.getLogger(__name__)

BASES = ("schur", "power", "monomial")


@dataclass(frozen=True)
class SymFunc:
    """A finite linear combination of basis elements indexed by partitions."""

    basis: str
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.terms.items():
            c = Fraction(c)
            if c:
                clean[Partition(lam)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def schur(cls, lam: Iterable[int]) -> "SymFunc":
        return cls("schur", {Partition(lam): 1})

    @classmethod
    def power(cls, mu: Iterable[int]) -> "SymFunc":
        return cls("power", {Partition(mu): 1})

    @property
    def degree(self) -> int | str:
        """Common size of the support, ``"mixed"`` if inhomogeneous (0 if empty)."""
        sizes = {lam.size for lam in self.terms}
        if not sizes:
            return 0
        return sizes.pop() if len(sizes) == 1 else "mixed"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __add__(self, other: "SymFunc") -> "SymFunc":
        _same_basis(self, other)
        out = defaultdict(Fraction, self.terms)
        for lam, c in other.terms.items():
            out[lam] += c
        return SymFunc(self.basis, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(self.basis, {lam: c * x for lam, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        letter = {"schur": "s", "power": "p", "monomial": "m"}[self.basis]
        pieces = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            pieces.append(f"{c}*{letter}{lam}")
        return " + ".join(pieces)


def _same_basis(f: SymFunc, g: SymFunc) -> None:
    if f.basis != g.basis:
        raise ValueError(f"basis mismatch: {f.basis} vs {g.basis}")


def zee(mu: Iterable[int]) -> int:
    """Size of the centralizer of a permutation of cycle type ``mu``."""
    counts = defaultdict(int)
    for part in mu:
        counts[part] += 1
    result = 1
    for part, m in counts.items():
        result *= part**m * factorial(m)
    return result


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama: multiplication of a Schur function by p_r

@lru_cache(maxsize=None)
def add_border_strips(lam: tuple[int, ...], r: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (nu, sign) with nu/lam a border strip of size r; sign is (-1)^(rows-1).

    Works on beta-sets: a strip of size r moves one bead r steps up, and the
    sign counts the beads jumped over.
    """
    n_beads = len(lam) + r
    beta = [(lam[i] if i < len(lam) else 0) + n_beads - 1 - i for i in range(n_beads)]
    occupied = set(beta)
    out = []
    for idx, b in enumerate(beta):
        target = b + r
        if target in occupied:
            continue
        jumped = sum(1 for c in beta if b < c < target)
        new_beta = sorted(beta[:idx] + [target] + beta[idx + 1:], reverse=True)
        nu = [x - (n_beads - 1 - i) for i, x in enumerate(new_beta)]
        while nu and nu[-1] == 0:
            nu.pop()
        out.append((tuple(nu), -1 if jumped % 2 else 1))
    return tuple(out)


def _times_power(vec: Mapping[tuple, int], r: int, max_height: int | None) -> dict[tuple, int]:
    out: dict[tuple, int] = defaultdict(int)
    for lam, c in vec.items():
        for nu, sign in add_border_strips(lam, r):
            if max_height is not None and len(nu) > max_height:
                continue
            out[nu] += sign * c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=4096)
def _power_sum_column(mu: tuple[int, ...]) -> dict[tuple, int]:
    """Schur expansion of p_mu; its coefficients are the characters chi^lam(mu)."""
    if not mu:
        return {(): 1}
    return _times_power(_power_sum_column(mu[1:]), mu[0], None)


def sym_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Irreducible S_n character chi^lam evaluated at cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _power_sum_column(tuple(mu)).get(tuple(lam), 0)


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """``table[mu][lam] = chi^lam(mu)`` for all partitions of n."""
    return {
        mu: {Partition(lam): c for lam, c in _power_sum_column(tuple(mu)).items()}
        for mu in partitions_of(n)
    }


# ---------------------------------------------------------------------------
# basis changes

def to_power(f: SymFunc) -> SymFunc:
    if f.basis == "power":
        return f
    if f.basis == "monomial":
        f = monomial_to_schur(f)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in f.terms.items():
        for rho in partitions_of(lam.size):
            chi = _power_sum_column(tuple(rho)).get(tuple(lam), 0)
            if chi:
                out[rho] += c * Fraction(chi, zee(rho))
    return SymFunc("power", out)


def to_schur(
    f: SymFunc,
    max_height: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> SymFunc:
    """Convert to the Schur basis, optionally dropping rows longer than ``max_height``.

    Truncation is exact: Schur functions of height > g span an ideal (the
    kernel of restriction to g variables), so it commutes with products.
    """
    if f.basis == "schur":
        if max_height is None:
            return f
        return SymFunc("schur", {lam: c for lam, c in f.terms.items() if len(lam) <= max_height})
    if f.basis == "monomial":
        return to_schur(monomial_to_schur(f), max_height)
    if f.degree == "mixed":
        raise ValueError("to_schur needs a homogeneous input; split it by degree first")
    if not f.terms:
        return SymFunc("schur")
    denom = reduce(lcm, (c.denominator for c in f.terms.values()), 1)
    scaled = {tuple(mu): int(c * denom) for mu, c in f.terms.items()}
    vec = _power_combination_to_schur(scaled, max_height, progress)
    out = {}
    for lam, c in vec.items():
        if c % denom:
            raise ArithmeticError(f"non-integral Schur coefficient {Fraction(c, denom)} at {lam}")
        out[Partition(lam)] = c // denom
    return SymFunc("schur", out)


def _power_combination_to_schur(
    terms: Mapping[tuple, int],
    max_height: int | None,
    progress: Callable[[int, int], None] | None = None,
) -> dict[tuple, int]:
    """Horner evaluation over the trie of power-sum monomials, largest parts outermost."""

    def expand(items: list[tuple[tuple, int]], depth: int, top: bool) -> dict[tuple, int]:
        constant = 0
        groups: dict[int, list] = defaultdict(list)
        for mu, c in items:
            if len(mu) == depth:
                constant += c
            else:
                groups[mu[depth]].append((mu, c))
        acc: dict[tuple, int] = defaultdict(int)
        if constant:
            acc[()] += constant
        keys = sorted(groups)
        for n_done, r in enumerate(keys, start=1):
            inner = expand(groups[r], depth + 1, False)
            for lam, c in _times_power(inner, r, max_height).items():
                acc[lam] += c
            if top and progress is not None:
                progress(n_done, len(keys))
        return {k: v for k, v in acc.items() if v}

    return expand(sorted(terms.items()), 0, True)


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Peels off the cells holding the largest letter, which form a horizontal strip.
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1 if not lam else 0
    mu_last, mu_rest = mu[-1], mu[:-1]
    if len(lam) > len(mu):
        return 0
    total = 0
    for nu in _remove_horizontal_strips(lam, mu_last):
        total += kostka(nu, mu_rest)
    return total


def _remove_horizontal_strips(lam: tuple[int, ...], k: int):
    """Partitions nu with lam/nu a horizontal strip of size k."""
    rows = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                nu = list(acc)
                while nu and nu[-1] == 0:
                    nu.pop()
                yield tuple(nu)
            return
        lower = lam[i + 1] if i + 1 < rows else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            acc.append(lam[i] - take)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    yield from rec(0, k, [])


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != "schur":
        raise ValueError("expected a Schur-basis input")
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in f.terms.items():
        for mu in partitions_of(lam.size):
            k = kostka(tuple(lam), tuple(mu))
            if k:
                out[mu] += c * k
    return SymFunc("monomial", out)


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """Invert the unitriangular Kostka matrix by peeling dominant terms."""
    if f.basis != "monomial":
        raise ValueError("expected a monomial-basis input")
    rest = dict(f.terms)
    out: dict[Partition, Fraction] = {}
    while rest:
        # lexicographically largest is maximal in dominance order
        top = max(rest)
        c = rest[top]
        out[top] = c
        for mu in partitions_of(top.size):
            k = kostka(tuple(top), tuple(mu))
            if k:
                rest[mu] = rest.get(mu, Fraction(0)) - c * k
                if not rest[mu]:
                    del rest[mu]
    return SymFunc("schur", out)


# ---------------------------------------------------------------------------
# products and plethysm

def _power_product(a: Mapping[tuple, Fraction], b: Mapping[tuple, Fraction]) -> dict[tuple, Fraction]:
    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for mu, x in a.items():
        for nu, y in b.items():
            out[tuple(sorted(mu + nu, reverse=True))] += x * y
    return {k: v for k, v in out.items() if v}


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the Schur basis (Littlewood-Richardson coefficients)."""
    fp, gp = to_power(f), to_power(g)
    prod = _power_product(
        {tuple(k): v for k, v in fp.terms.items()},
        {tuple(k): v for k, v in gp.terms.items()},
    )
    by_degree: dict[int, dict] = defaultdict(dict)
    for mu, c in prod.items():
        by_degree[sum(mu)][mu] = c
    out = SymFunc("schur")
    for part in by_degree.values():
        out = out + to_schur(SymFunc("power", part))
    return out


def plethysm_power(lam: Partition, mu: Partition) -> dict[tuple, Fraction]:
    """Power-sum expansion of s_lam[s_mu].

    p_rho[s_mu] is the product over the parts r of rho of p_r[s_mu], and
    p_r[p_sigma] = p_{r*sigma}.
    """
    lam_p = to_power(SymFunc.schur(lam)).terms
    mu_p = to_power(SymFunc.schur(mu)).terms
    inner: dict[int, dict[tuple, Fraction]] = {}

    def inner_for(r: int) -> dict[tuple, Fraction]:
        if r not in inner:
            inner[r] = {tuple(r * x for x in sigma): c for sigma, c in mu_p.items()}
        return inner[r]

    out: dict[tuple, Fraction] = defaultdict(Fraction)
    for rho, a in lam_p.items():
        acc: dict[tuple, Fraction] = {(): Fraction(1)}
        for r in rho:
            acc = _power_product(acc, inner_for(r))
        for nu, c in acc.items():
            out[nu] += a * c
    return {k: v for k, v in out.items() if v}


def plethysm(
    lam: Iterable[int],
    mu: Iterable[int],
    max_height: int | None = None,
    cache_dir=None,
    progress: Callable[[int, int], None] | None = None,
) -> list[tuple[Partition, int]]:
    """Schur expansion of s_lam[s_mu] as a sorted list of (eta, multiplicity).

    With ``max_height`` only constituents with at most that many rows are
    computed (and returned).  With ``cache_dir`` results are read from and
    written to the on-disk cache.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam or not mu:
        raise ValueError("plethysm needs nonempty partitions")
    cache = None
    if cache_dir is not None:
        from .cache import PlethysmCache

        cache = PlethysmCache(cache_dir)
        hit = cache.get(lam, mu, max_height)
        if hit is not None:
            return hit
    power = plethysm_power(lam, mu)
    schur = to_schur(SymFunc("power", power), max_height=max_height, progress=progress)
    if not schur.is_integral():
        raise ArithmeticError("plethysm produced a non-integral Schur coefficient")
    result = sorted((eta, int(c)) for eta, c in schur.terms.items())
    degree = lam.size * mu.size
    for eta, c in result:
        if c <= 0 or eta.size != degree:
            raise ArithmeticError(f"invalid plethysm constituent {eta}: {c}")
    if cache is not None:
        cache.put(lam, mu, max_height, result)
    return result


def restrict_height(constituents: Iterable[tuple[Partition, int]], g: int) -> list[tuple[Partition, int]]:
    return [(eta, m) for eta, m in constituents if len(eta) <= g]


def plethysm_stats(constituents: list[tuple[Partition, int]]) -> dict[str, int]:
    return {
        "partitions": len(constituents),
        "max_mult": max((m for _, m in constituents), default=0),
        "total": sum(m for _, m in constituents),
    }


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_column(lam: Iterable[int]) -> bool:
    lam = Partition(lam)
    return bool(lam) and lam[0] == 1


def filtration_condition(lam: Iterable[int], p: int, exterior: bool | None = None) -> bool:
    """Whether S_lam o S_mu has a filtration by Schur functors in characteristic p.

    The general sufficient bound is p >= 2|lam| - 1.  For exterior powers
    (lam a single column of length k) p > k is enough; ``exterior=None``
    applies that case automatically when lam is a column.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    lam = Partition(lam)
    if exterior is None:
        exterior = is_column(lam)
    if exterior:
        if not is_column(lam):
            raise ValueError(f"{lam} is not an exterior power")
        return p > lam.size
    return p >= 2 * lam.size - 1
