"""Root datum of Sp_2g with the Siegel Levi GL_g.

Characters of the diagonal torus are integer g-tuples in the basis e_1..e_g.
Weyl group elements are signed permutations, never matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .partitions import Partition

Weight = tuple[int, ...]


def _unit(g: int, i: int, scale: int = 1) -> Weight:
    return tuple(scale if k == i else 0 for k in range(g))


@dataclass(frozen=True)
class RootDatumC:
    """Type C_g root datum with Levi type A_{g-1} (the simple roots e_i - e_{i+1})."""

    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("g must be positive")

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        g, roots = self.g, []
        for i in range(g):
            for j in range(i + 1, g):
                roots.append(tuple((k == i) - (k == j) for k in range(g)))
        for i in range(g):
            for j in range(i, g):
                roots.append(tuple((k == i) + (k == j) for k in range(g)))
        return tuple(roots)

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        g = self.g
        levi = tuple(tuple((k == i) - (k == i + 1) for k in range(g)) for i in range(g - 1))
        return levi + (_unit(g, g - 1, 2),)

    @cached_property
    def levi_simple_roots(self) -> tuple[Weight, ...]:
        return self.simple_roots[:-1]

    @cached_property
    def levi_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(a for a in self.positive_roots if sum(a) == 0)

    @property
    def weyl_order(self) -> int:
        return 2**self.g * factorial(self.g)

    def coroot(self, alpha: Sequence[int]) -> Weight:
        """e_i - e_j and e_i + e_j are their own coroots; 2e_i has coroot e_i."""
        alpha = tuple(alpha)
        if len(alpha) != self.g:
            raise ValueError("length mismatch")
        nonzero = [x for x in alpha if x]
        if len(nonzero) == 1 and abs(nonzero[0]) == 2:
            return tuple(x // 2 for x in alpha)
        return alpha

    @cached_property
    def positive_coroots(self) -> tuple[Weight, ...]:
        return tuple(self.coroot(a) for a in self.positive_roots)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        """Dominant for Sp_2g: weakly decreasing and nonnegative."""
        return all(pairing(lam, self.coroot(a)) >= 0 for a in self.simple_roots)

    def is_levi_dominant(self, lam: Sequence[int]) -> bool:
        return all(a >= b for a, b in zip(lam, lam[1:]))

    def coroot_orbits(self) -> tuple[frozenset, frozenset]:
        """The Weyl orbits of coroots: {±e_i} (long roots) and {±e_i±e_j} (short roots)."""
        g = self.g
        long_ = weyl_orbit(_unit(g, 0))
        if g == 1:
            return (long_, frozenset())
        short = weyl_orbit(tuple(1 if k < 2 else 0 for k in range(g)))
        return (long_, short)

    def dominates(self, lam: Sequence[int], mu: Sequence[int]) -> bool:
        """mu <= lam: lam - mu is a sum of positive roots.

        The positive root cone is cut out by nonnegative partial sums and the
        root lattice by an even coordinate sum.
        """
        diff = [a - b for a, b in zip(lam, mu)]
        if sum(diff) % 2:
            return False
        running = 0
        for x in diff:
            running += x
            if running < 0:
                return False
        return True


def pairing(lam: Sequence[int], coroot: Sequence[int]) -> int:
    if len(lam) != len(coroot):
        raise ValueError(f"length mismatch: {len(lam)} vs {len(coroot)}")
    return sum(a * b for a, b in zip(lam, coroot))


def signed_permutations(g: int):
    """All 2^g g! elements as (permutation, signs)."""
    for perm in permutations(range(g)):
        for signs in product((1, -1), repeat=g):
            yield perm, signs


def act(w, v: Sequence[int]) -> Weight:
    perm, signs = w
    out = [0] * len(v)
    for i, target in enumerate(perm):
        out[target] = signs[i] * v[i]
    return tuple(out)


def weyl_orbit(v: Sequence[int]) -> frozenset:
    """Orbit under signed permutations of the coordinates, by closure under simple reflections."""
    v = tuple(v)
    g = len(v)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            images = []
            for i in range(g - 1):
                w = list(u)
                w[i], w[i + 1] = w[i + 1], w[i]
                images.append(tuple(w))
            if g:
                w = list(u)
                w[-1] = -w[-1]
                images.append(tuple(w))
            for w in images:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def rho_L_doubled(g: int) -> Weight:
    """2 rho_L = (g-1, g-3, ..., -(g-1))."""
    return tuple(g - 1 - 2 * i for i in range(g))


def rho_C(g: int) -> Weight:
    """Half the sum of the positive roots of Sp_2g: (g, g-1, ..., 1)."""
    return tuple(g - i for i in range(g))


def automorphic_weight(eta: Iterable[int], g: int) -> Weight:
    """Weight of S_eta applied to the Hodge bundle: pad to length g, reverse, negate."""
    eta = Partition(eta)
    if len(eta) > g:
        raise ValueError(f"{eta} has more than g={g} rows")
    padded = tuple(eta) + (0,) * (g - len(eta))
    return tuple(-x for x in reversed(padded))


def reverse_negate(v: Sequence[int]) -> Weight:
    return tuple(-x for x in reversed(tuple(v)))


def parse_weight(text: str) -> Weight:
    """Parse ``"(-1,-3)"``; also accepts the unicode minus sign."""
    body = text.strip().replace("−", "-")
    if body[:1] in "([" and body[-1:] in ")]":
        body = body[1:-1]
    try:
        return tuple(int(tok) for tok in body.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"not a weight: {text!r}") from None


def format_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"
