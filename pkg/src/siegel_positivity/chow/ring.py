"""The coinvariant ring Q[x1..xg] / (f_1, ..., f_g), f_i = x_1^{2i} + ... + x_g^{2i}.

Coefficients are polynomials over Q in the formal symbol p (and, for
symbolic weights, k1..kg).  Normal forms use exact per-degree linear
algebra: in each degree the complement basis is chosen greedily from the
largest monomial down in graded reverse lexicographic order, so a monomial is
eliminated exactly when it is the smallest monomial of some element of the
ideal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .poly import Poly

Exponent = tuple[int, ...]
PPoly = Poly  # coefficient ring Q[p]; extra symbols k1..kg allowed


def monomials(g: int, d: int) -> list[Exponent]:
    """Exponent vectors of total degree d, largest first in grevlex."""
    out = []

    def rec(i, left, acc):
        if i == g - 1:
            out.append(tuple(acc + [left]))
            return
        for e in range(left, -1, -1):
            rec(i + 1, left - e, acc + [e])

    if g == 0:
        return [()] if d == 0 else []
    rec(0, d, [])
    out.sort(key=lambda a: tuple(reversed(a)))
    return out


def invariant_ideal_generators(g: int) -> list[dict[Exponent, int]]:
    """The power sums of the squares, f_i for i = 1..g."""
    gens = []
    for i in range(1, g + 1):
        gens.append({tuple(2 * i if k == j else 0 for k in range(g)): 1 for j in range(g)})
    return gens


def _shift(poly: Mapping[Exponent, int], m: Exponent) -> dict[Exponent, int]:
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in poly.items()}


class _DegreeReducer:
    """Reduction data for one graded piece."""

    def __init__(self, g: int, d: int):
        self.monos = monomials(g, d)
        # rank in ascending grevlex: smaller monomial -> smaller rank
        self.rank = {m: len(self.monos) - 1 - i for i, m in enumerate(self.monos)}
        pivots: dict[Exponent, dict[Exponent, Fraction]] = {}
        for i, f in enumerate(invariant_ideal_generators(g), start=1):
            if 2 * i > d:
                break
            for m in monomials(g, d - 2 * i):
                self._insert(pivots, {e: Fraction(c) for e, c in _shift(f, m).items()})
        # back-substitute so pivot rows only involve basis monomials
        for col in sorted(pivots, key=self.rank.get, reverse=True):
            row = pivots[col]
            for other in [c for c in row if c != col and c in pivots]:
                factor = row[other]
                for e, c in pivots[other].items():
                    row[e] = row.get(e, Fraction(0)) - factor * c
                    if not row[e]:
                        del row[e]
        self.basis = [m for m in self.monos if m not in pivots]
        # monomial -> its normal form as {basis monomial: coefficient}
        self.rewrite = {
            col: {e: -c for e, c in row.items() if e != col} for col, row in pivots.items()
        }

    def _insert(self, pivots, row):
        while row:
            col = min(row, key=self.rank.get)
            if col not in pivots:
                lead = row[col]
                pivots[col] = {e: c / lead for e, c in row.items()}
                return
            factor = row[col]
            for e, c in pivots[col].items():
                row[e] = row.get(e, Fraction(0)) - factor * c
                if not row[e]:
                    del row[e]


@lru_cache(maxsize=None)
def _reducer(g: int, d: int) -> _DegreeReducer:
    return _DegreeReducer(g, d)


def quotient_dimensions(g: int) -> list[int]:
    return [len(_reducer(g, d).basis) for d in range(g * g + 1)]


def basis(g: int, d: int) -> list[Exponent]:
    if d > g * g:
        return []
    return list(_reducer(g, d).basis)


def _as_poly(c) -> Poly:
    return Poly.coerce(c) if not isinstance(c, Poly) else c


@dataclass(frozen=True)
class TautClass:
    """A homogeneous class in normal form."""

    g: int
    degree: int
    terms: Mapping[Exponent, Poly] = field(default_factory=dict)

    def __add__(self, other: "TautClass") -> "TautClass":
        if other.g != self.g:
            raise ValueError("g mismatch")
        if not other.terms:
            return self
        if not self.terms:
            return other
        if other.degree != self.degree:
            raise ValueError("classes of different degree")
        out = defaultdict(Poly, self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c
        return TautClass(self.g, self.degree, {e: c for e, c in out.items() if c})

    def __neg__(self):
        return TautClass(self.g, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TautClass):
            if other.g != self.g:
                raise ValueError("g mismatch")
            prod: dict[Exponent, Poly] = defaultdict(Poly)
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    prod[e] = prod[e] + c1 * c2
            return normal_form(prod, self.g, self.degree + other.degree)
        return TautClass(self.g, self.degree, {e: c * other for e, c in self.terms.items() if c * other})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TautClass":
        result = one(self.g)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        if self.g != other.g:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.g, self.degree, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda a: tuple(reversed(a))):
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            ) or "1"
            pieces.append(f"({self.terms[e]})*{mono}")
        return " + ".join(pieces)


def normal_form(poly: Mapping[Exponent, object], g: int, degree: int | None = None) -> TautClass:
    """Reduce a homogeneous polynomial {exponent: coefficient} modulo the invariant ideal."""
    degrees = {sum(e) for e, c in poly.items() if c}
    if len(degrees) > 1:
        raise ValueError("normal_form needs a homogeneous input; split it by degree")
    if degrees:
        d = degrees.pop()
        if degree is not None and degree != d:
            raise ValueError(f"degree mismatch: declared {degree}, found {d}")
    else:
        d = degree or 0
    if any(len(e) != g for e in poly):
        raise ValueError("exponent vectors must have length g")
    if d > g * g:
        return TautClass(g, d, {})
    red = _reducer(g, d)
    out: dict[Exponent, Poly] = defaultdict(Poly)
    for e, c in poly.items():
        if not c:
            continue
        c = _as_poly(c)
        if e in red.rewrite:
            for b, x in red.rewrite[e].items():
                out[b] = out[b] + c * x
        else:
            out[e] = out[e] + c
    return TautClass(g, d, {e: c for e, c in out.items() if c})


def one(g: int) -> TautClass:
    return TautClass(g, 0, {(0,) * g: Poly.const(1)})


def monomial_class(e: Sequence[int], coeff=1) -> TautClass:
    e = tuple(e)
    return normal_form({e: _as_poly(coeff)}, len(e))


def from_poly(poly: Poly, g: int) -> TautClass:
    """Interpret a Poly in x1..xg (coefficients in the other symbols) as a class."""
    names = tuple(f"x{i + 1}" for i in range(g))
    extra = {n for n in poly.variables() if n.startswith("x") and n not in names}
    if extra:
        raise ValueError(f"unknown ring variables {sorted(extra)} for g={g}")
    return normal_form(poly.split(names), g)


def first_chern(weight: Iterable, g: int) -> TautClass:
    """c_1(L_lam) = k_1 x_1 + ... + k_g x_g; entries may be ints or Polys."""
    weight = list(weight)
    if len(weight) != g:
        raise ValueError("weight length must be g")
    terms = {}
    for i, k in enumerate(weight):
        k = _as_poly(k)
        if k:
            terms[tuple(1 if j == i else 0 for j in range(g))] = k
    return TautClass(g, 1, terms)


def symbolic_weight(g: int) -> list[Poly]:
    return [Poly.var(f"k{i + 1}") for i in range(g)]


def top_coefficient(cls: TautClass, normalizer: Sequence[int]) -> Poly:
    """The class as a multiple of the normalizing top-degree monomial."""
    g = cls.g
    top = g * g
    if cls.degree != top and cls.terms:
        raise ValueError(f"class has degree {cls.degree}, expected top degree {top}")
    norm = monomial_class(normalizer)
    if norm.degree != top or len(norm.terms) != 1:
        raise ValueError("normalizer must be a nonzero top-degree monomial")
    (b, unit), = norm.terms.items()
    value = cls.terms.get(b, Poly())
    return value / unit


def intersection_number(cls: TautClass, weight: Iterable, power: int, normalizer: Sequence[int]) -> Poly:
    """c_1(L_weight)^power . cls, read off against the normalizing monomial."""
    g = cls.g
    if cls.degree + power != g * g:
        raise ValueError(f"degree {cls.degree} + power {power} != g^2 = {g * g}")
    product = first_chern(weight, g) ** power * cls
    return top_coefficient(product, normalizer)
