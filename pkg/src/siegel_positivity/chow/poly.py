"""Sparse multivariate polynomials over Q with named variables.

Used for coefficients in Q[p] (and Q[p, k1, ..., kg] when the weight is kept
symbolic) and, while parsing fixtures, for polynomials in x1..xg as well.
"""

from __future__ import annotations

import ast
from collections import defaultdict
from fractions import Fraction
from typing import Mapping

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable polynomial; ``terms`` maps sorted (name, exponent) tuples to Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted((n, e) for n, e in mono if e))] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    def __add__(self, other):
        other = Poly.coerce(other)
        out = defaultdict(Fraction, self.terms)
        for m, c in other.terms.items():
            out[m] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly({m: c * other for m, c in self.terms.items()})
        other = Poly.coerce(other)
        out = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[_mono_mul(m1, m2)] += c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = Poly.coerce(other)
        if other.is_constant():
            return self * (1 / other.constant())
        raise ZeroDivisionError("division by a non-constant polynomial")

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {n for m in self.terms for n, _ in m}

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def subs(self, **values) -> "Poly":
        out = Poly()
        for m, c in self.terms.items():
            term = Poly({(): c})
            for name, e in m:
                if name in values:
                    term = term * (Poly.coerce(values[name]) ** e)
                else:
                    term = term * Poly({((name, e),): 1})
            out = out + term
        return out

    def evaluate(self, **values) -> Fraction:
        result = self.subs(**values)
        if not result.is_constant():
            raise ValueError(f"unassigned variables {sorted(result.variables())}")
        return result.constant()

    def split(self, names: tuple[str, ...]) -> dict[tuple[int, ...], "Poly"]:
        """Group by the exponents of ``names``; coefficients are polynomials in the rest."""
        out: dict[tuple[int, ...], dict] = defaultdict(dict)
        for m, c in self.terms.items():
            d = dict(m)
            key = tuple(d.pop(n, 0) for n in names)
            rest = tuple(sorted(d.items()))
            out[key][rest] = out[key].get(rest, Fraction(0)) + c
        return {k: Poly(v) for k, v in out.items()}

    def coefficients_in(self, name: str) -> list[Fraction]:
        """Coefficient list (constant first) of a univariate polynomial."""
        extra = self.variables() - {name}
        if extra:
            raise ValueError(f"not univariate in {name}: also {sorted(extra)}")
        deg = self.degree_in(name)
        coeffs = [Fraction(0)] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[dict(m).get(name, 0)] += c
        return coeffs

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            c = self.terms[m]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def parse_poly(text: str) -> Poly:
    """Parse ``"(p^2-1)*(k2-p*k1)"``: integers, identifiers, + - * / ^ and parentheses."""
    source = text.strip().replace("^", "**").replace("−", "-")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc
    return _eval(tree.body, text)


def _eval(node, text: str) -> Poly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError(f"exponents must be integer literals in {text!r}")
            return left ** node.right.value
        right = _eval(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ValueError(f"unsupported syntax in polynomial {text!r}")
