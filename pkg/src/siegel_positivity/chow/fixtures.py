"""Ekedahl-Oort cycle-class fixtures.

Text format::

    eo-fixture v1 g=2
    stratum w1 len=3: x1-p*x2
    ...
    normalizer: x1*x2^3
    product w3 lambda=(k1,k2) expect: (p^2-1)*(k2-p*k1)
    inert s3 lambda=lambda_Omega value: -p*(p^5*(p-1)-1)

Blank lines and lines starting with ``#`` are ignored.  ``inert`` stanzas
record published values whose class is not part of the fixture; they are
carried along but never recomputed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .poly import Poly, parse_poly
from .ring import TautClass, from_poly, intersection_number

HEADER_RE = re.compile(r"^eo-fixture v1 g=(\d+)$")
STRATUM_RE = re.compile(r"^stratum (\S+) len=(\d+):\s*(.+)$")
NORMALIZER_RE = re.compile(r"^normalizer:\s*(.+)$")
PRODUCT_RE = re.compile(r"^product (\S+) lambda=(\S+) expect:\s*(.+)$")
INERT_RE = re.compile(r"^inert (\S+) lambda=(\S+) value:\s*(.+)$")


@dataclass(frozen=True)
class Stratum:
    label: str
    length: int
    cls: TautClass


@dataclass(frozen=True)
class ProductCheck:
    label: str
    weight: tuple  # ints or symbol names
    expected: Poly


@dataclass
class EOFixture:
    g: int
    strata: list[Stratum] = field(default_factory=list)
    normalizer: tuple[int, ...] = ()
    products: list[ProductCheck] = field(default_factory=list)
    inert: list[ProductCheck] = field(default_factory=list)

    def stratum(self, label: str) -> Stratum | None:
        for s in self.strata:
            if s.label == label:
                return s
        return None


def _parse_weight_spec(text: str, g: int) -> tuple:
    if not (text.startswith("(") and text.endswith(")")):
        return (text,)
    items = []
    for tok in text[1:-1].split(","):
        tok = tok.strip()
        items.append(int(tok) if re.fullmatch(r"-?\d+", tok) else tok)
    if len(items) != g:
        raise ValueError(f"weight {text} does not have {g} entries")
    return tuple(items)


def _exponent_of(mono: Poly, g: int) -> tuple[int, ...]:
    if len(mono.terms) != 1:
        raise ValueError("normalizer must be a single monomial")
    (m, c), = mono.terms.items()
    if c != 1:
        raise ValueError("normalizer must be monic")
    d = dict(m)
    names = {f"x{i + 1}" for i in range(g)}
    if set(d) - names:
        raise ValueError(f"normalizer uses unknown variables {sorted(set(d) - names)}")
    return tuple(d.get(f"x{i + 1}", 0) for i in range(g))


def parse_fixture(text: str) -> EOFixture:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty fixture")
    m = HEADER_RE.match(lines[0])
    if not m:
        raise ValueError(f"bad fixture header {lines[0]!r}")
    fx = EOFixture(g=int(m.group(1)))
    top = fx.g * fx.g
    for ln in lines[1:]:
        if m := STRATUM_RE.match(ln):
            label, length, body = m.group(1), int(m.group(2)), m.group(3)
            cls = from_poly(parse_poly(body), fx.g)
            if cls.terms and cls.degree != top - length:
                raise ValueError(f"stratum {label}: degree {cls.degree} != g^2 - len = {top - length}")
            if not cls.terms:
                raise ValueError(f"stratum {label}: class reduces to zero")
            fx.strata.append(Stratum(label, length, cls))
        elif m := NORMALIZER_RE.match(ln):
            fx.normalizer = _exponent_of(parse_poly(m.group(1)), fx.g)
        elif m := PRODUCT_RE.match(ln):
            fx.products.append(ProductCheck(m.group(1), _parse_weight_spec(m.group(2), fx.g), parse_poly(m.group(3))))
        elif m := INERT_RE.match(ln):
            fx.inert.append(ProductCheck(m.group(1), _parse_weight_spec(m.group(2), fx.g), parse_poly(m.group(3))))
        else:
            raise ValueError(f"unrecognized fixture line {ln!r}")
    if not fx.normalizer:
        raise ValueError("fixture has no normalizer")
    return fx


def load_fixture(g: int) -> EOFixture:
    """Bundled fixture for g = 2 or 3."""
    name = f"eo_g{g}.txt"
    try:
        text = resources.files("siegel_positivity.chow").joinpath("data", name).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ValueError(f"no bundled EO fixture for g={g}") from None
    return parse_fixture(text)


def _resolve_weight(spec: tuple, g: int) -> list:
    out = []
    for item in spec:
        out.append(Poly.var(item) if isinstance(item, str) else item)
    if len(out) != g:
        raise ValueError(f"weight {spec} cannot be used with g={g}")
    return out


def product_value(fx: EOFixture, stratum: Stratum, weight: Sequence) -> Poly:
    return intersection_number(stratum.cls, weight, stratum.length, fx.normalizer)


@dataclass(frozen=True)
class VerifyResult:
    label: str
    status: str  # "match", "mismatch", "missing"
    computed: Poly | None
    expected: Poly


def verify(fx: EOFixture) -> list[VerifyResult]:
    results = []
    for check in fx.products:
        stratum = fx.stratum(check.label)
        if stratum is None:
            results.append(VerifyResult(check.label, "missing", None, check.expected))
            continue
        computed = product_value(fx, stratum, _resolve_weight(check.weight, fx.g))
        status = "match" if computed == check.expected else "mismatch"
        results.append(VerifyResult(check.label, status, computed, check.expected))
    return results


def not_nef_witness(fx: EOFixture, weight: Sequence[int], p_value: int) -> tuple[str, Fraction] | None:
    """First stratum, by increasing length, with a negative intersection number at p_value."""
    weight = tuple(weight)
    if any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError("weight must be L-dominant")
    for stratum in sorted(fx.strata, key=lambda s: s.length):
        if stratum.length == 0:
            continue
        value = product_value(fx, stratum, weight).evaluate(p=p_value)
        if value < 0:
            return stratum.label, value
    return None
