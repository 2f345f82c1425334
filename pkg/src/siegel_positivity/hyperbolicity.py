"""Certification pipeline for S_lam of the log cotangent bundle of a Siegel variety.

By Kodaira-Spencer the log cotangent bundle is Sym^2 of the Hodge bundle, so
S_lam of it is filtered by S_eta(Hodge) for the constituents eta of
s_lam[s_2] with at most g rows.  Each of those is the automorphic bundle of
the reversed and negated weight of eta, which goes to ``positivity.certify``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .partitions import Partition, dim_gl, distinct_part_partitions, two_bracket
from .positivity import AmpleCertificate, certify, gamma_of
from .rootdata import RootDatumC, Weight, automorphic_weight, format_weight
from .symfunc import filtration_condition, is_column, is_prime, plethysm

log = logging.getLogger(__name__)

VERDICTS = ("certified", "not_certified", "filtration_fails")

# largest degree |2 lam| at which the closed form is cross-checked by the engine
CROSS_CHECK_MAX_DEGREE = 16


@dataclass(frozen=True)
class Constituent:
    eta: Partition
    multiplicity: int
    weight: Weight
    certificate: AmpleCertificate
    source: Partition | None = None  # strict partition lam with eta = 2[lam], exterior case only


@dataclass
class HyperbolicityReport:
    g: int
    p: int
    lam: Partition
    filtration_ok: bool
    constituents: list[Constituent] = field(default_factory=list)
    verdict: str = "not_certified"
    uncovered: list[Weight] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "p": self.p,
            "lambda": list(self.lam),
            "filtration_ok": self.filtration_ok,
            "verdict": self.verdict,
            "constituents": [
                {
                    "eta": list(c.eta),
                    "multiplicity": c.multiplicity,
                    "weight": list(c.weight),
                    "certificate": c.certificate.to_json(),
                }
                for c in self.constituents
            ],
            "uncovered": [list(w) for w in self.uncovered],
            "notes": list(self.notes),
        }


def lambda_k_sym2(k: int, g: int) -> list[tuple[Partition, int]]:
    """Graded pieces of the k-th exterior power of Sym^2 on a rank g space.

    These are the 2[lam] for lam a strict partition of k with lam_1 <= g, all
    with multiplicity one.
    """
    if k < 1:
        raise ValueError("k must be positive")
    pieces = [(two_bracket(lam), 1) for lam in distinct_part_partitions(k) if lam[0] <= g]
    return sorted(pieces)


def k_threshold(g: int) -> int:
    return g * (g - 1) // 2 + 1


def p_threshold(g: int) -> int:
    return g * g + 3 * g + 1


def strict_partition_height_check(k: int, g: int) -> bool:
    """True iff every strict partition of k has largest part >= g."""
    return all(lam and lam[0] >= g for lam in distinct_part_partitions(k))


def log_canonical_exponent(lam, g: int) -> int:
    """Exponent e with det S_lam(V) = (det V)^e for V of rank g: |lam| dim / g."""
    lam = Partition(lam)
    if len(lam) > g:
        raise ValueError(f"{lam} has more than g={g} rows")
    num = lam.size * dim_gl(lam, g)
    if num % g:
        raise ArithmeticError(f"|lam| dim / g is not integral for {lam}, g={g}")
    return num // g


def constituents_for(lam: Partition, g: int, cache_dir=None) -> list[tuple[Partition, int, Partition | None]]:
    """Height-restricted constituents of s_lam[s_2], with their 2[.] source when lam is a column."""
    if is_column(lam):
        k = lam.size
        pieces = [(two_bracket(mu), 1, mu) for mu in distinct_part_partitions(k) if mu[0] <= g]
        pieces.sort()
        if 2 * k <= CROSS_CHECK_MAX_DEGREE:
            engine = plethysm(lam, (2,), max_height=g, cache_dir=cache_dir)
            if engine != [(eta, m) for eta, m, _ in pieces]:
                raise ArithmeticError(f"closed form and plethysm disagree for exterior power {k}")
        return pieces
    return [(eta, m, None) for eta, m in plethysm(lam, (2,), max_height=g, cache_dir=cache_dir)]


def analyze(lam, g: int, p: int, cache_dir=None) -> HyperbolicityReport:
    lam = Partition(lam)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not lam:
        raise ValueError("lam must be nonempty")
    datum = RootDatumC(g)
    report = HyperbolicityReport(g=g, p=p, lam=lam, filtration_ok=filtration_condition(lam, p))
    for eta, m, source in constituents_for(lam, g, cache_dir):
        weight = automorphic_weight(eta, g)
        cert = certify(weight, p, datum)
        report.constituents.append(Constituent(eta, m, weight, cert, source))
        if not cert.certified:
            report.uncovered.append(weight)

    if not report.filtration_ok:
        report.verdict = "filtration_fails"
        bound = f"p > {lam.size}" if is_column(lam) else f"p >= {2 * lam.size - 1}"
        report.notes.append(f"filtration condition not met: needs {bound}")
    elif report.uncovered:
        report.verdict = "not_certified"
    else:
        report.verdict = "certified"
        if not report.constituents:
            report.notes.append("no constituent of height <= g: the bundle is zero")
    if report.verdict == "certified" and is_column(lam) and p < p_threshold(g):
        report.notes.append(
            f"below the general threshold p >= g^2+3g+1 = {p_threshold(g)}, certificate still valid"
        )
    return report


def explain(report: HyperbolicityReport) -> list[str]:
    """Per-constituent derivation lines with all numbers substituted."""
    lines = []
    g = report.g
    for c in report.constituents:
        head = f"eta={c.eta}"
        if c.source is not None:
            arms = ",".join(str(x) for x in c.source)
            legs = ",".join(str(x - 1) for x in c.source)
            head += f" = 2[{c.source}] (Frobenius ({arms} | {legs}), diagonal hooks {list(c.eta.diagonal_hooks())})"
        lines.append(head)
        gamma = gamma_of(c.weight)
        lines.append(f"  weight = -reverse(eta padded to {g}) = {format_weight(c.weight)}")
        lines.append(f"  gamma = 2*weight + 2rho_L = {format_weight(gamma)}")
        levi = ", ".join(f"{gamma[i]} > {gamma[i + 1]}" for i in range(g - 1)) or "(none)"
        neg = ", ".join(f"{x} < 0" for x in gamma)
        sums = ", ".join(f"{gamma[i]}+{gamma[j]} < 0" for i in range(g) for j in range(i + 1, g)) or "(none)"
        lines.append(f"  Z_empty: {levi}; {neg}; {sums} -> {c.certificate.z_empty_ok}")
        lines.append(f"  orbit ratio = {c.certificate.orbit_ratio} vs p-1 = {report.p - 1}")
        if c.weight and c.weight[0] <= -1:
            bound = (g + 1) * abs(c.weight[-1]) + g
            lines.append(f"  tensor power bound (g+1)|k_g|+g = {g + 1}*{abs(c.weight[-1])}+{g} = {bound}")
        lines.append(f"  route = {c.certificate.route}" + (f" ({c.certificate.notes})" if c.certificate.notes else ""))
    return lines
