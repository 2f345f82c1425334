"""Weight-level certificates of (phi, D)-ampleness for automorphic bundles.

Three sufficient routes are tried for an L-dominant weight lam at a prime p:

* ``parallel``: lam = k(1, ..., 1) with k < 0, valid for every p;
* ``direct``: gamma = 2 lam + 2 rho_L is Z_empty-ample and orbitally p-close;
* ``tensor_power``: lam_1 <= -1 and p >= (g + 1)|lam_g| + g.

A certificate is never a proof of non-ampleness.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .rootdata import RootDatumC, Weight, format_weight, pairing, rho_C, rho_L_doubled
from .symfunc import is_prime

ROUTES = ("parallel", "direct", "tensor_power", "none")


@dataclass(frozen=True)
class AmpleCertificate:
    weight: Weight
    route: str
    min_prime: int | None = None
    orbit_ratio: Fraction | None = None
    z_empty_ok: bool = False
    notes: str = ""

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if (self.route == "none") != (self.min_prime is None):
            raise ValueError("min_prime must be absent exactly when route is none")

    @property
    def certified(self) -> bool:
        return self.route != "none"

    def to_json(self) -> dict:
        d = asdict(self)
        d["weight"] = list(self.weight)
        d["orbit_ratio"] = None if self.orbit_ratio is None else str(self.orbit_ratio)
        return d


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def is_p_small(lam: Sequence[int], p: int, datum: RootDatumC) -> bool:
    """<lam + rho, alpha^vee> <= p for every positive coroot."""
    _check_prime(p)
    lam = tuple(lam)
    if len(lam) != datum.g or not datum.is_dominant(lam):
        raise ValueError(f"{format_weight(lam)} is not dominant for Sp_{2 * datum.g}")
    shifted = tuple(a + b for a, b in zip(lam, rho_C(datum.g)))
    return max(pairing(shifted, c) for c in datum.positive_coroots) <= p


@lru_cache(maxsize=None)
def _coroot_orbits(g: int):
    return tuple(tuple(sorted(orbit)) for orbit in RootDatumC(g).coroot_orbits() if orbit)


def orbit_ratio_max(gamma: Sequence[int], datum: RootDatumC | None = None) -> Fraction | None:
    """max |<gamma, w a>| / |<gamma, a>| over coroots a with nonzero pairing and w in W.

    For a fixed coroot orbit this is the largest absolute pairing over the
    orbit divided by the smallest nonzero one.  Returns None when gamma
    pairs to zero with every coroot (gamma = 0).
    """
    gamma = tuple(gamma)
    g = len(gamma) if datum is None else datum.g
    if len(gamma) != g:
        raise ValueError("length mismatch")
    best = None
    for orbit in _coroot_orbits(g):
        values = [abs(pairing(gamma, c)) for c in orbit]
        nonzero = [v for v in values if v]
        if not nonzero:
            continue
        ratio = Fraction(max(nonzero), min(nonzero))
        if best is None or ratio > best:
            best = ratio
    return best


def orbit_ratio_bound(gamma: Sequence[int]) -> Fraction:
    """Cheap upper bound max_{i<=j} (|gamma_i| + |gamma_j|) / 2 used in the tensor-power argument."""
    a = [abs(x) for x in gamma]
    return Fraction(max(a[i] + a[j] for i in range(len(a)) for j in range(i, len(a))), 2)


def is_orbitally_p_close(gamma: Sequence[int], p: int) -> bool:
    ratio = orbit_ratio_max(gamma)
    return ratio is not None and ratio <= p - 1


def is_z_empty_ample(gamma: Sequence[int], datum: RootDatumC | None = None) -> bool:
    """Strictly positive on Levi simple coroots, strictly negative on the other positive coroots."""
    gamma = tuple(gamma)
    g = len(gamma)
    if any(gamma[i] <= gamma[i + 1] for i in range(g - 1)):
        return False
    if any(x >= 0 for x in gamma):
        return False
    return all(gamma[i] + gamma[j] < 0 for i in range(g) for j in range(i + 1, g))


def gamma_of(lam: Sequence[int]) -> Weight:
    """gamma = 2 lam + 2 rho_L."""
    lam = tuple(lam)
    return tuple(2 * a + b for a, b in zip(lam, rho_L_doubled(len(lam))))


def is_parallel_ample(lam: Sequence[int]) -> bool:
    lam = tuple(lam)
    return bool(lam) and len(set(lam)) == 1 and lam[0] < 0


def direct_threshold(lam: Sequence[int]) -> int | None:
    """Smallest prime at which the direct route applies, if any."""
    gamma = gamma_of(lam)
    ratio = orbit_ratio_max(gamma)
    if ratio is None or not is_z_empty_ample(gamma):
        return None
    return next_prime(math.ceil(ratio) + 1)


def tensor_power_bound(lam: Sequence[int]) -> int | None:
    """(g + 1)|lam_g| + g when lam_1 <= -1, else None."""
    lam = tuple(lam)
    if not lam or lam[0] > -1:
        return None
    g = len(lam)
    return (g + 1) * abs(lam[-1]) + g


def tensor_power_threshold(lam: Sequence[int]) -> int | None:
    bound = tensor_power_bound(lam)
    return None if bound is None else next_prime(bound)


def _require_levi_dominant(lam: Weight) -> None:
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{format_weight(lam)} is not L-dominant")


def certify(
    lam: Sequence[int],
    p: int,
    datum: RootDatumC | None = None,
    routes: Iterable[str] = ("parallel", "direct", "tensor_power"),
) -> AmpleCertificate:
    lam = tuple(lam)
    _check_prime(p)
    _require_levi_dominant(lam)
    if datum is not None and len(lam) != datum.g:
        raise ValueError("weight length does not match g")
    routes = tuple(routes)
    gamma = gamma_of(lam)
    ratio = orbit_ratio_max(gamma)
    z_ok = is_z_empty_ample(gamma)
    common = dict(weight=lam, orbit_ratio=ratio, z_empty_ok=z_ok)

    if "parallel" in routes and is_parallel_ample(lam):
        return AmpleCertificate(route="parallel", min_prime=2, notes="parallel weight k(1,...,1), k<0", **common)

    direct_p = direct_threshold(lam)
    if "direct" in routes and direct_p is not None and p >= direct_p:
        return AmpleCertificate(
            route="direct",
            min_prime=direct_p,
            notes=f"gamma={format_weight(gamma)} Z_empty-ample, orbit ratio {ratio} <= p-1={p - 1}",
            **common,
        )

    bound = tensor_power_bound(lam)
    if "tensor_power" in routes and bound is not None and p >= bound:
        return AmpleCertificate(
            route="tensor_power",
            min_prime=next_prime(bound),
            notes=f"lam_1={lam[0]} <= -1 and p >= (g+1)|lam_g|+g = {bound}",
            **common,
        )

    reasons = []
    if lam and lam[0] >= 0:
        reasons.append(f"lam_1={lam[0]} >= 0")
    if not z_ok:
        reasons.append(f"gamma={format_weight(gamma)} not Z_empty-ample")
    elif ratio is not None and ratio > p - 1:
        reasons.append(f"orbit ratio {ratio} > p-1={p - 1}")
    if bound is not None and p < bound:
        reasons.append(f"p < (g+1)|lam_g|+g = {bound}")
    return AmpleCertificate(route="none", notes="; ".join(reasons), **common)


def min_certifying_prime(
    lam: Sequence[int],
    datum: RootDatumC | None = None,
    routes: Iterable[str] = ("parallel", "direct", "tensor_power"),
) -> int | None:
    """Smallest prime with some route succeeding; each route has a closed-form threshold."""
    lam = tuple(lam)
    _require_levi_dominant(lam)
    routes = tuple(routes)
    candidates = []
    if "parallel" in routes and is_parallel_ample(lam):
        candidates.append(2)
    if "direct" in routes:
        t = direct_threshold(lam)
        if t is not None:
            candidates.append(t)
    if "tensor_power" in routes:
        t = tensor_power_threshold(lam)
        if t is not None:
            candidates.append(t)
    return min(candidates, default=None)


def levi_dominant_box(g: int, lo: int, hi: int):
    """All weakly decreasing g-tuples with entries in [lo, hi]."""
    for w in product(range(hi, lo - 1, -1), repeat=g):
        if all(a >= b for a, b in zip(w, w[1:])):
            yield w


def region_scan(g: int, p: int, box: tuple[int, int], with_tensor_power: bool = False) -> set[Weight]:
    """L-dominant weights in the box certified at p.

    Uses only the parallel and direct routes unless ``with_tensor_power``.
    """
    _check_prime(p)
    lo, hi = box
    routes = ("parallel", "direct", "tensor_power") if with_tensor_power else ("parallel", "direct")
    return {w for w in levi_dominant_box(g, lo, hi) if certify(w, p, routes=routes).certified}


def tensor_power_only(g: int, p: int, box: tuple[int, int]) -> set[Weight]:
    """Points the tensor-power route would add to the region."""
    return region_scan(g, p, box, with_tensor_power=True) - region_scan(g, p, box)


def region_rows(region: Iterable[Weight]) -> list[tuple[int, ...]]:
    """Rows (k_g, ..., k_1) sorted lexicographically, abscissa first."""
    return sorted(tuple(reversed(w)) for w in region)
