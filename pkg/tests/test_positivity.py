import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import orbit_ratio_brute
from siegel_positivity.positivity import (
    AmpleCertificate,
    certify,
    direct_threshold,
    gamma_of,
    is_orbitally_p_close,
    is_p_small,
    is_parallel_ample,
    is_z_empty_ample,
    levi_dominant_box,
    min_certifying_prime,
    next_prime,
    orbit_ratio_bound,
    orbit_ratio_max,
    region_rows,
    region_scan,
    tensor_power_bound,
    tensor_power_only,
)
from siegel_positivity.rootdata import RootDatumC
from strategies import levi_dominant

D2 = RootDatumC(2)


def test_p_small():
    assert is_p_small((0, 0), 3, D2)
    assert not is_p_small((0, 0), 2, D2)
    assert is_p_small((1, 0), 5, D2) and not is_p_small((1, 0), 3, D2)
    with pytest.raises(ValueError):
        is_p_small((0, 0), 4, D2)
    with pytest.raises(ValueError):
        is_p_small((-1, 0), 5, D2)


@pytest.mark.parametrize("gamma, ratio", [((-1, -7), Fraction(7)), ((-3, -13), Fraction(13, 3)), ((-5, -5), Fraction(1)), ((4, 4, 4), Fraction(1))])
def test_orbit_ratio_examples(gamma, ratio):
    assert orbit_ratio_max(gamma) == ratio
    assert orbit_ratio_brute(gamma) == ratio


def test_orbit_ratio_undefined_at_zero():
    assert orbit_ratio_max((0, 0)) is None
    assert not is_orbitally_p_close((0, 0), 5)


def test_z_empty():
    assert is_z_empty_ample((-1, -7))
    assert not is_z_empty_ample((0, -6, -10))
    assert not is_z_empty_ample((1, -7, -9, -13))
    assert not is_z_empty_ample((-3, -3))
    assert not is_z_empty_ample((3, -5))  # 3 + (-5) < 0 but 3 >= 0


def test_gamma():
    assert gamma_of((-1, -3)) == (-1, -7)
    assert gamma_of((-1, -3, -4)) == (0, -6, -10)
    assert gamma_of((-1, -4, -4, -5)) == (1, -7, -9, -13)


def test_certify_examples():
    assert certify((-3, -3), 5, D2).route == "parallel"
    c = certify((-1, -3), 11, D2)
    assert c.route == "direct" and c.min_prime == 11
    c = certify((-1, -3), 5, D2)
    assert c.route == "none" and c.min_prime is None and not c.certified
    assert tensor_power_bound((-1, -3)) == 11
    c = certify((-1, -3, -4), 19, RootDatumC(3))
    assert c.route == "tensor_power" and not c.z_empty_ok
    assert direct_threshold((-1, -3, -4)) is None


def test_certify_preconditions():
    with pytest.raises(ValueError):
        certify((-1, -3), 9)
    with pytest.raises(ValueError):
        certify((-3, -1), 11)
    with pytest.raises(ValueError):
        certify((-1, -3), 11, RootDatumC(3))


def test_certificate_invariant():
    with pytest.raises(ValueError):
        AmpleCertificate(weight=(0, 0), route="none", min_prime=5)
    with pytest.raises(ValueError):
        AmpleCertificate(weight=(0, 0), route="direct")
    with pytest.raises(ValueError):
        AmpleCertificate(weight=(0, 0), route="magic", min_prime=2)
    j = certify((-1, -3), 11).to_json()
    assert j["orbit_ratio"] == "7" and j["weight"] == [-1, -3]


@pytest.mark.parametrize("lam, p", [((-1, -3), 11), ((-2, -6), 7), ((0, -2), None), ((-3, -3), 2), ((-1, -3, -4), 19)])
def test_min_prime(lam, p):
    assert min_certifying_prime(lam) == p


def test_parallel():
    assert is_parallel_ample((-2, -2, -2))
    assert not is_parallel_ample((0, 0)) and not is_parallel_ample((2, 2)) and not is_parallel_ample((-1, -2))


def test_next_prime():
    assert [next_prime(n) for n in (0, 2, 8, 14, 24)] == [2, 2, 11, 17, 29]


def test_region_examples():
    box = (-44, 5)
    r5, r11, r31 = (region_scan(2, p, box) for p in (5, 11, 31))
    assert r5 <= r11 <= r31
    assert (-1, -3) in r11 - r5
    assert all((k, k) in r5 for k in range(-44, 0))
    assert not any(w[0] == 0 for w in r31)
    rows = region_rows(r5)
    assert rows == sorted(rows) and (-3, -1) in region_rows(r11)


def test_tensor_power_only_disjoint():
    extra = tensor_power_only(2, 11, (-12, 2))
    assert not extra & region_scan(2, 11, (-12, 2))
    assert all(w[0] <= -1 for w in extra)


def test_levi_box():
    pts = list(levi_dominant_box(2, -2, 1))
    assert len(pts) == 10 and all(a >= b for a, b in pts)


# property suites

def gammas(g_max=4):
    return st.integers(1, g_max).flatmap(lambda g: st.lists(st.integers(-40, 40), min_size=g, max_size=g))


@settings(max_examples=200)
@given(gammas())
def test_orbit_ratio_at_least_one(gamma):
    r = orbit_ratio_max(gamma)
    if any(gamma):
        assert r is not None and r >= 1
    else:
        assert r is None


@settings(max_examples=150)
@given(st.integers(1, 5), st.integers(-30, 30).filter(bool))
def test_orbit_ratio_parallel(g, c):
    assert orbit_ratio_max((c,) * g) == 1


@settings(max_examples=150)
@given(gammas(3))
def test_orbit_ratio_matches_brute_force(gamma):
    assert orbit_ratio_max(gamma) == orbit_ratio_brute(gamma)


@settings(max_examples=150)
@given(gammas(), st.randoms())
def test_orbit_ratio_symmetries(gamma, rnd):
    r = orbit_ratio_max(gamma)
    assert orbit_ratio_max([-x for x in gamma]) == r
    shuffled = [abs(x) for x in gamma]
    rnd.shuffle(shuffled)
    assert orbit_ratio_max(shuffled) == r


def test_orbit_ratio_bound_random():
    # gamma = 2 lam + 2 rho_L has coordinates of one parity, so nonzero
    # pairings are at least 2 on the short orbit and the bound applies
    rnd = random.Random(20261017)
    checked = 0
    while checked < 10_000:
        g = rnd.randint(1, 5)
        lam = sorted((rnd.randint(-60, 60) for _ in range(g)), reverse=True)
        gamma = gamma_of(lam)
        r = orbit_ratio_max(gamma)
        if r is None:
            continue
        assert r <= orbit_ratio_bound(gamma), (lam, gamma)
        checked += 1


def test_orbit_ratio_bound_needs_parity():
    assert orbit_ratio_max((2, 1)) == 3 > orbit_ratio_bound((2, 1))


z_empty_gammas = st.integers(1, 4).flatmap(
    lambda g: st.sets(st.integers(-80, -1), min_size=g, max_size=g).map(lambda s: tuple(sorted(s, reverse=True)))
)


@settings(max_examples=150)
@given(z_empty_gammas)
def test_orbit_ratio_bound_z_empty(gamma):
    assert is_z_empty_ample(gamma)
    a = [abs(x) for x in gamma]
    # every nonzero pairing is at least 1 and at most |gamma_i| + |gamma_j|
    assert 1 <= orbit_ratio_max(gamma) <= 2 * max(a)


@settings(max_examples=150)
@given(gammas())
def test_z_empty_consequences(gamma):
    if is_z_empty_ample(gamma):
        assert all(a > b for a, b in zip(gamma, gamma[1:]))
        assert all(x < 0 for x in gamma)


PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(levi_dominant), st.sampled_from(PRIMES), st.sampled_from(PRIMES))
def test_certify_monotone_in_p(lam, p, q):
    p, q = sorted((p, q))
    a, b = certify(lam, p), certify(lam, q)
    if a.certified:
        assert b.certified
    if a.route == "direct":
        assert b.route == "direct"
    m = min_certifying_prime(lam)
    assert a.certified == (m is not None and p >= m)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda g: st.tuples(st.just(g), st.lists(st.integers(0, 6), min_size=g, max_size=g))), st.sampled_from(PRIMES[1:]))
def test_p_small_downward_closed(case, p):
    g, xs = case
    lam = tuple(sorted(xs, reverse=True))
    d = RootDatumC(g)
    if not is_p_small(lam, p, d):
        return
    for mu in levi_dominant_box(g, 0, max(lam)):
        if d.is_dominant(mu) and d.dominates(lam, mu):
            assert is_p_small(mu, p, d)
