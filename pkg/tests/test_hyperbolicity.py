import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ssyt_count
from siegel_positivity.hyperbolicity import (
    analyze,
    constituents_for,
    explain,
    k_threshold,
    lambda_k_sym2,
    log_canonical_exponent,
    p_threshold,
    strict_partition_height_check,
)
from siegel_positivity.partitions import Partition, distinct_part_partitions
from siegel_positivity.positivity import next_prime
from siegel_positivity.rootdata import automorphic_weight
from siegel_positivity.symfunc import plethysm

P = Partition

# graded pieces of the exterior powers of Sym^2, as automorphic weights
EXTERIOR_TABLE = {
    2: {
        1: [(0, -2)],
        2: [(-1, -3)],
        3: [(-3, -3)],
    },
    3: {
        1: [(0, 0, -2)],
        2: [(0, -1, -3)],
        3: [(-1, -1, -4), (0, -3, -3)],
        4: [(-1, -3, -4)],
        5: [(-2, -4, -4)],
        6: [(-4, -4, -4)],
    },
    4: {
        1: [(0, 0, 0, -2)],
        2: [(0, 0, -1, -3)],
        3: [(0, -1, -1, -4), (0, 0, -3, -3)],
        4: [(-1, -1, -1, -5), (0, -1, -3, -4)],
        5: [(-1, -1, -3, -5), (0, -2, -4, -4)],
        6: [(-1, -2, -4, -5), (0, -4, -4, -4)],
        7: [(-1, -4, -4, -5), (-2, -2, -5, -5)],
        8: [(-2, -4, -5, -5)],
        9: [(-3, -5, -5, -5)],
        10: [(-5, -5, -5, -5)],
    },
}

S_2222_G3 = {(-2, -6, -8), (-3, -6, -7), (-4, -4, -8), (-4, -6, -6)}

S_2_7_G4 = {
    (-2, -8, -8, -10), (-3, -6, -9, -10), (-3, -7, -9, -9), (-3, -8, -8, -9),
    (-4, -4, -10, -10), (-4, -6, -8, -10), (-4, -7, -8, -9), (-4, -8, -8, -8),
    (-5, -5, -9, -9), (-5, -6, -8, -9), (-5, -7, -7, -9), (-6, -6, -6, -10),
    (-6, -6, -8, -8), (-7, -7, -7, -7),
}


def weights_of(pieces, g):
    return {automorphic_weight(eta, g) for eta, _ in pieces}


@pytest.mark.parametrize("g, k", [(g, k) for g, rows in EXTERIOR_TABLE.items() for k in rows])
def test_exterior_table(g, k):
    assert weights_of(lambda_k_sym2(k, g), g) == set(EXTERIOR_TABLE[g][k])


def test_lambda_k_examples():
    assert set(eta for eta, _ in lambda_k_sym2(5, 6)) == {P((6, 1, 1, 1, 1)), P((5, 3, 1, 1)), P((4, 4, 2))}
    assert lambda_k_sym2(1, 1) == [(P((2,)), 1)]
    assert lambda_k_sym2(5, 3) == [(P((4, 4, 2)), 1)]
    with pytest.raises(ValueError):
        lambda_k_sym2(0, 2)


def test_two_two_plethysms():
    assert weights_of(plethysm((2, 2), (2,), max_height=2), 2) == {(-2, -6), (-4, -4)}
    assert weights_of(plethysm((2, 2, 2, 2), (2,), max_height=3), 3) == S_2222_G3
    assert weights_of(plethysm((2,) * 7, (2,), max_height=4), 4) == S_2_7_G4


def test_analyze_examples():
    r = analyze((1, 1), 2, 11)
    assert r.verdict == "certified"
    assert [(c.eta, c.weight, c.certificate.route) for c in r.constituents] == [(P((3, 1)), (-1, -3), "direct")]
    r = analyze((2, 2), 2, 7)
    assert r.verdict == "certified"
    assert {c.weight for c in r.constituents} == {(-2, -6), (-4, -4)}
    assert not any("general threshold" in n for n in analyze((1, 1), 2, 11).notes)


def test_analyze_b3():
    r = analyze((2,) * 7, 4, 31)
    assert r.verdict == "certified"
    assert {c.weight for c in r.constituents} == S_2_7_G4
    assert {c.multiplicity for c in r.constituents} == {1, 2}


def test_analyze_verdicts():
    assert analyze((2, 2, 2, 2), 3, 17).verdict == "certified"
    r = analyze((2, 2, 2, 2), 3, 13)
    assert r.verdict == "filtration_fails" and not r.filtration_ok
    r = analyze((1,), 2, 5)
    assert r.verdict == "not_certified" and r.uncovered == [(0, -2)]
    r = analyze((1, 1, 1, 1), 3, 11)
    assert r.verdict == "not_certified" and r.uncovered == [(-1, -3, -4)]
    assert analyze((1, 1, 1, 1), 3, 19).verdict == "certified"
    with pytest.raises(ValueError):
        analyze((1, 1), 2, 9)


def test_empty_bundle_note():
    r = analyze((1, 1, 1, 1), 2, 5)
    assert r.verdict == "certified" and not r.constituents
    assert any("zero" in n for n in r.notes)


def test_below_threshold_note():
    r = analyze((1, 1, 1), 2, 5)  # Lambda^3 is parallel, fine for every p
    assert r.verdict == "certified"
    assert any("below the general threshold" in n and "11" in n for n in r.notes)


def test_report_deterministic():
    a = json.dumps(analyze((2, 2, 2, 2), 3, 17).to_json(), sort_keys=True)
    b = json.dumps(analyze((2, 2, 2, 2), 3, 17).to_json(), sort_keys=True)
    assert a == b


def test_explain_mentions_numbers():
    lines = explain(analyze((1, 1), 2, 11))
    text = "\n".join(lines)
    assert "2[[2,1]]" in text or "2[[2]]" in text
    assert "(-1,-7)" in text and "orbit ratio = 7" in text


def test_constituents_closed_form_sources():
    pieces = constituents_for(P((1,) * 5), 6)
    assert {src for _, _, src in pieces} == set(distinct_part_partitions(5))


@pytest.mark.parametrize("g, k, p", [(1, 1, 5), (2, 2, 11), (3, 4, 19), (4, 7, 29), (5, 11, 41)])
def test_thresholds(g, k, p):
    assert k_threshold(g) == k and p_threshold(g) == p


def test_height_check_examples():
    assert strict_partition_height_check(7, 4)
    assert not strict_partition_height_check(6, 4)
    assert P((3, 2, 1)) in set(distinct_part_partitions(6))
    assert strict_partition_height_check(2, 2)


@pytest.mark.parametrize("lam, g, e", [((1, 1), 2, 1), ((2,), 2, 3), ((2, 2), 2, 2)])
def test_log_canonical_exponent(lam, g, e):
    assert log_canonical_exponent(lam, g) == e


def test_log_canonical_exponent_by_tableaux():
    # S_(2,2) of a rank 2 space is det^2: one tableau, exponent 4 * 1 / 2
    assert ssyt_count((2, 2), 2) == 1
    for lam, g in [((2, 2), 2), ((2,), 2), ((3, 1), 3), ((2, 1), 3), ((2, 2, 2), 3)]:
        assert log_canonical_exponent(lam, g) * g == sum(lam) * ssyt_count(lam, g)


def test_log_canonical_exponent_sym2_brute_force():
    # det of Sym^2 of a 2x2 matrix [[a,b],[c,d]] on the basis x^2, xy, y^2
    import itertools

    for a, b, c, d in itertools.product(range(-2, 3), repeat=4):
        m = [[a * a, a * b, b * b], [2 * a * c, a * d + b * c, 2 * b * d], [c * c, c * d, d * d]]
        det3 = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        assert det3 == (a * d - b * c) ** 3


def test_sweep_at_threshold():
    for g in (2, 3, 4):
        p = next_prime(p_threshold(g))
        for k in range(k_threshold(g), g * (g + 1) // 2 + 1):
            r = analyze((1,) * k, g, p)
            assert r.verdict == "certified", (g, k, r.uncovered)
            assert all(c.weight[0] <= -1 for c in r.constituents)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 6), st.integers(1, 25))
def test_height_check_iff(g, k):
    assert strict_partition_height_check(k, g) == (k >= k_threshold(g))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(1, 6))
def test_closed_form_matches_engine(k, g):
    assert lambda_k_sym2(k, g) == plethysm((1,) * k, (2,), max_height=g)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4).flatmap(lambda g: st.tuples(st.just(g), st.integers(1, g * (g + 1) // 2))), st.sampled_from([5, 7, 11, 13, 17, 19, 23, 29, 31]))
def test_certified_reports_have_negative_first_entry(case, p):
    g, k = case
    r = analyze((1,) * k, g, p)
    if r.verdict == "certified":
        assert all(c.weight[0] <= -1 for c in r.constituents)
        assert k >= k_threshold(g) or not r.constituents
