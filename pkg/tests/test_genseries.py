from fractions import Fraction

import pytest

from conftest import catalan_ref, count_occurrences, dyck_words
from dycklat import genseries as gs
from dycklat.paths import count_disjoint_placements

SC2_EXPECTED = [0, 0, 0, 4, 30, 168, 840, 3960, 18018, 80080]
SC3_EXPECTED = [0, 0, 0, 2, 38, 322, 2112, 12210, 65494, 334334]

ORDER = 12


def ints(series):
    return gs.integer_coefficients(series)


def test_catalan_series():
    assert ints(gs.catalan_series(10)) == [catalan_ref(n) for n in range(11)]


def test_path_system_specializes_to_catalan():
    F, G, H = gs.duu_marked_system(ORDER)
    assert ints(F.subs(q=1)) == [catalan_ref(n) for n in range(ORDER + 1)]
    # G + H covers every nonempty path exactly once
    gh = (G + H).subs(q=1)
    assert ints(gh) == [0] + [catalan_ref(n) for n in range(1, ORDER + 1)]
    assert ints(H.subs(q=1))[:3] == [0, 0, 1]


def test_path_system_marks_duu_factors():
    F, _, _ = gs.duu_marked_system(8)
    duu_totals = F.derivative("q").subs(q=1)
    for n in range(9):
        brute = sum(count_occurrences(w, "duu") for w in dyck_words(n))
        assert duu_totals.coeff(n) == brute
    assert duu_totals.coeff(3) == 1


def test_trivariate_system_reduces_to_bivariate():
    F3, _, _ = gs.duu_valley_marked_system(8)
    F2, _, _ = gs.duu_marked_system(8)
    assert F3.subs(y=1) == F2
    # y tracks valleys: dF3/dy at q=y=1 totals the valley counts
    valley_totals = F3.derivative("y").subs(q=1, y=1)
    for n in range(9):
        brute = sum(count_occurrences(w, "du") for w in dyck_words(n))
        assert valley_totals.coeff(n) == brute


def test_valley_series_matches_brute_force():
    V = gs.valley_marked_series(8)
    assert ints(V.subs(q=1)) == [catalan_ref(n) for n in range(9)]
    dV = V.derivative("q").subs(q=1)
    for n in range(9):
        brute = sum(count_occurrences(w, "du") for w in dyck_words(n))
        assert dV.coeff(n) == brute


@pytest.mark.parametrize(
    "builder,factor",
    [
        (gs.dduu_marked_series, "dduu"),
        (gs.dudu_marked_series, "dudu"),
        (gs.duuu_marked_series, "duuu"),
    ],
)
def test_marked_series_ground_to_factor_counts(builder, factor):
    series = builder(7)
    assert ints(series.subs(q=1)) == [catalan_ref(n) for n in range(8)]
    totals = series.derivative("q").subs(q=1)
    for n in range(8):
        brute = sum(count_occurrences(w, factor) for w in dyck_words(n))
        assert totals.coeff(n) == brute


def test_factor_count_series_cross_checked_routes():
    dduu, dudu, duuu = gs.factor_count_series(10)
    assert ints(dduu)[:6] == [0, 0, 0, 0, 1, 7]
    assert ints(dudu)[:6] == [0, 0, 0, 1, 5, 21]
    assert ints(duuu) == ints(dduu)


def test_mirror_symmetric_factors_agree():
    # dddu is the reversal-complement of duuu, so totals coincide
    for n in range(8):
        a = sum(count_occurrences(w, "dddu") for w in dyck_words(n))
        b = sum(count_occurrences(w, "duuu") for w in dyck_words(n))
        assert a == b


def test_valley_moment_series():
    pairs = gs.ordered_valley_pairs_series(8)
    triples = gs.ordered_valley_triples_series(8)
    for n in range(9):
        vs = [count_occurrences(w, "du") for w in dyck_words(n)]
        assert pairs.coeff(n) == sum(v * (v - 1) for v in vs)
        assert triples.coeff(n) == sum(v * (v - 1) * (v - 2) for v in vs)


def test_disjoint_valley_duu_pairs():
    series = gs.disjoint_valley_duu_series(7)
    for n in range(8):
        brute = sum(
            count_disjoint_placements(w, ("du", "duu")) for w in dyck_words(n)
        )
        assert series.coeff(n) == brute


def test_sc2_sequence_and_routes():
    series = gs.sc2_series(ORDER)
    assert ints(series)[:10] == SC2_EXPECTED
    assert gs.sc2_series_from_derivatives(ORDER) == gs.sc2_series_closed_form(ORDER)


def test_sc3_sequence_and_routes():
    series = gs.sc3_series(ORDER)
    assert ints(series)[:10] == SC3_EXPECTED
    assert gs.sc3_series_from_derivatives(ORDER) == gs.sc3_series_closed_form(ORDER)


def test_chain_series_coefficients_are_nonnegative_integers():
    for series in (gs.sc2_series(16), gs.sc3_series(16)):
        values = ints(series)
        assert all(v >= 0 for v in values)
        assert values[:3] == [0, 0, 0]


def test_numerator_polynomial_factorization():
    # P = (1 - 4x)^3 (1 - x - x^2)
    cubic = [1, -12, 48, -64]
    other = [1, -1, -1]
    product = [0] * 6
    for i, a in enumerate(cubic):
        for j, b in enumerate(other):
            product[i + j] += a * b
    assert tuple(product) == gs.CHAINS3_P_COEFFS


def test_numerators_at_the_singularity():
    p_at_quarter = sum(Fraction(c, 4**k) for k, c in enumerate(gs.CHAINS3_P_COEFFS))
    assert p_at_quarter == 0  # the (1-4x)^3 factor vanishes
    q_at_quarter = sum(Fraction(c, 4**k) for k, c in enumerate(gs.CHAINS3_Q_COEFFS))
    assert q_at_quarter == Fraction(-3, 128)


def test_integer_coefficients_rejects_fractions():
    half = gs.catalan_series(3) / 2
    with pytest.raises(ValueError):
        gs.integer_coefficients(half)
