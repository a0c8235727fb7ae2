from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rankin_lab import compat
from rankin_lab.errors import BadIndex, NotHalfOdd, UnsupportedCase
from rankin_lab.ltheory import critical_places
from rankin_lab.weights import HalfInt, PureWeight, k_eta, pair_kappa, parse_pure

from strategies import pure_pair

MU, NU = parse_pure("5,-5;6,-4"), parse_pure("5,-5;5,-5")
ZERO = parse_pure("0,0;0,0")
ONE = parse_pure("1,0;1,0")


def test_mm_stats():
    assert compat.mm_stats(MU, NU, 2) == compat.MMStats(2, 10, 10)
    assert compat.mm_stats(MU, NU, 3) == compat.MMStats(3, 0, 0)
    for t in (2, 3, 4):
        s = compat.mm_stats(ZERO, ZERO, t)
        assert (s.M, s.m) == (0, 0)
    with pytest.raises(BadIndex):
        compat.mm_stats(MU, NU, 5)


def test_classifier_examples():
    half = HalfInt(1)
    b = compat.classify_case(2, 0, half, 0)
    assert (b.label, b.vj, b.l_j) == ("b", ((0, 0), (1, 1)), 1)
    a = compat.classify_case(2, 0, half, 5)
    assert (a.label, a.vj, a.l_j) == ("a", ((4, -4), (6, -4)), 2)
    d = compat.classify_case(2, 0, half, -1)
    assert (d.label, d.vj, d.l_j) == ("d", ((1, -1), (1, 1)), 0)
    assert compat.classify_case(2, 0, HalfInt(0), 0).to_json() == {"label": "d", "vj": [[0, 0], [0, 0]], "l": 0}


@settings(max_examples=400)
@given(st.integers(2, 5), st.integers(-30, 30), st.integers(-20, 20), st.integers(-20, 20))
def test_cases_mutually_exclusive(n, k, twice_kappa, j):
    flags = compat.case_flags(n, k, HalfInt(twice_kappa), j)
    assert sum(flags.values()) <= 1
    label = compat.classify_case(n, k, HalfInt(twice_kappa), j).label
    assert label == next((x for x, on in flags.items() if on), "none")


@settings(max_examples=200)
@given(st.integers(2, 5), st.integers(-30, 30), st.integers(-20, 20), st.integers(-20, 20))
def test_vj_entries_are_dominant_with_right_degree(n, k, twice_kappa, j):
    case = compat.classify_case(n, k, HalfInt(twice_kappa), j)
    if case.label == "none":
        return
    left, right = case.vj
    assert list(left) == sorted(left, reverse=True)
    assert list(right) == sorted(right, reverse=True)
    assert case.l_j == {"a": 2 * (n - 1), "b": n - 1, "c": n - 1, "d": 0}[case.label]


def test_cond_sets_and_compat():
    assert compat.cond_set(MU, NU, "b") == (0,)
    assert compat.cond_set(MU, NU, "c") == ()
    assert compat.cond_set(ZERO, ZERO, "b") == ()
    assert compat.compatible(MU, NU) == "via_b"
    assert compat.compatible(ONE, ZERO) is False
    assert compat.compatible(ZERO, ZERO) is False


@settings(max_examples=300, deadline=None)
@given(pure_pair())
def test_simplified_tests_match_windows(pair):
    mu, nu = pair
    assert compat.simplified_b(mu, nu) == bool(compat.cond_set(mu, nu, "b"))
    assert compat.simplified_c(mu, nu) == bool(compat.cond_set(mu, nu, "c"))


@settings(max_examples=300, deadline=None)
@given(pure_pair())
def test_lemma_3_4_equivalence(pair):
    mu, nu = pair
    rep = compat.verify_lemma_3_4(mu, nu)
    assert rep.verdict in ("PASS", "vacuous-PASS")
    for which in ("b", "c"):
        sols = compat.cond_set(mu, nu, which)
        if sols:
            assert list(sols) == list(critical_places(mu, nu).places)


def test_lemma_3_4_examples():
    assert compat.verify_lemma_3_4(MU, NU).verdict == "PASS"
    assert compat.verify_lemma_3_4(ZERO, ZERO).verdict == "vacuous-PASS"


def test_hom_dim():
    assert compat.hom_dim_Fxi(MU, NU, 0) == 1
    assert compat.hom_dim_Fxi_brute(MU, NU, 0) == 1
    for j in range(-3, 4):
        if compat.classify_pair(ONE, ZERO, j).label == "none":
            with pytest.raises(UnsupportedCase):
                compat.hom_dim_Fxi(ONE, ZERO, j)


@settings(max_examples=40, deadline=None)
@given(pure_pair(nmax=3, lo=-3, hi=3), st.integers(-3, 3))
def test_hom_dim_closed_form_vs_invariants(pair, j):
    mu, nu = pair
    if compat.classify_pair(mu, nu, j).label not in ("b", "c"):
        return
    assert compat.hom_dim_Fxi(mu, nu, j) == compat.hom_dim_Fxi_brute(mu, nu, j)


def test_central_point():
    assert compat.central_point(MU, NU) == 0
    w3 = PureWeight.from_left((3, 0), 3)
    assert compat.central_point(w3, PureWeight.from_left((0, 0), 0)) == -1
    with pytest.raises(NotHalfOdd):
        compat.central_point(ZERO, ZERO)
