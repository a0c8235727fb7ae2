from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rankin_lab.errors import DimensionMismatch, NotDominant, NotPure
from rankin_lab.weights import (
    HalfInt,
    PureWeight,
    dominant_rep,
    dual,
    format_pair,
    inf_char,
    k_eta,
    kappa,
    parse_pure,
    validate_pure,
)

from strategies import dominant_any, pure


def test_halfint_json_forms():
    assert HalfInt(1).to_json() == "1/2"
    assert HalfInt(-3).to_json() == "-3/2"
    assert HalfInt(4).to_json() == 2
    assert HalfInt.of(Fraction(-1, 2)) == HalfInt(-1)
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_halfint_arithmetic_matches_fractions(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).to_fraction() == Fraction(a + b, 2)
    assert (x - y).to_fraction() == Fraction(a - b, 2)
    assert (x < y) == (a < b)
    assert x.floor() <= x.to_fraction() <= x.ceil()
    assert x.ceil() - x.floor() == (a % 2)


def test_halfint_hash_agrees_with_int():
    assert {HalfInt(4): "x"}[2] == "x"


def test_validate_pure_worked():
    mu = validate_pure([5, -5, 6, -4])
    assert (mu.left, mu.right, mu.w) == ((5, -5), (6, -4), 1)
    assert str(mu) == "5,-5;6,-4"


def test_validate_pure_rejects():
    with pytest.raises(NotPure):
        validate_pure([1, 0, 1, 1])
    with pytest.raises(NotDominant):
        validate_pure([0, 1, 1, 0])
    with pytest.raises(DimensionMismatch):
        validate_pure([1, 0, 1])
    with pytest.raises(DimensionMismatch):
        parse_pure("1,0;1")


def test_kappa_and_k_eta():
    mu, nu = parse_pure("5,-5;6,-4"), parse_pure("5,-5;5,-5")
    assert kappa(mu.w, nu.w) == HalfInt(1)
    assert k_eta(mu, nu) == 0


@given(dominant_any())
def test_dual_is_involution(lam):
    assert dual(dual(lam)) == lam
    assert dominant_rep(reversed(lam)) == lam


@given(st.integers(2, 4).flatmap(pure))
def test_pure_roundtrip(mu):
    assert parse_pure(format_pair(mu.left, mu.right)) == mu
    assert validate_pure(mu.entries) == mu
    for a, b in inf_char(mu):
        assert a + b == mu.w


def test_pure_weight_constructor_checks():
    with pytest.raises(NotPure):
        PureWeight((1, 0), (1, 0), 2)
