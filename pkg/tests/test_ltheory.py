from hypothesis import given, settings

from rankin_lab.ltheory import (
    c_mu_nu,
    critical_places,
    critical_places_scan,
    gamma_shifts,
    is_critical,
)
from rankin_lab.weights import HalfInt, parse_pure

from strategies import pure_pair

MU, NU = parse_pure("5,-5;6,-4"), parse_pure("5,-5;5,-5")
ZERO = parse_pure("0,0;0,0")


def shifts(mu, nu):
    return sorted(g.shift.twice for g in gamma_shifts(mu, nu))


def test_worked_shifts():
    assert shifts(MU, NU) == [1, 1, 21, 23]
    assert shifts(ZERO, ZERO) == [0, 0, 2, 2]
    assert shifts(parse_pure("1,0;1,0"), ZERO) == [1, 1, 3, 3]


def test_worked_critical_json():
    assert critical_places(MU, NU).to_json() == {"kappa": "1/2", "c": "1/2", "lo": 0, "hi": 0, "places": [0]}
    assert c_mu_nu(MU, NU) == HalfInt(1)


def test_small_examples():
    assert list(critical_places(parse_pure("1,0;1,0"), ZERO).places) == [0]
    empty = critical_places(ZERO, ZERO)
    assert list(empty.places) == [] and empty.lo == 1 and empty.hi == 0
    assert is_critical(MU, NU, 0)
    assert not is_critical(MU, NU, 1)
    assert not any(is_critical(ZERO, ZERO, s) for s in range(-20, 21))


@settings(max_examples=300, deadline=None)
@given(pure_pair())
def test_interval_equals_scan(pair):
    mu, nu = pair
    assert list(critical_places(mu, nu).places) == list(critical_places_scan(mu, nu))


@given(pure_pair())
def test_places_symmetric_under_swap(pair):
    mu, nu = pair
    assert list(critical_places(mu, nu).places) == list(critical_places(nu, mu).places)
