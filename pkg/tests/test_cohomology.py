import random

import pytest

from rankin_lab import cohomology, ktypes
from rankin_lab.compat import central_point, classify_pair
from rankin_lab.errors import AssumptionViolated
from rankin_lab.sampling import random_compatible, random_pure
from rankin_lab.weights import parse_pure

MU, NU = parse_pure("5,-5;6,-4"), parse_pure("5,-5;5,-5")
ZERO = parse_pure("0,0;0,0")


def test_worked_profiles():
    assert cohomology.coh_profile_pi(MU).to_json() == [0, 1, 1, 0]
    assert cohomology.coh_profile_pi(ZERO)[1] == 1
    reduced, full = cohomology.coh_profile_Ij(MU, NU, 0)
    assert reduced.to_json() == [0, 1, 1, 0]
    assert full.to_json() == [0, 1, 2, 1, 0]
    assert cohomology.coh_total(MU, NU) == 1


def test_assumption_checks():
    with pytest.raises(AssumptionViolated):
        cohomology.coh_profile_Ij(MU, NU, 1)
    with pytest.raises(AssumptionViolated):
        cohomology.coh_profile_Ij(ZERO, ZERO)


def test_full_is_shift_sum():
    reduced, full = cohomology.coh_profile_Ij(MU, NU)
    for d in range(len(full.dims)):
        assert full[d] == reduced[d] + reduced[d - 1]


@pytest.mark.parametrize("n", [2, 3])
def test_pi_vanishes_below_b_n(n):
    rng = random.Random(100 + n)
    b = ktypes.b_n(n)
    for _ in range(8):
        mu = random_pure(rng, n, -5, 5)
        prof = cohomology.coh_profile_pi(mu, b + 1)
        assert [prof[d] for d in range(b + 1)] == [0] * b + [1]


@pytest.mark.parametrize("n", range(2, 9))
def test_top_trivial(n):
    assert cohomology.top_trivial_dim(n) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_prop_3_2_zero_elsewhere(n):
    # The full claim: 1,2,1 at l..l+2 and nothing in any other degree.
    # Fails from n = 3 on; see the discrepancy notes in the README.
    rng = random.Random(7 * n)
    for _ in range(5):
        mu, nu = random_compatible(rng, n, -4, 4)
        _, full = cohomology.coh_profile_Ij(mu, nu)
        l = classify_pair(mu, nu, central_point(mu, nu)).l_j
        assert cohomology.outside_pattern(full, l) == [], (str(mu), str(nu), full.to_json())
