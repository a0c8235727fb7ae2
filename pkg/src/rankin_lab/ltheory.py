"""Gamma-factor bookkeeping and critical places of Rankin-Selberg products.

Up to a nonzero constant, L(pi_mu x pi_nu, s) is a product over 1 <= i, j <= n
of Gamma(s + kappa + shift_ij) with
shift_ij = |mu_i + nu_j - kappa + (n+1) - (i+j)|, and the dual factor at
1 - s uses the same shifts.  Only pole positions matter, so the Gamma
function is never evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .weights import HalfInt, PureWeight, pair_kappa


@dataclass(frozen=True)
class GammaShift:
    i: int
    j: int
    shift: HalfInt


@dataclass(frozen=True)
class CriticalData:
    kappa: HalfInt
    c: HalfInt
    lo: HalfInt
    hi: HalfInt
    places: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa.to_json(),
            "c": self.c.to_json(),
            "lo": self.lo.to_json(),
            "hi": self.hi.to_json(),
            "places": list(self.places),
        }


def _check(mu: PureWeight, nu: PureWeight) -> int:
    if mu.n != nu.n:
        raise DimensionMismatch(f"n={mu.n} vs n={nu.n}")
    return mu.n


def gamma_shifts(mu: PureWeight, nu: PureWeight) -> list[GammaShift]:
    n = _check(mu, nu)
    k = pair_kappa(mu, nu)
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            raw = mu.left[i - 1] + nu.left[j - 1] - k + (n + 1) - (i + j)
            out.append(GammaShift(i, j, abs(raw)))
    return out


def c_mu_nu(mu: PureWeight, nu: PureWeight) -> HalfInt:
    return min(g.shift for g in gamma_shifts(mu, nu))


def critical_places(mu: PureWeight, nu: PureWeight) -> CriticalData:
    """Integers s with 1 - kappa - c <= s <= -kappa + c."""
    _check(mu, nu)
    k = pair_kappa(mu, nu)
    c = c_mu_nu(mu, nu)
    lo = 1 - k - c
    hi = c - k
    return CriticalData(k, c, lo, hi, tuple(range(lo.ceil(), hi.floor() + 1)))


def is_critical(mu: PureWeight, nu: PureWeight, s: int) -> bool:
    """Pole test straight from the Gamma arguments: all of them must be >= 1."""
    _check(mu, nu)
    k = pair_kappa(mu, nu)
    for g in gamma_shifts(mu, nu):
        if s + k + g.shift < 1 or 1 - s - k + g.shift < 1:
            return False
    return True


def scan_window(mu: PureWeight, nu: PureWeight) -> int:
    spread = max(abs(x) for x in mu.entries + nu.entries)
    return 2 * spread + 2 * mu.n + 2


def critical_places_scan(mu: PureWeight, nu: PureWeight) -> tuple[int, ...]:
    """Exhaustive is_critical scan over [-B, B]."""
    b = scan_window(mu, nu)
    return tuple(s for s in range(-b, b + 1) if is_critical(mu, nu, s))
