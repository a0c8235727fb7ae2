"""Compatibility of pure weights and the four-case cohomology classifier.

All window endpoints involving k_eta/n or kappa are compared as exact
fractions; nothing is rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from . import charring
from .errors import BadIndex, DimensionMismatch, NotHalfOdd, UnsupportedCase
from .ltheory import critical_places
from .weights import HalfInt, PureWeight, Weight, dual, k_eta, pair_kappa

Label = Literal["a", "b", "c", "d", "none"]


@dataclass(frozen=True)
class MMStats:
    t: int
    M: int
    m: int


@dataclass(frozen=True)
class CaseData:
    label: Label
    vj_left: Optional[Weight] = None
    vj_right: Optional[Weight] = None
    l_j: Optional[int] = None

    @property
    def vj(self) -> Optional[tuple[Weight, Weight]]:
        if self.label == "none":
            return None
        return (self.vj_left, self.vj_right)

    def to_json(self) -> dict:
        if self.label == "none":
            return {"label": "none", "vj": None, "l": None}
        return {"label": self.label, "vj": [list(self.vj_left), list(self.vj_right)], "l": self.l_j}


def _check(mu: PureWeight, nu: PureWeight) -> int:
    if mu.n != nu.n:
        raise DimensionMismatch(f"n={mu.n} vs n={nu.n}")
    return mu.n


def mm_stats(mu: PureWeight, nu: PureWeight, t: int) -> MMStats:
    """Max and min of mu_i + nu_j over i + j = t, 1 <= i, j <= n."""
    n = _check(mu, nu)
    if t not in (n, n + 1, n + 2):
        raise BadIndex(f"t={t} must be one of {n}, {n + 1}, {n + 2}")
    vals = [mu.left[i - 1] + nu.left[t - i - 1] for i in range(1, n + 1) if 1 <= t - i <= n]
    if not vals:
        raise BadIndex(f"no index pairs with i + j = {t} when n = {n}")
    return MMStats(t, max(vals), min(vals))


def _sym_det(n: int, a: int, d: int) -> Weight:
    return tuple(x + d for x in charring.sym_weight(n, a))


def classify_case(n: int, k_eta: int, kappa: HalfInt, j: int) -> CaseData:
    q = Fraction(k_eta, n)
    two_kappa = kappa.twice
    two_n_kappa = n * two_kappa
    if j >= max(1 - q, 1 + q - two_kappa):
        return CaseData(
            "a",
            _sym_det(n, n * j + k_eta - n, 1 - j),
            _sym_det(n, n * j - n - k_eta + two_n_kappa, 1 - j),
            2 * (n - 1),
        )
    if 1 - two_kappa + q <= j <= -q:
        return CaseData(
            "b",
            _sym_det(n, n * j + k_eta, -j),
            _sym_det(n, n * j - n - k_eta + two_n_kappa, 1 - j),
            n - 1,
        )
    if 1 - q <= j <= -two_kappa + q:
        return CaseData(
            "c",
            _sym_det(n, n * j + k_eta - n, 1 - j),
            _sym_det(n, n * j + two_n_kappa - k_eta, -j),
            n - 1,
        )
    if j <= min(-q, q - two_kappa):
        return CaseData(
            "d",
            _sym_det(n, n * j + k_eta, -j),
            _sym_det(n, n * j + two_n_kappa - k_eta, -j),
            0,
        )
    return CaseData("none")


def case_flags(n: int, k_eta: int, kappa: HalfInt, j: int) -> dict[str, bool]:
    """Each of the four window conditions evaluated on its own."""
    q = Fraction(k_eta, n)
    tk = kappa.twice
    return {
        "a": j >= max(1 - q, 1 + q - tk),
        "b": 1 - tk + q <= j <= -q,
        "c": 1 - q <= j <= -tk + q,
        "d": j <= min(-q, q - tk),
    }


def classify_pair(mu: PureWeight, nu: PureWeight, j: int) -> CaseData:
    return classify_case(_check(mu, nu), k_eta(mu, nu), pair_kappa(mu, nu), j)


def cond_set(mu: PureWeight, nu: PureWeight, which: Literal["b", "c"]) -> tuple[int, ...]:
    """Integer solutions of the two-sided windows for case b or c."""
    n = _check(mu, nu)
    tk = pair_kappa(mu, nu).twice
    if which == "b":
        M = mm_stats(mu, nu, n + 1).M
        m = mm_stats(mu, nu, n).m
        lo = max(-m, 1 - tk + M)
        hi = min(-M, 1 - tk + m)
    elif which == "c":
        M = mm_stats(mu, nu, n + 2).M
        m = mm_stats(mu, nu, n + 1).m
        lo = max(1 - m, M - tk)
        hi = min(1 - M, -tk + m)
    else:
        raise ValueError(f"which must be 'b' or 'c', got {which!r}")
    return tuple(range(lo, hi + 1))


def simplified_b(mu: PureWeight, nu: PureWeight) -> bool:
    """M^{n+1} <= kappa - 1/2 <= m^n."""
    n = _check(mu, nu)
    k = pair_kappa(mu, nu)
    return HalfInt(2 * mm_stats(mu, nu, n + 1).M) <= k - HalfInt(1) <= HalfInt(2 * mm_stats(mu, nu, n).m)


def simplified_c(mu: PureWeight, nu: PureWeight) -> bool:
    """M^{n+2} <= kappa + 1/2 <= m^{n+1}."""
    n = _check(mu, nu)
    k = pair_kappa(mu, nu)
    return HalfInt(2 * mm_stats(mu, nu, n + 2).M) <= k + HalfInt(1) <= HalfInt(2 * mm_stats(mu, nu, n + 1).m)


def compatible(mu: PureWeight, nu: PureWeight) -> Literal[False, "via_b", "via_c"]:
    if cond_set(mu, nu, "b"):
        return "via_b"
    if cond_set(mu, nu, "c"):
        return "via_c"
    return False


@dataclass(frozen=True)
class Lemma34Report:
    verdict: Literal["PASS", "vacuous-PASS", "FAIL"]
    cond_b: tuple[int, ...]
    cond_c: tuple[int, ...]
    places: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "cond_b": list(self.cond_b),
            "cond_c": list(self.cond_c),
            "places": list(self.places),
        }


def verify_lemma_3_4(mu: PureWeight, nu: PureWeight) -> Lemma34Report:
    """Every nonempty cond-set must equal the set of critical places."""
    b = cond_set(mu, nu, "b")
    c = cond_set(mu, nu, "c")
    places = critical_places(mu, nu).places
    if not b and not c:
        return Lemma34Report("vacuous-PASS", b, c, places)
    ok = all(set(s) == set(places) for s in (b, c) if s)
    return Lemma34Report("PASS" if ok else "FAIL", b, c, places)


def hom_dim_Fxi(mu: PureWeight, nu: PureWeight, j: int) -> int:
    """dim Hom(F_mu^v (x) F_nu^v (x) V_j, C) in cases b and c, by the windows."""
    case = classify_pair(mu, nu, j)
    if case.label not in ("b", "c"):
        raise UnsupportedCase(f"j={j} is in case {case.label}; only b and c are covered")
    return 1 if j in cond_set(mu, nu, case.label) else 0


def hom_dim_Fxi_brute(mu: PureWeight, nu: PureWeight, j: int) -> int:
    """The same Hom space as a product of two GL_n invariant dimensions."""
    case = classify_pair(mu, nu, j)
    if case.vj is None:
        raise UnsupportedCase(f"j={j} is in no case, V_j is undefined")
    left = charring.invariant_dim([dual(mu.left), dual(nu.left), case.vj_left])
    if not left:
        return 0
    return left * charring.invariant_dim([dual(mu.right), dual(nu.right), case.vj_right])


def central_point(mu: PureWeight, nu: PureWeight) -> int:
    k = pair_kappa(mu, nu)
    if not k.is_half_odd:
        raise NotHalfOdd(f"kappa={k} is an integer; the central point needs a half-odd kappa")
    return (1 - k.twice) // 2
