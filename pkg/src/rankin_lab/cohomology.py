"""Relative Lie algebra cohomology dimensions as SU(n)-invariant counts.

For the unitary modules involved, H^d(g, GU(n); X) = Hom_SU(n)(wedge^d p, X)
with p = g/k.  Here X is a principal series tensored with a finite
dimensional coefficient, so Hom_SU(n)(wedge^d p, X) is a finite sum over
the constituents E_tau of wedge^d p (x) (coefficient)|_K of the
multiplicity of dual(tau) in the principal series.

SU(n) does not see det: a U(n)-type E_lam matches every E_(lam + c(1,...,1)).
Both principal series here have all K-types of one fixed total degree, so
at most one twist of a given highest weight can match.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal, Optional

from . import charring
from .compat import central_point, classify_pair, compatible
from .decomposition import Decomposition
from .errors import AssumptionViolated, NotHalfOdd, UnsupportedCase
from .ktypes import b_n, c_n, ij_spectrum, jmu_delta, jmu_mult
from .weights import PureWeight, Weight, dual, pair_kappa


@dataclass(frozen=True)
class CohProfile:
    pair: Literal["reduced", "full"]
    dims: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    def to_json(self) -> list[int]:
        return list(self.dims)


def full_from_reduced(reduced: CohProfile) -> CohProfile:
    """Add the one noncompact central direction: full[d] = r[d] + r[d-1]."""
    r = reduced.dims
    return CohProfile("full", tuple((r[d] if d < len(r) else 0) + (r[d - 1] if d >= 1 else 0) for d in range(len(r) + 1)))


def su_match(lam: Weight, degree: int) -> Optional[Weight]:
    """The det-twist of lam with total degree ``degree``, if there is one."""
    n = len(lam)
    diff = degree - sum(lam)
    if diff % n:
        return None
    c = diff // n
    return tuple(x + c for x in lam)


def _twisted(dec_a: Decomposition, dec_b: Decomposition) -> Counter:
    acc: Counter = Counter()
    for x, mx in dec_a.terms.items():
        for y, my in dec_b.terms.items():
            for t, mt in charring.tensor(x, y).terms.items():
                acc[t] += mx * my * mt
    return acc


def coh_profile_pi(mu: PureWeight, degrees: Optional[int] = None) -> CohProfile:
    """dims[d] = dim Hom_SU(n)(wedge^d p, J_mu (x) F_mu^v) for d = 0 .. n^2-1."""
    n = mu.n
    top = charring.p_tilde_dim(n) if degrees is None else degrees
    coeff = charring.restrict_to_K((dual(mu.left), dual(mu.right)))
    degree = sum(jmu_delta(mu))
    dims = []
    for d in range(top + 1):
        total = 0
        for t, m in _twisted(charring.exterior_p(n, d), coeff).items():
            target = su_match(dual(t), degree)
            if target is not None:
                total += m * jmu_mult(mu, target)
        dims.append(total)
    return CohProfile("reduced", tuple(dims))


def _central_case(mu: PureWeight, nu: PureWeight, j: Optional[int]):
    try:
        j0 = central_point(mu, nu)
    except NotHalfOdd as exc:
        raise AssumptionViolated(str(exc)) from exc
    if j is not None and j != j0:
        raise AssumptionViolated(f"j={j} is not the central point {j0}")
    case = classify_pair(mu, nu, j0)
    if case.label not in ("b", "c"):
        raise UnsupportedCase(f"central point j={j0} is in case {case.label}")
    return j0, case


def coh_profile_Ij(mu: PureWeight, nu: PureWeight, j: Optional[int] = None) -> tuple[CohProfile, CohProfile]:
    """Reduced profile of I_j (x) V_j at the central point, and its full version."""
    j0, case = _central_case(mu, nu, j)
    n = mu.n
    spectrum = ij_spectrum(mu, nu, j0)
    coeff = charring.restrict_to_K(case.vj)
    dims = []
    for d in range(charring.p_tilde_dim(n) + 1):
        total = 0
        for t, m in _twisted(charring.exterior_p(n, d), coeff).items():
            target = su_match(dual(t), spectrum.t)
            if target is not None and target in spectrum:
                total += m
        dims.append(total)
    reduced = CohProfile("reduced", tuple(dims))
    return reduced, full_from_reduced(reduced)


def prop_pattern(full: CohProfile, l_j: int) -> bool:
    """1, 2, 1 in degrees l, l+1, l+2."""
    return (full[l_j], full[l_j + 1], full[l_j + 2]) == (1, 2, 1)


def outside_pattern(full: CohProfile, l_j: int) -> list[int]:
    # degrees carrying classes beyond the 1,2,1 block; nonempty from n=3 on
    return [d for d, x in enumerate(full.dims) if x and not l_j <= d <= l_j + 2]


def top_trivial_dim(n: int) -> int:
    """Hom_SU(n)(wedge^{n^2-1} p, C)."""
    return charring.exterior_p(n, charring.p_tilde_dim(n)).mult((0,) * n)


def coh_total(mu: PureWeight, nu: PureWeight) -> int:
    """Kunneth product of the three one-dimensional bottom classes."""
    if not compatible(mu, nu):
        raise AssumptionViolated("the pair is not compatible")
    _central_case(mu, nu, None)
    n = mu.n
    if top_trivial_dim(n) != 1:
        raise AssertionError(f"top exterior power of p at n={n} has no unique invariant")
    bn, cn = b_n(n), c_n(n)
    reduced, _ = coh_profile_Ij(mu, nu)
    return coh_profile_pi(mu, bn)[bn] * coh_profile_pi(nu, bn)[bn] * reduced[cn]


def kappa_parity_ok(mu: PureWeight, nu: PureWeight) -> bool:
    return pair_kappa(mu, nu).is_half_odd
