"""K-type spectra and the distinguished K-types of the construction.

``jmu_mult`` supplies the K-multiplicities of the principal series J_mu.
J_mu is induced from the Borel of GL_n(C); restricted to K = U(n) it is
induced from the diagonal torus T, and the inducing character restricts
to T as z -> prod z_i^(a_i - b_i).  Frobenius reciprocity then gives

    [J_mu : E_lam] = dim E_lam[delta_mu],   delta_mu_i = a_i - b_i
                                           = 2 mu_i - w + n + 1 - 2i,

the dimension of one weight space, which :func:`oracle.weight_mult`
counts with Gelfand-Tsetlin patterns.  Since delta_mu is itself dominant,
the minimal K-type is E_delta_mu with multiplicity one.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from . import charring, oracle
from .compat import case_flags, classify_case, classify_pair
from .errors import DimensionMismatch, UnsupportedCase
from .weights import HalfInt, PureWeight, Weight, check_dominant, dual, k_eta, pair_kappa


@dataclass(frozen=True)
class IjSpectrum:
    """K-types (m, 0, ..., 0, t - m), m >= m_min, each with multiplicity one."""

    n: int
    t: int

    @property
    def m_min(self) -> int:
        return max(0, self.t)

    def member(self, m: int) -> Weight:
        return (m,) + (0,) * (self.n - 2) + (self.t - m,)

    def minimal(self) -> Weight:
        return self.member(self.m_min)

    def __contains__(self, lam) -> bool:
        lam = tuple(lam)
        if len(lam) != self.n or sum(lam) != self.t:
            return False
        if any(x != 0 for x in lam[1:-1]):
            return False
        return lam[0] >= self.m_min

    def mult(self, lam) -> int:
        return 1 if lam in self else 0

    def members(self, count: int) -> list[Weight]:
        return [self.member(self.m_min + i) for i in range(count)]


def ij_spectrum(mu: PureWeight, nu: PureWeight, j: Optional[int] = None) -> IjSpectrum:
    """The K-spectrum of I_j; it does not depend on j."""
    if mu.n != nu.n:
        raise DimensionMismatch(f"n={mu.n} vs n={nu.n}")
    return IjSpectrum(mu.n, mu.n * (mu.w + nu.w) - 2 * k_eta(mu, nu))


def jmu_delta(mu: PureWeight) -> Weight:
    n = mu.n
    return tuple(2 * m - mu.w + n + 1 - 2 * i for i, m in enumerate(mu.left, start=1))


def jmu_min_ktype(mu: PureWeight) -> Weight:
    return jmu_delta(mu)


def jmu_mult(mu: PureWeight, lam: Sequence[int]) -> int:
    lam = check_dominant(lam)
    if len(lam) != mu.n:
        raise DimensionMismatch(f"weight {lam} is not a GL_{mu.n} weight")
    return oracle.weight_mult(lam, jmu_delta(mu))


def tau(mu: PureWeight) -> Weight:
    """Highest weight mu_L - w0 mu_R = (2 mu_i - w)."""
    return tuple(a - b for a, b in zip(mu.left, reversed(mu.right)))


def tau_n(n: int) -> Weight:
    return tuple(n - 1 - 2 * i for i in range(n))


def sigma_n_closed(n: int, label: str) -> Weight:
    if label == "b":
        return (n - 1,) + (-1,) * (n - 1)
    if label == "c":
        return (1,) * (n - 1) + (1 - n,)
    raise UnsupportedCase(f"sigma_n is defined for cases b and c, not {label}")


def sigma_j(vj_left: Weight, vj_right: Weight) -> Weight:
    return tuple(a - b for a, b in zip(vj_left, reversed(vj_right)))


@dataclass(frozen=True)
class DistinguishedKTypes:
    tau_mu: Weight
    tau_mu_plus: Weight
    tau_nu: Weight
    tau_nu_plus: Weight
    tau_n: Weight
    sigma_j: Weight
    sigma_j_plus: Weight
    sigma_n: Weight
    label: str = field(default="b")

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items()}


def distinguished(mu: PureWeight, nu: PureWeight, j: int) -> DistinguishedKTypes:
    case = classify_pair(mu, nu, j)
    if case.label not in ("b", "c"):
        raise UnsupportedCase(f"j={j} is in case {case.label}; need b or c")
    s_j = sigma_j(case.vj_left, case.vj_right)
    s_plus = ij_spectrum(mu, nu).minimal()
    s_n = charring.prv(s_j, s_plus)
    t_n = charring.prv(dual(tau(mu)), jmu_min_ktype(mu))
    if t_n != charring.prv(dual(tau(nu)), jmu_min_ktype(nu)) or t_n != tau_n(mu.n):
        raise AssertionError(f"PRV component {t_n} differs from {tau_n(mu.n)}")
    return DistinguishedKTypes(
        tau_mu=tau(mu),
        tau_mu_plus=jmu_min_ktype(mu),
        tau_nu=tau(nu),
        tau_nu_plus=jmu_min_ktype(nu),
        tau_n=t_n,
        sigma_j=s_j,
        sigma_j_plus=s_plus,
        sigma_n=s_n,
        label=case.label,
    )


# -- multiplicity-one verifiers ------------------------------------------------

LEMMAS = ("4.4", "4.6", "4.7", "4.8", "4.9", "4.10", "4.11")


@dataclass
class LemmaReport:
    lemma: str
    n: int
    multiplicities: dict[str, int]
    verdict: str
    instance: Optional[str] = None

    def to_json(self) -> dict:
        out: dict = {"lemma": self.lemma, "n": self.n}
        if self.instance is not None:
            out["instance"] = self.instance
        if list(self.multiplicities) == ["multiplicity"]:
            out["multiplicity"] = self.multiplicities["multiplicity"]
        else:
            out["multiplicities"] = dict(self.multiplicities)
        out["verdict"] = self.verdict
        return out


def _report(lemma: str, n: int, mults: dict[str, int], instance: Optional[str] = None) -> LemmaReport:
    verdict = "PASS" if all(v == 1 for v in mults.values()) else "FAIL"
    return LemmaReport(lemma, n, mults, verdict, instance)


def b_n(n: int) -> int:
    return n * (n - 1) // 2


def c_n(n: int) -> int:
    return n - 1


def sigma_prv_grid(n: int, span: int = 3) -> list[tuple[int, int, int, str, Weight, Weight]]:
    """(k_eta, 2 kappa, j, label, prv, closed form) over a parameter grid in cases b/c."""
    rows = []
    for k, tk, j in itertools.product(range(-span * n, span * n + 1), range(-2 * span - 1, 2 * span + 2), range(-2 * span, 2 * span + 1)):
        kap = HalfInt(tk)
        flags = case_flags(n, k, kap, j)
        if not (flags["b"] or flags["c"]):
            continue
        case = classify_case(n, k, kap, j)
        s_j = sigma_j(case.vj_left, case.vj_right)
        t = n * tk - 2 * k
        s_plus = IjSpectrum(n, t).minimal()
        rows.append((k, tk, j, case.label, charring.prv(s_j, s_plus), sigma_n_closed(n, case.label)))
    return rows


def verify_lemma(
    lemma: str,
    n: int,
    mu: Optional[PureWeight] = None,
    nu: Optional[PureWeight] = None,
    j: Optional[int] = None,
) -> LemmaReport:
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    if n < 2:
        raise UnsupportedCase("n must be at least 2")
    sb, sc = sigma_n_closed(n, "b"), sigma_n_closed(n, "c")
    if lemma == "4.4":
        dec = charring.exterior_p(n, n - 1)
        return _report(lemma, n, {"sigma_b": dec.mult(sb), "sigma_c": dec.mult(sc)})
    if lemma == "4.6":
        t = tau_n(n)
        dec = charring.exterior_p(n, b_n(n))
        mults = {"multiplicity": dec.mult(t)}
        rep = _report(lemma, n, mults)
        # tau_n is self-dual, so the dual statement is the same count
        if dec.mult(dual(t)) != mults["multiplicity"]:
            rep.verdict = "FAIL"
        return rep
    if lemma == "4.7":
        grid = sigma_prv_grid(n)
        bad = sum(1 for row in grid if row[4] != row[5])
        dec = charring.exterior_p(n, n - 1)
        rep = _report(lemma, n, {"sigma_b": dec.mult(sb), "sigma_c": dec.mult(sc)})
        labels = {row[3] for row in grid}
        if bad or labels != {"b", "c"}:
            rep.verdict = "FAIL"
        return rep
    if lemma == "4.8":
        t = tau_n(n)
        k = 2 * b_n(n) + c_n(n)
        return _report(
            lemma,
            n,
            {
                "sigma_b": charring.triple_mult(n, k, (t, t, sb)),
                "sigma_c": charring.triple_mult(n, k, (t, t, sc)),
            },
        )
    if lemma == "4.9":
        t = tau_n(n)
        return _report(
            lemma,
            n,
            {"sigma_b": charring.invariant_dim([t, t, sb]), "sigma_c": charring.invariant_dim([t, t, sc])},
        )
    # 4.10 and 4.11 need a compatible pair and a place in case b or c
    if mu is None or nu is None:
        raise UnsupportedCase(f"lemma {lemma} needs --mu and --nu")
    if mu.n != n or nu.n != n:
        raise DimensionMismatch(f"weights are not GL_{n} pairs")
    if j is None:
        from .compat import central_point

        j = central_point(mu, nu)
    d = distinguished(mu, nu, j)
    instance = f"{mu}|{nu}|{j}"
    if lemma == "4.10":
        val = charring.invariant_dim([dual(d.tau_mu), dual(d.tau_nu), d.sigma_j])
    else:
        val = charring.invariant_dim([d.tau_mu_plus, d.tau_nu_plus, d.sigma_j_plus])
    return _report(lemma, n, {"multiplicity": val}, instance)
