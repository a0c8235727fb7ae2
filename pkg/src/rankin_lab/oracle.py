"""Brute-force ground truth built only from Gelfand-Tsetlin patterns.

Nothing here depends on Littlewood-Richardson combinatorics: tensor
products are computed by convolving weight functions and peeling off
highest weights, which makes this module an independent check on
:mod:`rankin_lab.charring`.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .decomposition import Decomposition
from .errors import DimensionMismatch, MalformedCharacter
from .weights import Weight, check_dominant, is_dominant, same_n


@dataclass
class WeightFunction:
    n: int
    support: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        for v in self.support:
            if len(v) != self.n:
                raise DimensionMismatch(f"weight {v} does not have length {self.n}")
        self.support = {tuple(v): m for v, m in self.support.items() if m}

    def mass(self) -> int:
        return sum(self.support.values())

    def __getitem__(self, v) -> int:
        return self.support.get(tuple(v), 0)


def _interlacing(row: Weight):
    """All rows s of length len(row)-1 with row[i] >= s[i] >= row[i+1]."""
    ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
    return itertools.product(*ranges)


@lru_cache(maxsize=4096)
def _row_weights(row: Weight) -> tuple[tuple[Weight, int], ...]:
    if len(row) == 1:
        return (((row[0],), 1),)
    total = sum(row)
    acc: Counter = Counter()
    for sub in _interlacing(row):
        last = total - sum(sub)
        for u, m in _row_weights(sub):
            acc[u + (last,)] += m
    return tuple(acc.items())


def weight_mults(lam: Sequence[int]) -> WeightFunction:
    """Weight multiplicities of E_lam by Gelfand-Tsetlin enumeration."""
    lam = check_dominant(lam)
    return WeightFunction(len(lam), dict(_row_weights(lam)))


@lru_cache(maxsize=4096)
def _dominant_part(lam: Weight) -> tuple[tuple[Weight, int], ...]:
    return tuple((v, m) for v, m in _row_weights(lam) if is_dominant(v))


def weight_mult(lam: Sequence[int], weight: Sequence[int]) -> int:
    """Dimension of one weight space of E_lam.

    Counts GT patterns whose row sums are the partial sums of ``weight``;
    the whole pattern set is never materialised.
    """
    lam = check_dominant(lam)
    weight = tuple(weight)
    n = same_n(lam, weight)
    prefix = list(itertools.accumulate(weight))
    if prefix[-1] != sum(lam):
        return 0
    cache: dict[Weight, int] = {}

    def count(row: Weight) -> int:
        k = len(row)
        if k == 1:
            return 1
        if row in cache:
            return cache[row]
        target = prefix[k - 2]
        lo = [row[i + 1] for i in range(k - 1)]
        hi = [row[i] for i in range(k - 1)]
        # suffix bounds for pruning the running sum
        suf_lo = [0] * k
        suf_hi = [0] * k
        for i in range(k - 2, -1, -1):
            suf_lo[i] = suf_lo[i + 1] + lo[i]
            suf_hi[i] = suf_hi[i + 1] + hi[i]
        total = 0
        sub = [0] * (k - 1)

        def fill(i: int, acc: int) -> None:
            nonlocal total
            if i == k - 1:
                if acc == target:
                    total += count(tuple(sub))
                return
            a = max(lo[i], target - acc - suf_hi[i + 1])
            b = min(hi[i], target - acc - suf_lo[i + 1])
            for x in range(a, b + 1):
                sub[i] = x
                fill(i + 1, acc + x)

        fill(0, 0)
        cache[row] = total
        return total

    return count(lam) if n else 0


def convolve(f: WeightFunction, g: WeightFunction) -> WeightFunction:
    if f.n != g.n:
        raise DimensionMismatch(f"n={f.n} vs n={g.n}")
    acc: Counter = Counter()
    for u, a in f.support.items():
        for v, b in g.support.items():
            acc[tuple(x + y for x, y in zip(u, v))] += a * b
    return WeightFunction(f.n, dict(acc))


def _orbit_size(v: Weight) -> int:
    size = math.factorial(len(v))
    for c in Counter(v).values():
        size //= math.factorial(c)
    return size


def check_symmetric(wf: WeightFunction) -> None:
    for v, m in wf.support.items():
        if wf.support.get(tuple(sorted(v, reverse=True)), 0) != m:
            raise MalformedCharacter(f"support is not Weyl-symmetric at {v}")
    # every weight agrees with its dominant rep; now make sure no orbit is partial
    if len(wf.support) != sum(_orbit_size(v) for v in wf.support if is_dominant(v)):
        raise MalformedCharacter("support is missing part of a Weyl orbit")


def peel_dominant(n: int, dominant: dict[Weight, int]) -> Decomposition:
    """Peel a dominant-weight table, largest lexicographic weight first."""
    rest = dict(dominant)
    out: dict[Weight, int] = {}
    for nu in sorted(rest, reverse=True):
        m = rest[nu]
        if m == 0:
            continue
        if m < 0:
            raise MalformedCharacter(f"negative residual multiplicity {m} at {nu}")
        out[nu] = m
        for v, c in _dominant_part(nu):
            if v not in rest:
                raise MalformedCharacter(f"weight {v} of E_{nu} missing from the character")
            rest[v] -= m * c
    return Decomposition(n, out)


def peel(wf: WeightFunction) -> Decomposition:
    """Write a genuine character as a sum of irreducible characters."""
    check_symmetric(wf)
    dom = {v: m for v, m in wf.support.items() if is_dominant(v)}
    if any(m < 0 for m in dom.values()):
        raise MalformedCharacter("negative weight multiplicity")
    return peel_dominant(wf.n, dom)


def tensor_oracle(lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    n = same_n(lam, mu)
    f = weight_mults(lam)
    g = weight_mults(mu)
    dom: Counter = Counter()
    for u, a in f.support.items():
        for v, b in g.support.items():
            s = tuple(x + y for x, y in zip(u, v))
            if is_dominant(s):
                dom[s] += a * b
    return peel_dominant(n, dict(dom))


def p_tilde_weights(n: int) -> list[Weight]:
    """Weights of the basis e_ij (i != j) and e_11 - e_kk of g/k."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(tuple(1 if t == i else -1 if t == j else 0 for t in range(n)))
    out.extend([(0,) * n] * (n - 1))
    return out


def exterior_weights_by_subsets(n: int, k: int) -> WeightFunction:
    """Weight function of the k-th exterior power by literal subset enumeration."""
    basis = p_tilde_weights(n)
    acc: Counter = Counter()
    for subset in itertools.combinations(basis, k):
        acc[tuple(map(sum, zip(*subset))) if subset else (0,) * n] += 1
    return WeightFunction(n, dict(acc))


def invariant_dim_oracle(ws: Sequence[Sequence[int]]) -> int:
    """Multiplicity of the trivial representation via convolution and peeling."""
    if not ws:
        return 1
    n = same_n(*ws)
    f = weight_mults(ws[0])
    for lam in ws[1:]:
        f = convolve(f, weight_mults(lam))
    return peel(f).mult((0,) * n)
