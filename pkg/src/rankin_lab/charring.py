"""Character ring of GL_n: dimensions, tensor products, exterior powers.

Tensor products use the Littlewood-Richardson rule on partitions after
twisting both factors by a power of det.  Exterior powers of
g/k ~ E_(1,0,...,0,-1) are built from the explicit weight multiset of the
basis {e_ij, e_11 - e_kk}: a subset-sum table for every degree, then
peeling (full decompositions) or the Weyl alternating sum (single
multiplicities).
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from functools import lru_cache
from typing import Sequence

from . import oracle
from .decomposition import Decomposition, TripleDecomposition, weyl_dimension
from .errors import DimensionMismatch, InfeasibleScale, NegativeSymPower, OutOfRange
from .weights import Weight, check_dominant, dominant_rep, dual, same_n

DEFAULT_MAX_SUBSETS = 2**25


def max_subsets() -> int:
    raw = os.environ.get("RANKIN_LAB_MAX_SUBSETS")
    return int(raw) if raw else DEFAULT_MAX_SUBSETS


def weyl_dim(lam: Sequence[int]) -> int:
    return weyl_dimension(check_dominant(lam))


# -- Littlewood-Richardson ------------------------------------------------


def _lr_fill(lam: Weight, mu: Weight, target: Weight | None = None):
    """Yield the shape of every LR tableau of shape nu/lam and content mu.

    Partitions have exactly ``len(lam)`` rows (zeros allowed).  The filling
    is chosen row by row: ``row[k]`` is the number of entries k+1 in the
    current row.  Column strictness and the lattice condition on the
    reverse reading word are both linear in these counts.
    """
    n = len(lam)
    letters = len(mu)
    while letters and mu[letters - 1] == 0:
        letters -= 1
    remaining = list(mu[:letters])
    col_tot = [0] * letters
    prev = [0] * letters
    shape = [0] * n

    def rows(r: int):
        if r == n:
            if not any(remaining):
                yield tuple(shape)
            return
        kmax = min(r + 1, letters)
        row_total = None if target is None else target[r] - lam[r]
        if row_total is not None and row_total < 0:
            return
        cur = [0] * letters
        last = r == n - 1

        def cells(k: int, placed: int, prev_prefix: int):
            if k == kmax:
                if row_total is not None and placed != row_total:
                    return
                shape[r] = lam[r] + placed
                saved = prev[:]
                for t in range(letters):
                    col_tot[t] += cur[t]
                    remaining[t] -= cur[t]
                    prev[t] = cur[t]
                yield from rows(r + 1)
                for t in range(letters):
                    col_tot[t] -= cur[t]
                    remaining[t] += cur[t]
                prev[:] = saved
                return
            hi = remaining[k]
            if k >= 1:
                hi = min(hi, col_tot[k - 1] - col_tot[k])
            if r >= 1:
                hi = min(hi, lam[r - 1] + prev_prefix - lam[r] - placed)
            if row_total is not None:
                hi = min(hi, row_total - placed)
            lo = remaining[k] if last else 0
            if hi < lo:
                return
            nxt = prev_prefix + (prev[k] if r >= 1 else 0)
            for x in range(lo, hi + 1):
                cur[k] = x
                yield from cells(k + 1, placed + x, nxt)
            cur[k] = 0

        yield from cells(0, 0, 0)

    yield from rows(0)


def _as_partitions(lam: Weight, mu: Weight) -> tuple[Weight, Weight, int]:
    a, b = lam[-1], mu[-1]
    return tuple(x - a for x in lam), tuple(x - b for x in mu), a + b


def tensor(lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    """Decompose E_lam (x) E_mu."""
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    n = same_n(lam, mu)
    p, q, c = _as_partitions(lam, mu)
    if sum(q) > sum(p):
        p, q = q, p
    acc: Counter = Counter()
    for nu in _lr_fill(p, q):
        acc[tuple(x + c for x in nu)] += 1
    return Decomposition(n, dict(acc))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of E_nu in E_lam (x) E_mu."""
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    nu = check_dominant(nu)
    same_n(lam, mu, nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    p, q, c = _as_partitions(lam, mu)
    target = tuple(x - c for x in nu)
    if target[-1] < 0:
        return 0
    if sum(q) > sum(p):
        p, q = q, p
    if any(t < x for t, x in zip(target, p)):
        return 0
    return sum(1 for _ in _lr_fill(p, q, target))


def sym_weight(n: int, a: int) -> Weight:
    """Highest weight of Sym^a: (a,0,...,0) for a >= 0, (0,...,0,a) for a < 0."""
    if a >= 0:
        return (a,) + (0,) * (n - 1)
    return (0,) * (n - 1) + (a,)


def _horizontal_strips(lam: Weight, a: int):
    n = len(lam)
    nu = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(nu)
            return
        top = left if i == 0 else min(left, lam[i - 1] - lam[i])
        for x in range(top, -1, -1):
            nu[i] = lam[i] + x
            yield from rec(i + 1, left - x)

    yield from rec(0, a)


def pieri(lam: Sequence[int], a: int) -> Decomposition:
    """E_lam (x) Sym^a, with Sym^a for a < 0 read as E_(0,...,0,a)."""
    lam = check_dominant(lam)
    n = len(lam)
    if a < 0:
        return pieri(dual(lam), -a).dual()
    return Decomposition(n, {nu: 1 for nu in _horizontal_strips(lam, a)})


def det_mult_grenie(lam: Sequence[int], mu: Sequence[int], a: int, d: int) -> int:
    """Closed-form multiplicity of det^d in E_lam (x) E_mu (x) Sym^a, a >= 0."""
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    n = same_n(lam, mu)
    if a < 0:
        raise NegativeSymPower(f"Sym^{a}: the closed form needs a >= 0")
    if a != n * d - sum(lam) - sum(mu):
        return 0
    lower = max(lam[i] + mu[n - 1 - i] for i in range(n))
    upper = min((lam[i] + mu[n - 2 - i] for i in range(n - 1)), default=d)
    return 1 if lower <= d <= upper else 0


def det_mult_brute(lam: Sequence[int], mu: Sequence[int], a: int, d: int) -> int:
    """The same multiplicity computed through tensor() and pieri()."""
    n = same_n(lam, mu)
    det = (d,) * n
    return sum(m * _pieri_mult(nu, a, det) for nu, m in _tensor_items(tuple(lam), tuple(mu)))


@lru_cache(maxsize=65536)
def _pieri_mult(nu: Weight, a: int, target: Weight) -> int:
    return pieri(nu, a).mult(target)


@lru_cache(maxsize=8192)
def _tensor_items(lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    return tuple(tensor(lam, mu).terms.items())


def cartan(lam: Sequence[int], mu: Sequence[int]) -> Weight:
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    same_n(lam, mu)
    return tuple(x + y for x, y in zip(lam, mu))


def prv(lam: Sequence[int], mu: Sequence[int]) -> Weight:
    """Dominant representative of the extremal weight lam + w0 mu."""
    lam = check_dominant(lam)
    mu = check_dominant(mu)
    same_n(lam, mu)
    return dominant_rep(x + y for x, y in zip(lam, reversed(mu)))


def restrict_to_K(pair: tuple[Sequence[int], Sequence[int]]) -> Decomposition:
    """Restrict the GL_n x GL_n module with highest weight (lL; lR) to U(n)."""
    left, right = pair
    return tensor(left, dual(check_dominant(right)))


def invariant_dim(ws: Sequence[Sequence[int]]) -> int:
    """Dimension of the U(n)-invariants in E_w1 (x) ... (x) E_wk."""
    ws = [check_dominant(w) for w in ws]
    if not ws:
        return 1
    n = same_n(*ws)
    if sum(map(sum, ws)) != 0:
        return 0
    if len(ws) == 1:
        return 1 if ws[0] == (0,) * n else 0
    if len(ws) == 2:
        return 1 if ws[1] == dual(ws[0]) else 0
    *head, b, c = ws
    target = dual(c)
    acc = Decomposition(n, {head[0]: 1})
    for lam in head[1:]:
        nxt: Counter = Counter()
        for nu, m in acc.terms.items():
            for rho, k in tensor(nu, lam).terms.items():
                nxt[rho] += m * k
        acc = Decomposition(n, dict(nxt))
    return sum(m * lr_coefficient(nu, b, target) for nu, m in acc.terms.items())


# -- exterior powers of g/k -----------------------------------------------


def p_tilde_dim(n: int) -> int:
    return n * n - 1


def _codec(n: int):
    base = 2 * n + 1
    powers = [base**i for i in range(n)]

    def encode(v: Weight) -> int:
        return sum(x * p for x, p in zip(v, powers))

    def decode(code: int) -> Weight:
        out = []
        for _ in range(n):
            r = code % base
            if r > base // 2:
                r -= base
            out.append(r)
            code = (code - r) // base
        return tuple(out)

    return encode, decode


def _guard(count: int, what: str) -> None:
    limit = max_subsets()
    if count > limit:
        raise InfeasibleScale(f"{what} needs {count} subsets, limit is {limit}")


@lru_cache(maxsize=32)
def _ladder(n: int, kmax: int) -> tuple[dict[Weight, int], ...]:
    """Weight functions of the exterior powers 0..kmax, one subset-sum pass."""
    encode, decode = _codec(n)
    items = [encode(v) for v in oracle.p_tilde_weights(n)]
    levels: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(kmax)]
    for seen, c in enumerate(items, start=1):
        for k in range(min(seen, kmax), 0, -1):
            dst = levels[k]
            get = dst.get
            for w, m in levels[k - 1].items():
                key = w + c
                dst[key] = get(key, 0) + m
    return tuple({decode(w): m for w, m in lvl.items()} for lvl in levels)


def exterior_weights(n: int, k: int) -> oracle.WeightFunction:
    N = p_tilde_dim(n)
    if not 0 <= k <= N:
        raise OutOfRange(f"k={k} outside 0..{N}")
    _guard(math.comb(N, k), f"exterior power {k} of g/k at n={n}")
    if 2 * k > N:
        # top power is trivial, so wedge^k is the dual of wedge^(N-k)
        low = _ladder(n, N - k)[N - k]
        return oracle.WeightFunction(n, {tuple(-x for x in w): m for w, m in low.items()})
    return oracle.WeightFunction(n, dict(_ladder(n, k)[k]))


def exterior_p(n: int, k: int) -> Decomposition:
    """Decompose the k-th exterior power of g/k (~ E_(1,0,...,0,-1))."""
    if n < 1:
        raise OutOfRange(f"n={n} must be positive")
    return oracle.peel(exterior_weights(n, k))


@lru_cache(maxsize=16)
def _signed_rho_shifts(n: int) -> tuple[tuple[int, Weight], ...]:
    rho = tuple(range(n - 1, -1, -1))
    out = []
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out.append((-1 if inversions % 2 else 1, tuple(rho[i] - rho[perm[i]] for i in range(n))))
    return tuple(out)


def alternating_mult(wf: dict[Weight, int], lam: Weight) -> int:
    """Multiplicity of E_lam from a character's weights (Weyl alternation)."""
    total = 0
    for sign, shift in _signed_rho_shifts(len(lam)):
        total += sign * wf.get(tuple(x + s for x, s in zip(lam, shift)), 0)
    return total


def exterior_mult(n: int, k: int, lam: Sequence[int]) -> int:
    lam = check_dominant(lam)
    if len(lam) != n:
        raise DimensionMismatch(f"weight {lam} is not a GL_{n} weight")
    return alternating_mult(exterior_weights(n, k).support, lam)


def exterior_ladder_mults(n: int, lam: Sequence[int]) -> list[int]:
    """Multiplicity of E_lam in every exterior power 0..n^2-1 of g/k."""
    lam = check_dominant(lam)
    N = p_tilde_dim(n)
    _guard(2**N, f"exterior ladder of g/k at n={n}")
    ladder = _ladder(n, N)
    return [alternating_mult(ladder[k], lam) for k in range(N + 1)]


def triple_mult(n: int, k: int, target: Sequence[Sequence[int]]) -> int:
    """Multiplicity of E_a [x] E_b [x] E_c in the k-th exterior power of three
    copies of g/k, via wedge(U+V+W) = sum over a+b+c=k of the tensor products."""
    N = p_tilde_dim(n)
    if not 0 <= k <= 3 * N:
        raise OutOfRange(f"k={k} outside 0..{3 * N}")
    if len(target) != 3:
        raise DimensionMismatch("target must be a triple of weights")
    ladders = [exterior_ladder_mults(n, lam) for lam in target]
    total = 0
    for a in range(max(0, k - 2 * N), min(N, k) + 1):
        for b in range(max(0, k - a - N), min(N, k - a) + 1):
            c = k - a - b
            total += ladders[0][a] * ladders[1][b] * ladders[2][c]
    return total


def exterior_triple(n: int, k: int) -> TripleDecomposition:
    """Full K x K x K decomposition of the k-th exterior power of (g/k)^3."""
    N = p_tilde_dim(n)
    if not 0 <= k <= 3 * N:
        raise OutOfRange(f"k={k} outside 0..{3 * N}")
    singles = [exterior_p(n, d) for d in range(N + 1)]
    acc: Counter = Counter()
    for a in range(max(0, k - 2 * N), min(N, k) + 1):
        for b in range(max(0, k - a - N), min(N, k - a) + 1):
            c = k - a - b
            for x, mx in singles[a].terms.items():
                for y, my in singles[b].terms.items():
                    for z, mz in singles[c].terms.items():
                        acc[(x, y, z)] += mx * my * mz
    return TripleDecomposition(n, dict(acc))
