"""Seeded generators of pure weights and compatible pairs."""
from __future__ import annotations

import random

from .compat import central_point, classify_pair, compatible
from .weights import PureWeight


def random_pure(rng: random.Random, n: int, lo: int = -6, hi: int = 6) -> PureWeight:
    """A pure weight with every entry of both halves in [lo, hi]."""
    left = sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True)
    w = rng.randint(left[0] + lo, left[-1] + hi)
    return PureWeight.from_left(left, w)


def random_compatible(
    rng: random.Random,
    n: int,
    lo: int = -6,
    hi: int = 6,
    central: bool = True,
    max_tries: int = 200_000,
) -> tuple[PureWeight, PureWeight]:
    """Rejection-sample a compatible pair; with ``central`` the weight
    parity must make -kappa + 1/2 an integer."""
    for _ in range(max_tries):
        mu = random_pure(rng, n, lo, hi)
        nu = random_pure(rng, n, lo, hi)
        if central and (mu.w + nu.w) % 2 == 0:
            continue
        if not compatible(mu, nu):
            continue
        if central and classify_pair(mu, nu, central_point(mu, nu)).label not in ("b", "c"):
            continue
        return mu, nu
    raise RuntimeError(f"no compatible pair found for n={n} in {max_tries} tries")
