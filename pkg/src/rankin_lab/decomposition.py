"""Result types for tensor, exterior and restriction computations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import DimensionMismatch, NotDominant
from .weights import Weight, dual, is_dominant


def weyl_dimension(lam: Weight) -> int:
    """prod_{i<j} (lam_i - lam_j + j - i) / (j - i), evaluated exactly."""
    n = len(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


@dataclass
class Decomposition:
    """Finite multiset of irreducible GL_n representations."""

    n: int
    terms: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, m in self.terms.items():
            lam = tuple(lam)
            if len(lam) != self.n:
                raise DimensionMismatch(f"term {lam} does not have length {self.n}")
            if not is_dominant(lam):
                raise NotDominant(f"term {lam} is not dominant")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {lam}")
            if m:
                clean[lam] = clean.get(lam, 0) + int(m)
        self.terms = clean

    def mult(self, lam: Weight) -> int:
        return self.terms.get(tuple(lam), 0)

    def dim(self) -> int:
        return sum(m * weyl_dimension(lam) for lam, m in self.terms.items())

    def dual(self) -> "Decomposition":
        return Decomposition(self.n, {dual(lam): m for lam, m in self.terms.items()})

    def shift(self, c: int) -> "Decomposition":
        """Twist every term by det^c."""
        return Decomposition(self.n, {tuple(x + c for x in lam): m for lam, m in self.terms.items()})

    def total(self) -> int:
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self.terms, reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Decomposition):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, Mapping):
            return self.terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"weight": list(lam), "mult": m} for lam, m in self.items()],
        }


@dataclass
class TripleDecomposition:
    """Multiset of outer tensor products E_a (x) E_b (x) E_c of K x K x K."""

    n: int
    terms: dict[tuple[Weight, Weight, Weight], int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(map(tuple, k)): int(m) for k, m in self.terms.items() if m}

    def mult(self, target) -> int:
        return self.terms.get(tuple(map(tuple, target)), 0)

    def dim(self) -> int:
        return sum(
            m * weyl_dimension(a) * weyl_dimension(b) * weyl_dimension(c)
            for (a, b, c), m in self.terms.items()
        )
