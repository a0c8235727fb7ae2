"""Exact weight arithmetic for GL_n and GL_n x GL_n.

A GL_n weight is a plain ``tuple[int, ...]``; dominance means weakly
decreasing entries.  Half-integers are kept as doubled integers so that
nothing in the library ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotDominant, NotPure

Weight = tuple[int, ...]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z stored as ``twice``."""

    twice: int

    @classmethod
    def of(cls, value: "int | HalfInt | Fraction") -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, Fraction):
            if (2 * value).denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            return cls(int(2 * value))
        return cls(2 * int(value))

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_half_odd(self) -> bool:
        return self.twice % 2 == 1

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def to_int(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def floor(self) -> int:
        return self.twice // 2

    def ceil(self) -> int:
        return -((-self.twice) // 2)

    def to_json(self) -> "int | str":
        return self.twice // 2 if self.is_integral else f"{self.twice}/2"

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return HalfInt(other.twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __mul__(self, k):
        if isinstance(k, int) and not isinstance(k, bool):
            return HalfInt(self.twice * k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self) -> int:
        # equal ints must hash alike
        return hash(self.twice // 2) if self.is_integral else hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integral else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def _coerce(x):
    if isinstance(x, HalfInt):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return HalfInt(2 * x)
    return NotImplemented


def is_dominant(v: Sequence[int]) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def check_dominant(v: Sequence[int], what: str = "weight") -> Weight:
    v = tuple(int(x) for x in v)
    if not v:
        raise DimensionMismatch(f"{what} must have at least one entry")
    if not is_dominant(v):
        raise NotDominant(f"{what} {v} is not weakly decreasing")
    return v


def same_n(*weights: Sequence[int]) -> int:
    ns = {len(w) for w in weights}
    if len(ns) != 1:
        raise DimensionMismatch(f"weights of different lengths: {sorted(ns)}")
    return ns.pop()


def dual(lam: Sequence[int]) -> Weight:
    """Highest weight of the contragredient: negate, then reverse."""
    return tuple(-x for x in reversed(lam))


def dominant_rep(v: Iterable[int]) -> Weight:
    return tuple(sorted(v, reverse=True))


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    same_n(a, b)
    return tuple(x + y for x, y in zip(a, b))


def scalar(n: int, c: int) -> Weight:
    return (c,) * n


@dataclass(frozen=True)
class PureWeight:
    """A pair of dominant GL_n weights whose cross sums all equal ``w``."""

    left: Weight
    right: Weight
    w: int

    def __post_init__(self):
        check_dominant(self.left, "left half")
        check_dominant(self.right, "right half")
        n = same_n(self.left, self.right)
        for i in range(n):
            if self.left[i] + self.right[n - 1 - i] != self.w:
                raise NotPure(f"({self.left}; {self.right}) is not pure with weight {self.w}")

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def entries(self) -> Weight:
        return self.left + self.right

    @classmethod
    def from_left(cls, left: Sequence[int], w: int) -> "PureWeight":
        left = check_dominant(left, "left half")
        return cls(left, tuple(w - x for x in reversed(left)), w)

    def __str__(self) -> str:
        return format_pair(self.left, self.right)


def validate_pure(raw: Sequence[int]) -> PureWeight:
    raw = tuple(int(x) for x in raw)
    if len(raw) == 0 or len(raw) % 2:
        raise DimensionMismatch(f"pure weight needs an even, positive length, got {len(raw)}")
    n = len(raw) // 2
    left, right = raw[:n], raw[n:]
    check_dominant(left, "left half")
    check_dominant(right, "right half")
    sums = {left[i] + right[n - 1 - i] for i in range(n)}
    if len(sums) != 1:
        raise NotPure(f"cross sums {sorted(sums)} disagree")
    return PureWeight(left, right, sums.pop())


def kappa(w: int, w_prime: int) -> HalfInt:
    return HalfInt(w + w_prime)


def pair_kappa(mu: PureWeight, nu: PureWeight) -> HalfInt:
    return kappa(mu.w, nu.w)


def k_eta(mu: PureWeight, nu: PureWeight) -> int:
    if mu.n != nu.n:
        raise DimensionMismatch(f"n={mu.n} vs n={nu.n}")
    return sum(mu.left) + sum(nu.left)


def inf_char(mu: PureWeight) -> list[tuple[HalfInt, HalfInt]]:
    """The pairs (a_i, b_i) with a_i = mu_i + (n+1-2i)/2 and b_i = w - a_i."""
    n = mu.n
    out = []
    for i, m in enumerate(mu.left, start=1):
        a = HalfInt(2 * m + n + 1 - 2 * i)
        out.append((a, mu.w - a))
    return out


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if not text:
        raise ValueError("empty weight literal")
    return tuple(int(tok) for tok in text.split(","))


def parse_pair(text: str) -> tuple[Weight, Weight]:
    halves = text.split(";")
    if len(halves) != 2:
        raise ValueError(f"expected two halves separated by ';' in {text!r}")
    return parse_weight(halves[0]), parse_weight(halves[1])


def parse_pure(text: str) -> PureWeight:
    left, right = parse_pair(text)
    if len(left) != len(right):
        raise DimensionMismatch(f"halves of {text!r} have different lengths")
    return validate_pure(left + right)


def format_weight(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def format_pair(left: Sequence[int], right: Sequence[int]) -> str:
    return f"{format_weight(left)};{format_weight(right)}"
