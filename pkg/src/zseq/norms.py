"""Exact generator norms and the index of a sequence.

For a generator g of the subgroup spanned by supp(S), every element s is
uniquely s = x*g with x in [1, ord(g)] (x = ord(g) when s = 0); the g-norm
is (sum of the x) / ord(g).  The index is the minimum g-norm over all g
generating exactly <supp(S)>.  Everything is exact integer arithmetic; a
norm is held unreduced as (numerator, denominator).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from zseq.cyclic import Element, Sequence


@total_ordering
@dataclass(frozen=True, eq=False)
class NormValue:
    """Exact rational numerator/denominator; compared by value, not form."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        if self.numerator < 0:
            raise ValueError("numerator must be non-negative")

    def _pair(self, other) -> tuple[int, int]:
        if isinstance(other, NormValue):
            return other.numerator, other.denominator
        if isinstance(other, int):
            return other, 1
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        num, den = pair
        return self.numerator * den == num * self.denominator

    def __lt__(self, other) -> bool:
        pair = self._pair(other)
        if pair is NotImplemented:
            return NotImplemented
        num, den = pair
        return self.numerator * den < num * self.denominator

    def __hash__(self) -> int:
        return hash(self.reduced())

    @property
    def is_integer(self) -> bool:
        return self.numerator % self.denominator == 0

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.numerator // self.denominator

    def reduced(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"NormValue({self.numerator}, {self.denominator})"


def g_norm(seq: Sequence, g: "Element | int") -> NormValue:
    """Norm of ``seq`` with respect to the nonzero element ``g``.

    Every element of ``seq`` must lie in <g>; representatives are solved as
    x*g = s inside that subgroup, with x = ord(g) standing in for s = 0.
    """
    n = seq.group.order
    r = g.residue if isinstance(g, Element) else g % n
    if r == 0:
        raise ValueError("g-norm is undefined for the zero element")
    d = math.gcd(r, n)
    m = n // d
    inv = pow(r // d, -1, m)
    num = 0
    for a, mult in enumerate(seq.mult):
        if not mult:
            continue
        if a % d:
            raise ValueError(f"element {a} lies outside the subgroup generated by {r}")
        x = (a // d) * inv % m
        num += (x if x else m) * mult
    return NormValue(num, m)


def _span_gcd(seq: Sequence) -> int:
    """d with <supp(seq)> = <d>; equals n when the support is empty or {0}."""
    d = seq.group.order
    for a in seq.support():
        d = math.gcd(d, a)
    return d


def index_with_generator(seq: Sequence) -> tuple[NormValue, Element]:
    """Minimum g-norm over generators of <supp(seq)>, with the smallest
    achieving generator for reproducible reports."""
    n = seq.group.order
    d = _span_gcd(seq)
    if d == n:
        raise ValueError("index undefined: support spans the trivial subgroup")
    m = n // d
    supp = seq.support()
    mult = seq.mult
    best_num: int | None = None
    best_g = 0
    for t in range(1, m):
        if math.gcd(t, m) != 1:
            continue
        inv = pow(t, -1, m)
        num = 0
        for a in supp:
            x = (a // d) * inv % m
            num += (x if x else m) * mult[a]
        if best_num is None or num < best_num:
            best_num = num
            best_g = d * t
    assert best_num is not None
    return NormValue(best_num, m), Element(best_g, seq.group)


def index(seq: Sequence) -> NormValue:
    """Index of ``seq``: an integer exactly when seq has sum zero."""
    return index_with_generator(seq)[0]


def integer_index(seq: Sequence) -> int:
    """Index of a zero-sum sequence as a plain integer."""
    return int(index(seq))
