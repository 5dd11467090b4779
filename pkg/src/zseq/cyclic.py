"""Cyclic groups Z_n and finite multisets ("sequences") of their elements.

A sequence is an unordered multiset over Z_n, stored as a dense vector of
multiplicities indexed by residue.  The text form is comma-separated
``residue^multiplicity`` terms with ``^1`` omitted; canonical output sorts
terms ascending by residue, e.g. ``1^3,5,7^2``.

All types here are immutable values after construction and safe to share
between concurrent workers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

# Dense multiplicity vectors are refused beyond this order.
MAX_ORDER = 1 << 16


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class CyclicGroup:
    """The additive group of integers modulo ``order``, order >= 2."""

    __slots__ = ("order", "is_prime", "_units")

    def __init__(self, order: int):
        if not isinstance(order, int) or isinstance(order, bool) or order < 2:
            raise ValueError(f"group order must be an integer >= 2, got {order!r}")
        if order > MAX_ORDER:
            raise ValueError(
                f"group order {order} exceeds the dense representation cap {MAX_ORDER}"
            )
        self.order = order
        self.is_prime = _is_prime(order)
        self._units: tuple[int, ...] | None = None

    @property
    def units(self) -> tuple[int, ...]:
        """Residues coprime to the order, in ascending order."""
        if self._units is None:
            n = self.order
            self._units = tuple(u for u in range(1, n) if math.gcd(u, n) == 1)
        return self._units

    def element(self, residue: int) -> "Element":
        return Element(residue % self.order, self)

    def element_order(self, residue: int) -> int:
        """Order of <residue> as a subgroup element."""
        return self.order // math.gcd(residue, self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicGroup) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("CyclicGroup", self.order))

    def __repr__(self) -> str:
        return f"CyclicGroup({self.order})"


@dataclass(frozen=True)
class Element:
    """A residue in [0, n-1] together with its ambient group."""

    residue: int
    group: CyclicGroup

    def __post_init__(self):
        if not 0 <= self.residue < self.group.order:
            raise ValueError(
                f"residue {self.residue} out of range for Z_{self.group.order}"
            )

    @property
    def order(self) -> int:
        return self.group.element_order(self.residue)

    @property
    def is_unit(self) -> bool:
        return math.gcd(self.residue, self.group.order) == 1

    def __int__(self) -> int:
        return self.residue

    def __repr__(self) -> str:
        return f"Element({self.residue} mod {self.group.order})"


class Sequence:
    """Multiset over Z_n with cached length and sum.

    ``mult[a]`` is the multiplicity of residue ``a``; ``length`` and ``sum``
    are kept consistent with it by construction.
    """

    __slots__ = ("group", "mult", "length", "sum")

    def __init__(self, group: CyclicGroup, mult: Iterable[int]):
        counts = tuple(mult)
        n = group.order
        if len(counts) != n:
            raise ValueError(
                f"multiplicity vector has {len(counts)} entries, expected {n}"
            )
        if any(m < 0 for m in counts):
            raise ValueError("multiplicities must be non-negative")
        self.group = group
        self.mult = counts
        self.length = sum(counts)
        self.sum = sum(a * m for a, m in enumerate(counts)) % n

    @classmethod
    def from_residues(cls, group: CyclicGroup, residues: Iterable[int]) -> "Sequence":
        counts = [0] * group.order
        for a in residues:
            if not 0 <= a < group.order:
                raise ValueError(f"residue {a} out of range for Z_{group.order}")
            counts[a] += 1
        return cls(group, counts)

    # -- basic views ------------------------------------------------------

    def residues(self) -> tuple[int, ...]:
        """All element residues with multiplicity, ascending."""
        out: list[int] = []
        for a, m in enumerate(self.mult):
            out.extend([a] * m)
        return tuple(out)

    def support(self) -> tuple[int, ...]:
        return tuple(a for a, m in enumerate(self.mult) if m > 0)

    def support_elements(self) -> tuple[Element, ...]:
        return tuple(Element(a, self.group) for a in self.support())

    def multiplicity(self, residue: int) -> int:
        return self.mult[residue % self.group.order]

    @property
    def max_multiplicity(self) -> int:
        """Largest multiplicity of any element (0 for the empty sequence)."""
        return max(self.mult, default=0)

    @property
    def is_zero_sum(self) -> bool:
        return self.length > 0 and self.sum == 0

    # -- multiset edits (return new sequences) ----------------------------

    def without(self, residue: int, count: int = 1) -> "Sequence":
        """Copy with ``count`` copies of ``residue`` removed."""
        a = residue % self.group.order
        if self.mult[a] < count:
            raise ValueError(f"cannot remove {count} copies of {a}")
        counts = list(self.mult)
        counts[a] -= count
        return Sequence(self.group, counts)

    def plus(self, residue: int, count: int = 1) -> "Sequence":
        a = residue % self.group.order
        counts = list(self.mult)
        counts[a] += count
        return Sequence(self.group, counts)

    def scaled(self, u: "Element | int") -> "Sequence":
        return scale(self, u)

    # -- formatting and equality ------------------------------------------

    def format(self) -> str:
        parts = []
        for a, m in enumerate(self.mult):
            if m == 1:
                parts.append(str(a))
            elif m > 1:
                parts.append(f"{a}^{m}")
        return ",".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Sequence(Z_{self.group.order}: {self.format() or 'empty'})"

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.residues())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Sequence)
            and other.group == self.group
            and other.mult == self.mult
        )

    def __hash__(self) -> int:
        return hash((self.group.order, self.mult))


_TERM_RE = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def parse_sequence(text: str, n: int) -> Sequence:
    """Parse comma-separated ``residue^multiplicity`` terms over Z_n.

    Round-trips with :meth:`Sequence.format`: ``parse_sequence(s.format(), n)``
    recovers ``s`` for every nonempty sequence.
    """
    group = CyclicGroup(n)
    if not text or not text.strip():
        raise ValueError("empty sequence text")
    counts = [0] * n
    for raw in text.split(","):
        term = raw.strip()
        m = _TERM_RE.match(term)
        if m is None:
            raise ValueError(f"malformed term {raw!r}")
        a = int(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        if a >= n:
            raise ValueError(f"residue {a} out of range for Z_{n}")
        if k < 1:
            raise ValueError(f"multiplicity must be >= 1 in term {raw!r}")
        counts[a] += k
    return Sequence(group, counts)


def scale(seq: Sequence, u: "Element | int") -> Sequence:
    """Multiset {u*s : s in seq} for a unit u; length preserved, sum scaled."""
    n = seq.group.order
    r = u.residue if isinstance(u, Element) else u % n
    if math.gcd(r, n) != 1:
        raise ValueError(f"{r} is not a unit modulo {n}")
    counts = [0] * n
    for a, m in enumerate(seq.mult):
        if m:
            counts[(a * r) % n] += m
    return Sequence(seq.group, counts)


# -- unit-orbit canonical forms -------------------------------------------
#
# Two sequences are equivalent when one is a unit scaling of the other; the
# canonical representative is the lexicographically smallest sorted residue
# tuple in the orbit, found by scanning every unit (orders here are small).


def scale_sorted(tup: tuple[int, ...], u: int, n: int) -> tuple[int, ...]:
    return tuple(sorted((u * a) % n for a in tup))


def is_unit_minimal(tup: tuple[int, ...], n: int, units: Iterable[int]) -> bool:
    """True when ``tup`` (sorted) is the lex-smallest member of its orbit."""
    for u in units:
        if u != 1 and scale_sorted(tup, u, n) < tup:
            return False
    return True


def unit_orbit(tup: tuple[int, ...], n: int, units: Iterable[int]) -> set[tuple[int, ...]]:
    return {scale_sorted(tup, u, n) for u in units}


@dataclass(frozen=True)
class SequenceClass:
    """A unit-scaling equivalence class, held by its canonical member."""

    canonical: Sequence
    orbit_size: int

    def __str__(self) -> str:
        return self.canonical.format()


def canonical_class(seq: Sequence) -> SequenceClass:
    """Canonical representative and orbit size of ``seq`` under unit scaling."""
    group = seq.group
    orbit = unit_orbit(seq.residues(), group.order, group.units)
    return SequenceClass(Sequence.from_residues(group, min(orbit)), len(orbit))
