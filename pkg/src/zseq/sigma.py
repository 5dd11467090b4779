"""Subset-sum sets of sequences over Z_n via bitset dynamic programming.

Sigma(S) is the set of sums of nonempty subsequences of S, held as an n-bit
membership mask.  The DP folds in one element copy at a time:

    new = old | rotate(old, a) | {a}

so the empty sum is never present and 0 appears only when a genuine nonempty
subsequence reaches it.  Each step is a couple of word-parallel shift/or
operations on a machine integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from zseq.cyclic import CyclicGroup, Element, Sequence


@dataclass(frozen=True)
class SumSet:
    """Membership mask of Sigma(S); bit a is set iff a is a subsequence sum."""

    group: CyclicGroup
    bits: int

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.size

    def __contains__(self, residue: int) -> bool:
        return bool((self.bits >> (residue % self.group.order)) & 1)

    def values(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.group.order) if (self.bits >> a) & 1)

    def __repr__(self) -> str:
        return f"SumSet(Z_{self.group.order}: {{{','.join(map(str, self.values()))}}})"


def _push(bits: int, a: int, n: int, mask: int) -> int:
    """Fold one copy of residue ``a`` into a reachable-sum mask."""
    sh = bits << a
    return bits | (sh & mask) | (sh >> n) | (1 << a)


def sigma_bits(seq: Sequence) -> int:
    """Raw membership mask of Sigma(seq)."""
    n = seq.group.order
    mask = (1 << n) - 1
    bits = 0
    for a, m in enumerate(seq.mult):
        for _ in range(m):
            bits = _push(bits, a, n, mask)
        if bits == mask:
            break
    return bits


def _sigma_bits_without(seq: Sequence, g: int) -> int:
    """Mask of Sigma(seq with one copy of ``g`` removed)."""
    n = seq.group.order
    mask = (1 << n) - 1
    bits = 0
    for a, m in enumerate(seq.mult):
        if a == g:
            m -= 1
        for _ in range(m):
            bits = _push(bits, a, n, mask)
    return bits


def sigma_set(seq: Sequence) -> SumSet:
    """Sums of all nonempty subsequences of ``seq`` (empty input gives the empty set)."""
    return SumSet(seq.group, sigma_bits(seq))


def is_zero_sum_free(seq: Sequence) -> bool:
    return not sigma_bits(seq) & 1


def is_minimal_zero_sum(seq: Sequence) -> bool:
    """True iff seq sums to zero and no proper nonempty subsequence does.

    One pass suffices: fix any supported element g and drop one copy.  A
    proper zero-sum subsequence either avoids that copy, or its (also proper,
    also zero-sum) complement does, so minimality is equivalent to
    0 not in Sigma(seq minus one g).  The empty sequence is not minimal by
    convention.
    """
    if seq.length == 0 or seq.sum != 0:
        return False
    g = next(a for a, m in enumerate(seq.mult) if m > 0)
    return not _sigma_bits_without(seq, g) & 1


def sigma_complement_sizes(seq: Sequence) -> dict[Element, int]:
    """|Sigma(seq with one g removed)| for each supported g."""
    if seq.length == 0:
        raise ValueError("sigma_complement_sizes requires a nonempty sequence")
    group = seq.group
    return {
        Element(g, group): _sigma_bits_without(seq, g).bit_count()
        for g in seq.support()
    }
