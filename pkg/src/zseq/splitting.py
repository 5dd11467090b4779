"""The splitting move on minimal zero-sum sequences, and splittability tests.

A split replaces one copy of a supported element g by two elements x, y with
x + y = g; the sequence is splittable when some such move leaves it minimal
zero-sum.  Two deciders are provided: an exhaustive scan valid for every
group order, and a sum-set-size criterion valid for prime order only (a
minimal zero-sum S over Z_p is unsplittable iff |Sigma(S g^-1)| = p - 1 for
every supported g).
"""

from __future__ import annotations

from dataclasses import dataclass

from zseq.cyclic import Element, Sequence
from zseq.sigma import _sigma_bits_without, is_minimal_zero_sum


@dataclass(frozen=True)
class SplitMove:
    """Replace one copy of ``target`` by ``part_x`` and ``part_y``."""

    target: Element
    part_x: Element
    part_y: Element

    def __post_init__(self):
        group = self.target.group
        if self.part_x.group != group or self.part_y.group != group:
            raise ValueError("split move parts must share one group")
        if (self.part_x.residue + self.part_y.residue) % group.order != self.target.residue:
            raise ValueError(
                f"{self.part_x.residue} + {self.part_y.residue} != {self.target.residue} "
                f"in Z_{group.order}"
            )

    def __str__(self) -> str:
        return f"{self.target.residue} -> {self.part_x.residue} + {self.part_y.residue}"


def split(seq: Sequence, move: SplitMove) -> Sequence:
    """Apply ``move`` to ``seq``; length grows by one, the sum is unchanged."""
    if move.target.group != seq.group:
        raise ValueError("move group does not match sequence group")
    g = move.target.residue
    if seq.mult[g] == 0:
        raise ValueError(f"split target {g} is not in the support")
    return seq.without(g).plus(move.part_x.residue).plus(move.part_y.residue)


def find_split_move(seq: Sequence) -> SplitMove | None:
    """Exhaustive splittability decision; returns the smallest witnessing
    move in (target, x) order, or None when ``seq`` is unsplittable.

    Only one subset-sum pass runs per candidate target g: with
    B = Sigma(seq minus one g), the move (g -> x + y) keeps the result
    minimal exactly when y != 0 and -y is not in B (remove the new copy of
    x from the result and apply the one-complement minimality test).
    """
    if not is_minimal_zero_sum(seq):
        raise ValueError("splittability is defined for minimal zero-sum sequences")
    n = seq.group.order
    group = seq.group
    for g in seq.support():
        base = _sigma_bits_without(seq, g)
        for x in range(1, n):
            y = (g - x) % n
            if x > y or y == 0:
                continue
            if not (base >> (n - y)) & 1:
                return SplitMove(
                    Element(g, group), Element(x, group), Element(y, group)
                )
    return None


def is_unsplittable_fast(seq: Sequence) -> bool:
    """Sum-set-size unsplittability criterion; prime group order only."""
    group = seq.group
    if not group.is_prime:
        raise ValueError("the sum-set criterion requires prime group order")
    if not is_minimal_zero_sum(seq):
        raise ValueError("the sum-set criterion requires a minimal zero-sum sequence")
    p = group.order
    return all(
        _sigma_bits_without(seq, g).bit_count() == p - 1 for g in seq.support()
    )


@dataclass(frozen=True)
class SplitClassification:
    """Outcome of a splittability decision, recording which method ran."""

    unsplittable: bool
    method: str  # "sum-set-criterion" or "exhaustive"
    witness: SplitMove | None


def classify_splittability(seq: Sequence, want_witness: bool = False) -> SplitClassification:
    """Decide splittability with the cheapest method the group order allows."""
    if seq.group.is_prime:
        unsplittable = is_unsplittable_fast(seq)
        witness = None
        if not unsplittable and want_witness:
            witness = find_split_move(seq)
        return SplitClassification(unsplittable, "sum-set-criterion", witness)
    witness = find_split_move(seq)
    return SplitClassification(witness is None, "exhaustive", witness)
