"""Seeded random generation of zero-sum-free and minimal zero-sum sequences.

Used by the randomized lemma suites; all callers pass an explicit
``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random

from zseq.cyclic import CyclicGroup, Sequence


def random_zero_sum_free(rng: random.Random, n: int, max_length: int) -> Sequence:
    """Random zero-sum-free sequence grown element by element.

    Each step picks uniformly among residues that keep the sequence
    zero-sum free; growth stops at ``max_length`` or when no residue
    qualifies (the sequence is maximal).
    """
    group = CyclicGroup(n)
    mask = (1 << n) - 1
    sig = 0
    picked: list[int] = []
    for _ in range(max_length):
        neg = 0
        for a in range(1, n):
            if (sig >> ((n - a) % n)) & 1:
                neg |= 1 << a
        choices = [a for a in range(1, n) if not (neg >> a) & 1]
        if not choices:
            break
        a = rng.choice(choices)
        picked.append(a)
        sh = sig << a
        sig = sig | (sh & mask) | (sh >> n) | (1 << a)
    return Sequence.from_residues(group, picked)


def random_minimal_zero_sum(
    rng: random.Random, n: int, length: int, attempts: int = 200
) -> Sequence | None:
    """Random minimal zero-sum sequence of exactly ``length``, or None.

    Builds a zero-sum-free part of length - 1 and appends the one residue
    that closes the sum; the result is minimal whenever the part is
    zero-sum free.
    """
    if length == 1:
        return Sequence.from_residues(CyclicGroup(n), [0])
    for _ in range(attempts):
        part = random_zero_sum_free(rng, n, length - 1)
        if part.length != length - 1:
            continue
        closing = (-part.sum) % n
        return part.plus(closing)
    return None


def random_split(rng: random.Random, seq: Sequence, parts: int) -> list[Sequence]:
    """Partition ``seq`` into ``parts`` disjoint (possibly empty) subsequences."""
    n = seq.group.order
    buckets = [[0] * n for _ in range(parts)]
    for a, m in enumerate(seq.mult):
        for _ in range(m):
            buckets[rng.randrange(parts)][a] += 1
    return [Sequence(seq.group, b) for b in buckets]
