"""Desk-scale group invariants computed by exhaustive enumeration.

All four computations are exhaustive searches over minimal zero-sum (or
zero-sum-free) classes and are capped by group order; results carry an
``exhaustive`` flag so a budget-truncated search can never masquerade as a
completed one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from zseq.cyclic import CyclicGroup, Sequence, SequenceClass, is_unit_minimal, unit_orbit
from zseq.enumerator import (
    BudgetExceededError,
    EnumSpec,
    EnumStats,
    _Budget,
    _BudgetHit,
    enumerate_minimal_zero_sum,
)
from zseq.norms import integer_index

THRESHOLD_ORDER_CAP = 16
DAVENPORT_ORDER_CAP = 12


@dataclass
class InvariantResult:
    """Value of one invariant plus the extremal classes that realize it."""

    n: int
    value: int
    witnesses: list[SequenceClass]
    exhaustive: bool


def _classes_at_length(n: int, length: int, jobs: int, node_budget: int | None):
    spec = EnumSpec.exact_length(n, length, jobs=jobs, node_budget=node_budget)
    return list(enumerate_minimal_zero_sum(spec))


def index_bound_threshold(
    n: int,
    k: int,
    cap: int = THRESHOLD_ORDER_CAP,
    jobs: int = 1,
    node_budget: int | None = None,
) -> InvariantResult:
    """Smallest l such that every minimal zero-sum class of length >= l has
    index <= k.

    Scans lengths from n (the longest possible class) downward and stops at
    the first length carrying an index > k class; that length plus one is
    the threshold.  A budget overrun propagates, since a partial scan cannot
    certify a threshold.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 2 <= n <= cap:
        raise ValueError(f"order {n} outside the supported range [2, {cap}]")
    for length in range(n, 1, -1):
        bad = [
            cls
            for cls in _classes_at_length(n, length, jobs, node_budget)
            if integer_index(cls.canonical) > k
        ]
        if bad:
            return InvariantResult(n, length + 1, bad, True)
    return InvariantResult(n, 1, [], True)


def index_one_threshold(
    n: int,
    cap: int = THRESHOLD_ORDER_CAP,
    jobs: int = 1,
    node_budget: int | None = None,
) -> InvariantResult:
    """Smallest l such that every minimal zero-sum class of length >= l has
    index exactly 1."""
    return index_bound_threshold(n, 1, cap=cap, jobs=jobs, node_budget=node_budget)


def max_index(
    n: int,
    cap: int = THRESHOLD_ORDER_CAP,
    jobs: int = 1,
    node_budget: int | None = None,
    min_length: int = 2,
) -> InvariantResult:
    """Largest index over all minimal zero-sum classes of length >= min_length.

    Indices of zero-sum sequences are integers, so the maximum is an integer.
    On budget overrun the best value seen so far is returned with
    ``exhaustive=False``.
    """
    if not 2 <= n <= cap:
        raise ValueError(f"order {n} outside the supported range [2, {cap}]")
    spec = EnumSpec(n=n, min_length=max(min_length, 2), max_length=n, jobs=jobs, node_budget=node_budget)
    best = 0
    witnesses: list[SequenceClass] = []
    exhaustive = True
    stream = enumerate_minimal_zero_sum(spec)
    try:
        for cls in stream:
            value = integer_index(cls.canonical)
            if value > best:
                best = value
                witnesses = [cls]
            elif value == best:
                witnesses.append(cls)
    except BudgetExceededError:
        exhaustive = False
    return InvariantResult(n, best, witnesses, exhaustive)


@dataclass
class _Deepest:
    depth: int = 0
    tuples: list = field(default_factory=list)


def _zsf_walk(n, prefix, sig, neg, best, budget, mask):
    budget.nodes += 1
    if budget.node_cap is not None and budget.nodes > budget.node_cap:
        raise _BudgetHit
    depth = len(prefix)
    if depth > best.depth:
        best.depth = depth
        best.tuples = [prefix]
    elif depth == best.depth and depth > 0:
        best.tuples.append(prefix)
    for a in range(prefix[-1] if prefix else 1, n):
        if not (neg >> a) & 1:
            sh = sig << a
            b = n - a
            sh2 = neg << b
            _zsf_walk(
                n,
                prefix + (a,),
                sig | (sh & mask) | (sh >> n) | (1 << a),
                neg | (sh2 & mask) | (sh2 >> n) | (1 << b),
                best,
                budget,
                mask,
            )


def davenport_constant(
    n: int,
    cap: int = DAVENPORT_ORDER_CAP,
    node_budget: int | None = None,
) -> InvariantResult:
    """Smallest l such that no zero-sum-free sequence of length l exists,
    found by exhausting zero-sum-free tuples; witnesses are the classes of
    maximum zero-sum-free length."""
    if not 2 <= n <= cap:
        raise ValueError(f"order {n} outside the supported range [2, {cap}]")
    group = CyclicGroup(n)
    best = _Deepest()
    budget = _Budget(node_budget, None)
    exhaustive = True
    try:
        _zsf_walk(n, (), 0, 0, best, budget, (1 << n) - 1)
    except _BudgetHit:
        exhaustive = False
    units = group.units
    witnesses = [
        SequenceClass(Sequence.from_residues(group, tup), len(unit_orbit(tup, n, units)))
        for tup in best.tuples
        if is_unit_minimal(tup, n, units)
    ]
    return InvariantResult(n, best.depth + 1, witnesses, exhaustive)
