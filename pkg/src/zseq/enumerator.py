"""Exhaustive enumeration of minimal zero-sum sequences up to unit scaling.

The search walks nondecreasing residue tuples over [1, n-1].  A sorted tuple
of length l is minimal zero-sum exactly when its total is 0 mod n and its
first l-1 entries are zero-sum free, so the walker explores zero-sum-free
prefixes (pruned by an incremental subset-sum bitset) and inserts the single
forced final entry at its sorted position.  Emitting a leaf only when it is
the lexicographic minimum of its unit-scaling orbit yields exactly one
representative per class, in lexicographic order, with constant memory.

Work units are the subtrees rooted at the first two chosen residues; units
are independent and merged in lexicographic order, so output is identical
for any worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterator

from zseq.cyclic import CyclicGroup, Sequence, SequenceClass, is_unit_minimal, unit_orbit
from zseq.splitting import find_split_move, is_unsplittable_fast

FILTERS = ("all", "unsplittable", "splittable")


@dataclass(frozen=True)
class EnumSpec:
    """Parameters of one enumeration run.

    ``node_budget`` and ``time_budget`` (seconds) apply per work unit; an
    exceeded budget aborts the stream with :class:`BudgetExceededError`
    rather than passing off a truncated result as complete.
    """

    n: int
    min_length: int
    max_length: int
    filter: str = "all"
    exclude_zero_element: bool = True
    dedupe_units: bool = True
    jobs: int = 1
    node_budget: int | None = None
    time_budget: float | None = None

    def __post_init__(self):
        CyclicGroup(self.n)  # validates the order
        if not 1 <= self.min_length <= self.max_length <= self.n:
            raise ValueError(
                f"need 1 <= min_length <= max_length <= {self.n}, "
                f"got [{self.min_length}, {self.max_length}]"
            )
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}, got {self.filter!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be >= 1")

    @classmethod
    def exact_length(cls, n: int, length: int, **kwargs) -> "EnumSpec":
        return cls(n=n, min_length=length, max_length=length, **kwargs)

    @classmethod
    def at_least(cls, n: int, min_length: int, **kwargs) -> "EnumSpec":
        return cls(n=n, min_length=min_length, max_length=n, **kwargs)


@dataclass
class EnumStats:
    """Counters filled in while an enumeration stream is consumed."""

    nodes: int = 0
    leaves: int = 0
    classes: int = 0
    emitted: int = 0
    complete: bool = False
    elapsed: float = 0.0


class BudgetExceededError(RuntimeError):
    """An enumeration work unit ran past its node or wall-clock budget."""

    def __init__(self, message: str, stats: EnumStats):
        super().__init__(message)
        self.stats = stats


class _BudgetHit(Exception):
    pass


class _Budget:
    __slots__ = ("nodes", "leaves", "node_cap", "deadline")

    def __init__(self, node_cap: int | None, time_cap: float | None):
        self.nodes = 0
        self.leaves = 0
        self.node_cap = node_cap
        self.deadline = time.monotonic() + time_cap if time_cap is not None else None


def _walk(
    n: int,
    lmin: int,
    lmax: int,
    prefix: tuple[int, ...],
    sig: int,
    neg: int,
    total: int,
    units: tuple[int, ...],
    dedupe: bool,
    budget: _Budget,
    out: list,
) -> None:
    """DFS over zero-sum-free nondecreasing extensions of ``prefix``.

    ``sig`` is the subset-sum mask of the prefix and ``neg`` the mask of its
    negated sums; a child a keeps the prefix zero-sum free iff bit a of
    ``neg`` is clear.  Leaves interleave with subtrees so that the emitted
    tuples are globally sorted.
    """
    budget.nodes += 1
    if budget.node_cap is not None and budget.nodes > budget.node_cap:
        raise _BudgetHit
    if budget.deadline is not None and time.monotonic() > budget.deadline:
        raise _BudgetHit
    depth = len(prefix)
    mask = (1 << n) - 1
    forced = (-total) % n  # nonzero: the prefix is zero-sum free
    want_leaf = depth >= 1 and lmin <= depth + 1 <= lmax
    descend = depth + 2 <= lmax
    for a in range(prefix[-1] if prefix else 1, n):
        if want_leaf and a == forced:
            budget.leaves += 1
            tup = prefix + (forced,)
            if not dedupe or is_unit_minimal(tup, n, units):
                out.append((tup, len(unit_orbit(tup, n, units))))
        if descend and not (neg >> a) & 1:
            sh = sig << a
            b = n - a
            sh2 = neg << b
            _walk(
                n,
                lmin,
                lmax,
                prefix + (a,),
                sig | (sh & mask) | (sh >> n) | (1 << a),
                neg | (sh2 & mask) | (sh2 >> n) | (1 << b),
                total + a,
                units,
                dedupe,
                budget,
                out,
            )


def _unit_task(args) -> tuple[list, int, int, bool]:
    """Run one (a1, a2) work unit; returns (records, nodes, leaves, truncated)."""
    n, lmin, lmax, a1, a2, dedupe, node_cap, time_cap = args
    units = CyclicGroup(n).units
    mask = (1 << n) - 1
    sig = neg = 0
    for a in (a1, a2):
        sh = sig << a
        b = n - a
        sh2 = neg << b
        sig = sig | (sh & mask) | (sh >> n) | (1 << a)
        neg = neg | (sh2 & mask) | (sh2 >> n) | (1 << b)
    budget = _Budget(node_cap, time_cap)
    out: list = []
    truncated = False
    try:
        _walk(n, lmin, lmax, (a1, a2), sig, neg, a1 + a2, units, dedupe, budget, out)
    except _BudgetHit:
        truncated = True
    return out, budget.nodes, budget.leaves, truncated


def _iter_unit_results(tasks: list, jobs: int) -> Iterator[tuple]:
    if jobs == 1 or len(tasks) <= 1:
        for t in tasks:
            yield _unit_task(t)
        return
    with multiprocessing.Pool(jobs) as pool:
        yield from pool.imap(_unit_task, tasks, chunksize=1)


def _passes_filter(seq: Sequence, flt: str) -> bool:
    if flt == "all":
        return True
    if seq.group.is_prime:
        unsplittable = is_unsplittable_fast(seq)
    else:
        unsplittable = find_split_move(seq) is None
    return unsplittable if flt == "unsplittable" else not unsplittable


def enumerate_minimal_zero_sum(
    spec: EnumSpec, stats: EnumStats | None = None
) -> Iterator[SequenceClass]:
    """Stream one representative per class of minimal zero-sum sequences.

    Output order is lexicographic on the canonical sorted residue tuples
    (shorter tuples before their extensions) and is identical for every
    ``jobs`` value.  With ``dedupe_units=False`` every sorted tuple of each
    orbit is emitted instead of the canonical one only.
    """
    if stats is None:
        stats = EnumStats()
    t0 = time.monotonic()
    n = spec.n
    group = CyclicGroup(n)
    units = group.units
    lmin, lmax = spec.min_length, spec.max_length

    def finish(seq_tuple: tuple[int, ...], orbit_size: int) -> SequenceClass | None:
        stats.classes += 1
        cls = SequenceClass(Sequence.from_residues(group, seq_tuple), orbit_size)
        if not _passes_filter(cls.canonical, spec.filter):
            return None
        stats.emitted += 1
        return cls

    try:
        stats.nodes += 1  # root
        if not spec.exclude_zero_element and lmin == 1:
            stats.leaves += 1
            cls = finish((0,), 1)
            if cls is not None:
                yield cls

        tasks = []
        if lmax >= 3:
            tasks = [
                (n, lmin, lmax, a1, a2, spec.dedupe_units, spec.node_budget, spec.time_budget)
                for a1 in range(1, n)
                for a2 in range(a1, n)
                if a2 != n - a1
            ]
        results = _iter_unit_results(tasks, spec.jobs)
        try:
            next_task = 0
            for a1 in range(1, n):
                stats.nodes += 1
                forced = n - a1
                for a2 in range(a1, n):
                    if a2 == forced:
                        if lmin <= 2 <= lmax:
                            stats.leaves += 1
                            tup = (a1, a2)
                            if not spec.dedupe_units or is_unit_minimal(tup, n, units):
                                cls = finish(tup, len(unit_orbit(tup, n, units)))
                                if cls is not None:
                                    yield cls
                    elif lmax >= 3:
                        records, nodes, leaves, truncated = next(results)
                        next_task += 1
                        stats.nodes += nodes
                        stats.leaves += leaves
                        for tup, orbit_size in records:
                            cls = finish(tup, orbit_size)
                            if cls is not None:
                                yield cls
                        if truncated:
                            raise BudgetExceededError(
                                f"work unit ({a1},{a2}) of Z_{n} exceeded its budget "
                                f"after {nodes} nodes; stream is incomplete",
                                stats,
                            )
        finally:
            results.close()
        stats.complete = True
    finally:
        stats.elapsed = time.monotonic() - t0
