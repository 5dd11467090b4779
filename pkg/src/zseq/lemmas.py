"""Executable structural properties of (unsplittable) minimal zero-sum
sequences over Z_p.

Each check returns ``(checked, violations)`` where ``checked`` counts the
individual assertions evaluated.  The checks over enumerated unsplittable
classes are exhaustive for the given prime; the two randomized ones take an
explicit RNG.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from zseq.cyclic import CyclicGroup, Sequence
from zseq.enumerator import EnumSpec, enumerate_minimal_zero_sum
from zseq.sampling import random_minimal_zero_sum, random_split, random_zero_sum_free
from zseq.sigma import is_zero_sum_free, sigma_set
from zseq.splitting import find_split_move, is_unsplittable_fast


@dataclass(frozen=True)
class Violation:
    check: str
    n: int
    seq: str
    detail: str


@lru_cache(maxsize=None)
def all_classes(p: int, min_length: int = 2, max_length: int | None = None) -> tuple[Sequence, ...]:
    spec = EnumSpec(n=p, min_length=min_length, max_length=max_length or p)
    return tuple(cls.canonical for cls in enumerate_minimal_zero_sum(spec))


@lru_cache(maxsize=None)
def unsplittable_classes(p: int) -> tuple[Sequence, ...]:
    spec = EnumSpec(n=p, min_length=2, max_length=p, filter="unsplittable")
    return tuple(cls.canonical for cls in enumerate_minimal_zero_sum(spec))


def _sub_multiset(seq: Sequence, counts: dict[int, int]) -> Sequence:
    vec = [0] * seq.group.order
    for a, m in counts.items():
        vec[a] = m
    return Sequence(seq.group, vec)


def check_partition_superadditivity(
    rng: random.Random, orders: tuple[int, ...], samples: int
) -> tuple[int, list[Violation]]:
    """|Sigma(S)| >= sum |Sigma(S_i)| over random partitions of random
    zero-sum-free S."""
    checked = 0
    violations = []
    for _ in range(samples):
        n = rng.choice(orders)
        seq = random_zero_sum_free(rng, n, rng.randint(1, n - 1))
        parts = random_split(rng, seq, rng.randint(2, 4))
        checked += 1
        total = sum(sigma_set(part).size for part in parts if part.length)
        if sigma_set(seq).size < total:
            violations.append(
                Violation(
                    "partition-superadditivity",
                    n,
                    seq.format(),
                    f"|Sigma| {sigma_set(seq).size} < partition total {total}",
                )
            )
    return checked, violations


def check_zero_sum_free_set_bound(
    primes: tuple[int, ...], rng: random.Random, random_rounds: int = 200
) -> tuple[int, list[Violation]]:
    """|Sigma(A)| >= min(p, |A|(|A|+1)/2) for zero-sum-free subsets A of Z_p;
    exhaustive up to size 4 for p <= 13, randomized for larger p."""
    checked = 0
    violations = []

    def examine(p: int, subset: tuple[int, ...]):
        nonlocal checked
        seq = Sequence.from_residues(CyclicGroup(p), subset)
        if not is_zero_sum_free(seq):
            return
        checked += 1
        k = len(subset)
        bound = min(p, k * (k + 1) // 2)
        if sigma_set(seq).size < bound:
            violations.append(
                Violation(
                    "zero-sum-free-set-bound",
                    p,
                    seq.format(),
                    f"|Sigma| {sigma_set(seq).size} < {bound}",
                )
            )

    for p in primes:
        if p <= 13:
            for k in range(1, 5):
                for subset in itertools.combinations(range(1, p), k):
                    examine(p, subset)
        else:
            for _ in range(random_rounds):
                k = rng.randint(1, min(8, p - 1))
                examine(p, tuple(rng.sample(range(1, p), k)))
    return checked, violations


def check_coefficient_condition(p: int) -> tuple[int, list[Violation]]:
    """For unsplittable S with g and t*g both supported, t in [2, p-1]:
    t >= v_g(S) + 2 and t != (p+1)/2."""
    checked = 0
    violations = []
    for seq in unsplittable_classes(p):
        supp = seq.support()
        for g in supp:
            inv = pow(g, -1, p)
            for h in supp:
                if h == g:
                    continue
                t = h * inv % p
                checked += 1
                if t < seq.mult[g] + 2 or t == (p + 1) // 2:
                    violations.append(
                        Violation(
                            "coefficient-condition",
                            p,
                            seq.format(),
                            f"g={g}, h={h}: t={t}, v_g={seq.mult[g]}",
                        )
                    )
    return checked, violations


def check_pair_sum_counts(p: int) -> tuple[int, list[Violation]]:
    """For unsplittable S and supported g != h: |Sigma(g^k h)| = 2k+1 for
    k <= v_g(S), and |Sigma(g^2 h^2)| = 8 when both multiplicities allow."""
    checked = 0
    violations = []
    for seq in unsplittable_classes(p):
        supp = seq.support()
        for g in supp:
            for h in supp:
                if h == g:
                    continue
                for k in range(0, seq.mult[g] + 1):
                    size = sigma_set(_sub_multiset(seq, {g: k, h: 1})).size
                    checked += 1
                    if size != 2 * k + 1:
                        violations.append(
                            Violation(
                                "pair-sum-counts",
                                p,
                                seq.format(),
                                f"|Sigma({g}^{k} {h})| = {size} != {2 * k + 1}",
                            )
                        )
                if seq.mult[g] >= 2 and seq.mult[h] >= 2:
                    size = sigma_set(_sub_multiset(seq, {g: 2, h: 2})).size
                    checked += 1
                    if size != 8:
                        violations.append(
                            Violation(
                                "pair-sum-counts",
                                p,
                                seq.format(),
                                f"|Sigma({g}^2 {h}^2)| = {size} != 8",
                            )
                        )
    return checked, violations


def check_power_pair_bound(p: int) -> tuple[int, list[Violation]]:
    """For T = g^k (x*g)^2 inside unsplittable S with k >= 3:
    |Sigma(T)| >= 2|T|, and >= 2|T|+1 unless x = (p+3)/2."""
    checked = 0
    violations = []
    for seq in unsplittable_classes(p):
        supp = seq.support()
        for g in supp:
            if seq.mult[g] < 3:
                continue
            inv = pow(g, -1, p)
            for h in supp:
                if h == g or seq.mult[h] < 2:
                    continue
                x = h * inv % p
                for k in range(3, seq.mult[g] + 1):
                    size = sigma_set(_sub_multiset(seq, {g: k, h: 2})).size
                    floor = 2 * (k + 2)
                    needed = floor if x == (p + 3) // 2 else floor + 1
                    checked += 1
                    if size < needed:
                        violations.append(
                            Violation(
                                "power-pair-bound",
                                p,
                                seq.format(),
                                f"|Sigma({g}^{k} {h}^2)| = {size} < {needed}",
                            )
                        )
    return checked, violations


def check_triple_bound(p: int) -> tuple[int, list[Violation]]:
    """For T = g1^k g2 g3 inside unsplittable S (g1, g2, g3 distinct):
    |Sigma(T)| >= 2|T|, and >= 2|T|+1 unless {g2, g3} are the (p-1)/2 and
    (p+3)/2 multiples of g1."""
    checked = 0
    violations = []
    for seq in unsplittable_classes(p):
        supp = seq.support()
        for g1 in supp:
            inv = pow(g1, -1, p)
            others = [h for h in supp if h != g1]
            for g2, g3 in itertools.combinations(others, 2):
                coeffs = {g2 * inv % p, g3 * inv % p}
                exceptional = coeffs == {(p - 1) // 2, (p + 3) // 2}
                for k in range(1, seq.mult[g1] + 1):
                    size = sigma_set(_sub_multiset(seq, {g1: k, g2: 1, g3: 1})).size
                    floor = 2 * (k + 2)
                    needed = floor if exceptional else floor + 1
                    checked += 1
                    if size < needed:
                        violations.append(
                            Violation(
                                "triple-bound",
                                p,
                                seq.format(),
                                f"|Sigma({g1}^{k} {g2} {g3})| = {size} < {needed}",
                            )
                        )
    return checked, violations


def check_removal_bound(p: int) -> tuple[int, list[Violation]]:
    """Every subsequence T of unsplittable S with at least two distinct
    elements admits a g in supp(T) with |Sigma(T g^-1)| >= 2|T g^-1| - 1."""
    checked = 0
    violations = []
    for seq in unsplittable_classes(p):
        supp = seq.support()
        if len(supp) < 2:
            continue
        ranges = [range(seq.mult[g] + 1) for g in supp]
        for counts in itertools.product(*ranges):
            chosen = {g: c for g, c in zip(supp, counts) if c}
            if len(chosen) < 2:
                continue
            sub = _sub_multiset(seq, chosen)
            checked += 1
            ok = any(
                sigma_set(sub.without(g)).size >= 2 * (sub.length - 1) - 1
                for g in chosen
            )
            if not ok:
                violations.append(
                    Violation(
                        "removal-bound",
                        p,
                        seq.format(),
                        f"subsequence {sub.format()} has no qualifying removal",
                    )
                )
    return checked, violations


def check_criterion_equivalence(
    p: int, rng: random.Random, random_samples: int = 500
) -> tuple[int, list[Violation]]:
    """The prime-order sum-set criterion agrees with the exhaustive decider:
    all classes up to length 8, plus random longer classes."""
    checked = 0
    violations = []

    def examine(seq: Sequence):
        nonlocal checked
        checked += 1
        fast = is_unsplittable_fast(seq)
        brute = find_split_move(seq) is None
        if fast != brute:
            violations.append(
                Violation(
                    "criterion-equivalence",
                    p,
                    seq.format(),
                    f"sum-set criterion {fast}, exhaustive {brute}",
                )
            )

    for seq in all_classes(p, 2, min(8, p)):
        examine(seq)
    if p > 8:
        longer = [
            random_minimal_zero_sum(rng, p, rng.randint(9, p)) for _ in range(random_samples)
        ]
        for seq in longer:
            if seq is not None:
                examine(seq)
    return checked, violations


def check_two_support_splittable(p: int) -> tuple[int, list[Violation]]:
    """Every minimal zero-sum sequence with exactly two distinct elements is
    splittable; exhaustive over all classes of Z_p."""
    checked = 0
    violations = []
    for seq in all_classes(p):
        if len(seq.support()) != 2:
            continue
        checked += 1
        if find_split_move(seq) is None:
            violations.append(
                Violation("two-support-splittable", p, seq.format(), "no split move found")
            )
    return checked, violations
