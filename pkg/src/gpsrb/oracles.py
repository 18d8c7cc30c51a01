"""Brute-force verification of the projector criteria on finite search spaces.

Two independent routes decide whether a decomposition projector satisfies the
weight -1 identity: the structural route (are both parts closed under
addition?) and the semantic route (does the defect vanish on every pair of
single-term series?). On a finite monoid both routes are exhaustive, so
enumerating all 2^n decompositions and diffing the two verdicts checks the
equivalence with no blind spot. The cutoff scans do the same comparison on
windows of infinite monoids.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .monoids import FiniteTable, OrderedMonoid
from .outcomes import CheckOutcome, outcome_fail, outcome_on_window, outcome_pass
from .projectors import (
    CutoffProjector,
    Decomposition,
    DecompositionProjector,
    closed_under_addition,
    cutoff_violation_pairs,
    rb_defect,
)
from .scalars import Ring, ZZ
from .series import indicator


class TooLarge(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured limit."""


class NotTotalOrder(ValueError):
    """Raised when a check that needs a total order meets an incomparable pair."""


DEFAULT_MAX_SIZE = 12  # 2^12 decompositions is the largest exhaustive sweep


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one exhaustive decomposition sweep over a finite monoid.

    mismatches is empty exactly when the structural and semantic verdicts
    agreed for every decomposition; rb_masks lists the decompositions (as
    kept-part bitmasks, ascending) whose projector satisfies the identity.
    """

    monoid: str
    size: int
    decompositions_total: int
    rb_count: int
    rb_masks: tuple[int, ...]
    mismatches: tuple[tuple[int, str], ...]
    elapsed: float

    def to_json(self) -> dict[str, Any]:
        return {
            "monoid": self.monoid,
            "size": self.size,
            "decompositions_total": self.decompositions_total,
            "rb_count": self.rb_count,
            "rb_masks": list(self.rb_masks),
            "mismatches": [{"mask": m, "direction": d} for m, d in self.mismatches],
            "elapsed": self.elapsed,
        }


def decomposition_defect_free(split: Decomposition, elems: Sequence, ring: Ring) -> bool:
    """Semantic verdict: defect zero on all single-term pairs from elems.

    Single-term series form a basis and the defect is bilinear in both
    arguments, so over a full finite carrier this decides the identity for
    every pair of series, not just the scanned ones.
    """
    monoid = split.monoid
    P = DecompositionProjector(split)
    for u in elems:
        eu = indicator(monoid, u, ring)
        for v in elems:
            if not rb_defect(P, eu, indicator(monoid, v, ring)).is_zero():
                return False
    return True


def verify_theorem_decomposition(
    monoid: FiniteTable, ring: Ring = ZZ, max_size: int = DEFAULT_MAX_SIZE
) -> TheoremReport:
    """Sweep all 2^n kept-part bitmasks, comparing structural and semantic verdicts.

    The structural verdict holds when both the kept part and the killed part
    are closed under addition (the empty part counts as closed). Any
    decomposition where the two verdicts differ lands in mismatches with the
    direction of the disagreement; an empty mismatch list certifies the
    equivalence for this monoid.
    """
    if not isinstance(monoid, FiniteTable):
        raise TypeError("exhaustive decomposition sweeps need a finite carrier")
    if monoid.n > max_size:
        raise TooLarge(f"n={monoid.n} exceeds the limit {max_size} (2^n decompositions)")
    elems = list(monoid.carrier())
    start = time.perf_counter()
    rb_masks: list[int] = []
    mismatches: list[tuple[int, str]] = []
    for mask in range(1 << monoid.n):
        split = Decomposition.from_mask(monoid, mask)
        structural = bool(closed_under_addition(monoid, split.kept(elems), elems)) and bool(
            closed_under_addition(monoid, split.killed(elems), elems)
        )
        semantic = decomposition_defect_free(split, elems, ring)
        if semantic:
            rb_masks.append(mask)
        if structural != semantic:
            direction = "closed-but-defect" if structural else "defect-free-but-not-closed"
            mismatches.append((mask, direction))
    elapsed = time.perf_counter() - start
    return TheoremReport(
        monoid=str(monoid),
        size=monoid.n,
        decompositions_total=1 << monoid.n,
        rb_count=len(rb_masks),
        rb_masks=tuple(rb_masks),
        mismatches=tuple(mismatches),
        elapsed=elapsed,
    )


def scan_cutoffs(
    monoid: OrderedMonoid, w_set: Iterable, window: Iterable, ring: Ring = ZZ
) -> list[tuple[Any, CheckOutcome]]:
    """Classify each cutoff threshold over the window by its obstruction pairs.

    For every w the obstruction sets are cross-checked pair by pair against
    the defect on single-term series: a pair lands in an obstruction set
    exactly when its defect is nonzero. Disagreement would mean a bug in one
    of the two routes, so it raises immediately rather than returning a
    verdict.
    """
    elems = list(window)
    rep = monoid.elem_repr
    results: list[tuple[Any, CheckOutcome]] = []
    exhaustive = isinstance(monoid, FiniteTable) and set(elems) == set(monoid.carrier())
    for w in w_set:
        drop_in, escape = cutoff_violation_pairs(monoid, w, elems)
        P = CutoffProjector(monoid, w)
        flagged = {(u, v) for u, v in drop_in} | {(u, v) for u, v in escape}
        for u in elems:
            eu = indicator(monoid, u, ring)
            for v in elems:
                nonzero = not rb_defect(P, eu, indicator(monoid, v, ring)).is_zero()
                if nonzero != ((u, v) in flagged):
                    raise AssertionError(
                        f"criteria disagree at w={rep(w)}, pair ({rep(u)}, {rep(v)}): "
                        f"defect {'non' if nonzero else ''}zero but "
                        f"{'' if (u, v) in flagged else 'not '}in an obstruction set"
                    )
        desc = f"w={rep(w)}, {len(elems)} window elements"
        if drop_in or escape:
            witness = {
                "drop_in": [[rep(u), rep(v)] for u, v in drop_in],
                "escape": [[rep(u), rep(v)] for u, v in escape],
            }
            results.append((w, outcome_fail(witness, desc)))
        else:
            results.append((w, outcome_pass(desc) if exhaustive else outcome_on_window(desc)))
    return results


def check_total_order(monoid: OrderedMonoid, elems: Sequence) -> None:
    """Raise NotTotalOrder on the first incomparable pair in elems."""
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            if not (monoid.leq(a, b) or monoid.leq(b, a)):
                rep = monoid.elem_repr
                raise NotTotalOrder(f"incomparable pair {rep(a)}, {rep(b)}")


def verify_total_order_threshold_rule(
    monoid: OrderedMonoid, w_set: Iterable, window: Iterable
) -> CheckOutcome:
    """On a totally ordered monoid, killed-part obstructions vanish iff w >= 0.

    Checks the biconditional (no drop-in pairs on the window) <=> (neutral <= w)
    for each threshold. Each threshold is added to its own scan window so the
    canonical witness pair (w, w) is always visible when w < 0.
    """
    base = list(window)
    ws = list(w_set)
    check_total_order(monoid, sorted(set(base) | set(ws), key=monoid.sort_key))
    zero = monoid.zero()
    rep = monoid.elem_repr
    for w in ws:
        elems = base if w in base else base + [w]
        drop_in, _ = cutoff_violation_pairs(monoid, w, elems)
        empty = not drop_in
        nonneg = monoid.leq(zero, w)
        if empty != nonneg:
            return outcome_fail(
                {
                    "w": rep(w),
                    "drop_in_empty": empty,
                    "w_at_least_neutral": nonneg,
                    "drop_in": [[rep(u), rep(v)] for u, v in drop_in[:5]],
                },
                f"{len(elems)} window elements",
            )
    return outcome_on_window(f"{len(ws)} thresholds over {len(base)} window elements")


def cyclic_table(n: int) -> FiniteTable:
    """Addition mod n on {0..n-1} with the trivial order."""
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteTable.from_lists(n, 0, add, name=f"Z/{n}")


def truncated_addition_table(m: int) -> FiniteTable:
    """Addition capped at m on {0..m} with the trivial order.

    The natural chain order 0 < 1 < ... < m is not strictly compatible here
    (m-1 < m but both reach m after adding 1), so the trivial order is the
    honest choice.
    """
    n = m + 1
    add = [[min(i + j, m) for j in range(n)] for i in range(n)]
    return FiniteTable.from_lists(n, 0, add, name=f"min-cap({m})")


def idempotent_pair_table() -> FiniteTable:
    """Two elements {0, e} with e + e = e; the smallest non-group monoid."""
    return FiniteTable.from_lists(2, 0, [[0, 1], [1, 1]], name="idempotent-pair")


def default_corpus() -> list[FiniteTable]:
    """The finite monoids every exhaustive test sweeps: groups, capped addition, idempotents."""
    tables = [cyclic_table(n) for n in range(1, 7)]
    tables += [truncated_addition_table(m) for m in range(1, 5)]
    tables.append(idempotent_pair_table())
    return tables
