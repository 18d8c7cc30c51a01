"""Coefficient-killing projectors on series and the weight -1 defect functional.

A decomposition splits the monoid carrier into a kept part and a killed part;
the induced linear operator zeroes every coefficient whose exponent falls in
the killed part. The central question downstream is when such an operator P
satisfies the weight -1 identity

    P(f) P(g) = P(f P(g)) + P(P(f) g) - P(f g)

for all series f, g. The defect functional rb_defect returns the difference
of the two sides; the identity holds exactly when the defect vanishes
identically, and for these projectors that happens exactly when both the kept
part and the killed part are closed under addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .monoids import FiniteTable, OrderedMonoid
from .outcomes import CheckOutcome, outcome_fail, outcome_on_window, outcome_pass
from .scalars import Ring
from .series import Series, indicator


@dataclass(frozen=True)
class Decomposition:
    """Split of the carrier into kept = {member true} and killed = complement."""

    monoid: OrderedMonoid
    member: Callable[[object], bool]
    label: str = "custom"

    def kept(self, window: Iterable) -> list:
        return [s for s in window if self.member(s)]

    def killed(self, window: Iterable) -> list:
        return [s for s in window if not self.member(s)]

    def complement(self) -> "Decomposition":
        member = self.member
        return Decomposition(self.monoid, lambda s: not member(s), f"not({self.label})")

    @staticmethod
    def from_mask(monoid: FiniteTable, mask: int, label: str | None = None) -> "Decomposition":
        """Kept part of a finite carrier given as a bitmask over element indices."""
        if not isinstance(monoid, FiniteTable):
            raise TypeError("bitmask decompositions need a finite carrier")
        if mask < 0 or mask >> monoid.n:
            raise ValueError(f"mask {mask:#x} out of range for n={monoid.n}")
        if label is None:
            label = f"mask:{mask:#x}"
        return Decomposition(monoid, lambda s: bool(mask >> s & 1), label)


class Projector:
    """Linear operator on series determined by which exponents it keeps."""

    monoid: OrderedMonoid

    def keeps(self, s) -> bool:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError

    def __call__(self, f: Series) -> Series:
        if f.monoid != self.monoid:
            raise TypeError(f"projector on {self.monoid} applied to series over {f.monoid}")
        keeps = self.keeps
        return Series._raw(f.monoid, f.ring, {s: c for s, c in f.items() if keeps(s)})

    def decomposition(self) -> Decomposition:
        return Decomposition(self.monoid, self.keeps, self.label())


@dataclass(frozen=True)
class DecompositionProjector(Projector):
    split: Decomposition

    @property
    def monoid(self) -> OrderedMonoid:
        return self.split.monoid

    def keeps(self, s) -> bool:
        return self.split.member(s)

    def label(self) -> str:
        return self.split.label


@dataclass(frozen=True)
class CutoffProjector(Projector):
    """Keep exponents strictly below the threshold w, kill the rest.

    "Not below w" is evaluated literally as not(s < w); under a partial order
    that is weaker than w <= s, and the two must not be conflated.
    """

    monoid: OrderedMonoid
    w: object

    def __post_init__(self):
        self.monoid.check_elem(self.w)

    def keeps(self, s) -> bool:
        return self.monoid.lt(s, self.w)

    def label(self) -> str:
        return f"below({self.monoid.elem_repr(self.w)})"


@dataclass(frozen=True)
class Complement(Projector):
    """id - P: keeps exactly what the wrapped projector kills."""

    inner: Projector

    @property
    def monoid(self) -> OrderedMonoid:
        return self.inner.monoid

    def keeps(self, s) -> bool:
        return not self.inner.keeps(s)

    def label(self) -> str:
        return f"not({self.inner.label()})"


def rb_defect(P: Projector, f: Series, g: Series) -> Series:
    """P(f)P(g) - P(f P(g)) - P(P(f) g) + P(f g), all four terms computed independently."""
    pf, pg = P(f), P(g)
    return pf * pg - P(f * pg) - P(pf * g) + P(f * g)


def closed_under_addition(monoid: OrderedMonoid, subset: Iterable, window: Iterable) -> CheckOutcome:
    """Is the subset closed under addition, as far as the window can see?

    Closure is only tested where it is observable: a sum landing outside the
    window says nothing. A conclusive pass needs the whole carrier, so only
    finite monoids scanned in full earn a plain "pass"; a violation is
    conclusive anywhere.
    """
    elems = list(window)
    part = set(subset)
    window_set = set(elems)
    desc = f"{len(part)} of {len(elems)} window elements"
    for u in part:
        for v in part:
            s = monoid.add(u, v)
            if s in window_set and s not in part:
                rep = monoid.elem_repr
                return outcome_fail({"u": rep(u), "v": rep(v), "u+v": rep(s)}, desc)
    exhaustive = isinstance(monoid, FiniteTable) and window_set == set(monoid.carrier())
    return outcome_pass(desc) if exhaustive else outcome_on_window(desc)


def is_subsemigroup(split: Decomposition, part: str, window: Iterable) -> CheckOutcome:
    """Closure check for one side of a decomposition; part is "kept" or "killed"."""
    elems = list(window)
    if part == "kept":
        subset = split.kept(elems)
    elif part == "killed":
        subset = split.killed(elems)
    else:
        raise ValueError(f"part must be 'kept' or 'killed', got {part!r}")
    return closed_under_addition(split.monoid, subset, elems)


def indicator_pair_scan(split: Decomposition, window: Iterable, ring: Ring) -> CheckOutcome:
    """Evaluate the defect on every pair of single-term series from the window.

    This is the semantic test of the weight -1 identity. Single-term series
    span everything, and the defect is bilinear, so a clean scan over a full
    finite carrier is conclusive; over a window of an infinite carrier it
    certifies the window only.
    """
    elems = list(window)
    monoid = split.monoid
    P = DecompositionProjector(split)
    desc = f"{len(elems)}^2 single-term pairs"
    for u in elems:
        eu = indicator(monoid, u, ring)
        for v in elems:
            d = rb_defect(P, eu, indicator(monoid, v, ring))
            if not d.is_zero():
                rep = monoid.elem_repr
                return outcome_fail(
                    {"u": rep(u), "v": rep(v), "defect": d.to_json()["terms"]}, desc
                )
    exhaustive = isinstance(monoid, FiniteTable) and set(elems) == set(monoid.carrier())
    return outcome_pass(desc) if exhaustive else outcome_on_window(desc)


def cutoff_violation_pairs(monoid: OrderedMonoid, w, window: Iterable) -> tuple[list, list]:
    """The two obstruction sets for the cutoff-at-w projector, over window pairs.

    Returns (drop_in, escape):
      drop_in = pairs (u, v) with u not< w and v not< w but u + v < w
                (the killed part fails to be closed);
      escape  = pairs (u, v) with u < w and v < w but u + v not< w
                (the kept part fails to be closed).
    Both empty on the window means no indicator pair from the window breaks
    the identity; each listed pair is a conclusive counterexample.
    """
    monoid.check_elem(w)
    elems = list(window)
    lt, add = monoid.lt, monoid.add
    drop_in, escape = [], []
    for u in elems:
        u_below = lt(u, w)
        for v in elems:
            v_below = lt(v, w)
            s_below = lt(add(u, v), w)
            if u_below and v_below:
                if not s_below:
                    escape.append((u, v))
            elif not u_below and not v_below:
                if s_below:
                    drop_in.append((u, v))
    key = monoid.sort_key
    drop_in.sort(key=lambda p: (key(p[0]), key(p[1])))
    escape.sort(key=lambda p: (key(p[0]), key(p[1])))
    return drop_in, escape


def commute_check(P: Projector, Q: Projector, f: Series) -> bool:
    """Does P(Q(f)) equal Q(P(f))? Coefficient-killing projectors always commute."""
    if P.monoid != Q.monoid:
        raise TypeError(f"projectors over {P.monoid} vs {Q.monoid}")
    return P(Q(f)) == Q(P(f))
