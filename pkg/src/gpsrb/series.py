"""Finitely supported series over an ordered monoid with exact coefficients.

A series is a map from monoid elements to nonzero scalars; addition is
pointwise and multiplication is convolution,

    (f * g)(s) = sum of f(u) * g(v) over all u + v = s.

Finite supports keep every convolution sum finite without any condition on
the monoid order, so the full ring structure is available even when the
order is only partial.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .monoids import MonoidMismatch, OrderedMonoid
from .scalars import Ring, Scalar


class Series:
    """Immutable finitely supported series; zero coefficients are never stored."""

    __slots__ = ("monoid", "ring", "_terms")

    def __init__(self, monoid: OrderedMonoid, ring: Ring, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for s, c in items:
            monoid.check_elem(s)
            if not ring.contains(c):
                raise TypeError(f"coefficient {c!r} is not in {ring}")
            if s in acc:
                c = acc[s] + c
            if c.is_zero():
                acc.pop(s, None)
            else:
                acc[s] = c
        object.__setattr__(self, "monoid", monoid)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @staticmethod
    def _raw(monoid: OrderedMonoid, ring: Ring, terms: dict) -> "Series":
        """Trusted constructor: terms already checked and zero-free."""
        out = object.__new__(Series)
        object.__setattr__(out, "monoid", monoid)
        object.__setattr__(out, "ring", ring)
        object.__setattr__(out, "_terms", terms)
        return out

    def coeff(self, s) -> Scalar:
        self.monoid.check_elem(s)
        return self._terms.get(s, self.ring.zero())

    def support(self) -> list:
        return sorted(self._terms, key=self.monoid.sort_key)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def _check_peer(self, other: "Series") -> None:
        if self.monoid != other.monoid:
            raise MonoidMismatch(f"series over {self.monoid} vs {other.monoid}")
        if self.ring != other.ring:
            raise TypeError(f"series over {self.ring} vs {other.ring}")

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_peer(other)
        acc = dict(self._terms)
        for s, c in other._terms.items():
            if s in acc:
                c = acc[s] + c
                if c.is_zero():
                    del acc[s]
                    continue
            acc[s] = c
        return Series._raw(self.monoid, self.ring, acc)

    def __neg__(self) -> "Series":
        return Series._raw(self.monoid, self.ring, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check_peer(other)
        add = self.monoid.add
        acc: dict = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                s = add(u, v)
                p = cu * cv
                if s in acc:
                    p = acc[s] + p
                if p.is_zero():
                    acc.pop(s, None)
                else:
                    acc[s] = p
        return Series._raw(self.monoid, self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "Series":
        if not self.ring.contains(c):
            raise TypeError(f"scalar {c!r} is not in {self.ring}")
        acc = {}
        for s, v in self._terms.items():
            p = c * v
            if not p.is_zero():
                acc[s] = p
        return Series._raw(self.monoid, self.ring, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.monoid == other.monoid
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.monoid, self.ring, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rep = self.monoid.elem_repr
        parts = [f"{c} @ {rep(s)}" for s, c in sorted(self._terms.items(), key=lambda kv: self.monoid.sort_key(kv[0]))]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Series({self.monoid}, {self.ring}, {self!s})"

    def to_json(self) -> dict:
        rep = self.monoid.elem_repr
        return {
            "monoid": str(self.monoid),
            "ring": str(self.ring),
            "terms": [
                {"exp": rep(s), "coeff": str(c)}
                for s, c in sorted(self._terms.items(), key=lambda kv: self.monoid.sort_key(kv[0]))
            ],
        }


def zero_series(monoid: OrderedMonoid, ring: Ring) -> Series:
    return Series._raw(monoid, ring, {})


def one_series(monoid: OrderedMonoid, ring: Ring) -> Series:
    return indicator(monoid, monoid.zero(), ring)


def indicator(monoid: OrderedMonoid, w, ring: Ring) -> Series:
    """The series with coefficient 1 at w and 0 elsewhere."""
    monoid.check_elem(w)
    return Series._raw(monoid, ring, {w: ring.one()})


def series_eq(f: Series, g: Series) -> bool:
    """Exact equality; raises on mismatched monoids rather than returning False."""
    f._check_peer(g)
    return f._terms == g._terms
