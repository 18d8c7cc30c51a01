"""Laurent series in one variable, truncated, with order-of-validity tracking.

A value stores the coefficients of x^n for ord <= n < trunc, plus an `exact`
flag. Exact values are Laurent polynomials: every coefficient outside the
stored window is zero. Inexact values carry an unknown tail at exponents
>= trunc, and every operation propagates the window on which its result is
still fully determined:

    (f + g).trunc = min(f.trunc, g.trunc)
    (f * g).trunc = min(f.trunc + g.ord, g.trunc + f.ord)

with exact operands dropped from each min. Reading a coefficient in the
unknown tail raises InsufficientPrecision instead of guessing zero.

Projection onto the pole part (keep strictly negative exponents) always
yields an exact value, since the finitely many negative-exponent
coefficients are either stored or provably zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .scalars import Ring, Scalar


class InsufficientPrecision(ArithmeticError):
    """Raised when an operation needs coefficients beyond the known window."""


class TruncatedLaurent:
    """Immutable truncated Laurent series over an exact coefficient ring."""

    __slots__ = ("ring", "ord", "coeffs", "trunc", "exact")

    def __init__(
        self,
        ring: Ring,
        ord: int,
        coeffs: Iterable[Scalar],
        exact: bool = True,
        trunc: int | None = None,
    ):
        cs = list(coeffs)
        for c in cs:
            if not ring.contains(c):
                raise TypeError(f"coefficient {c!r} is not in {ring}")
        if trunc is None:
            trunc = ord + len(cs)
        if trunc != ord + len(cs):
            raise ValueError(f"window [{ord}, {trunc}) does not fit {len(cs)} coefficients")
        # canonical form: no leading zeros; exact values also shed trailing zeros
        while cs and cs[0].is_zero():
            cs.pop(0)
            ord += 1
        if exact:
            while cs and cs[-1].is_zero():
                cs.pop()
            trunc = ord + len(cs)
            if not cs:
                ord = trunc = 0
        elif not cs:
            ord = trunc
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "ord", ord)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedLaurent is immutable")

    def coeff(self, n: int) -> Scalar:
        if n < self.ord:
            return self.ring.zero()
        if n < self.trunc:
            return self.coeffs[n - self.ord]
        if self.exact:
            return self.ring.zero()
        raise InsufficientPrecision(f"coefficient of x^{n} lies beyond O(x^{self.trunc})")

    def is_zero(self) -> bool:
        """True only for the exact zero; an all-zero window with a tail is unknown."""
        return self.exact and not self.coeffs

    def known_zero_on_window(self) -> bool:
        return not self.coeffs

    def items(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield self.ord + i, c

    def _check_peer(self, other: "TruncatedLaurent") -> None:
        if self.ring != other.ring:
            raise TypeError(f"series over {self.ring} vs {other.ring}")

    def __add__(self, other: "TruncatedLaurent") -> "TruncatedLaurent":
        if not isinstance(other, TruncatedLaurent):
            return NotImplemented
        self._check_peer(other)
        exact = self.exact and other.exact
        bounds = [t.trunc for t in (self, other) if not t.exact]
        if exact:
            hi = max(self.trunc, other.trunc)
        else:
            hi = min(bounds)
        lo = min(self.ord, other.ord, hi)
        zero = self.ring.zero()
        cs = []
        for n in range(lo, hi):
            a = self.coeffs[n - self.ord] if self.ord <= n < self.trunc else zero
            b = other.coeffs[n - other.ord] if other.ord <= n < other.trunc else zero
            cs.append(a + b)
        return TruncatedLaurent(self.ring, lo, cs, exact=exact)

    def __neg__(self) -> "TruncatedLaurent":
        return TruncatedLaurent(
            self.ring, self.ord, [-c for c in self.coeffs], exact=self.exact
        )

    def __sub__(self, other: "TruncatedLaurent") -> "TruncatedLaurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, TruncatedLaurent):
            return NotImplemented
        self._check_peer(other)
        if self.is_zero() or other.is_zero():
            return zero_laurent(self.ring)
        exact = self.exact and other.exact
        lo = self.ord + other.ord
        if exact:
            hi = self.trunc + other.trunc - 1
        else:
            bounds = []
            if not self.exact:
                bounds.append(self.trunc + other.ord)
            if not other.exact:
                bounds.append(other.trunc + self.ord)
            hi = min(bounds)
        if hi < lo:
            hi = lo
        zero = self.ring.zero()
        cs = [zero] * (hi - lo)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                n = (self.ord + i) + (other.ord + j)
                if n >= hi:
                    break
                cs[n - lo] = cs[n - lo] + a * b
        return TruncatedLaurent(self.ring, lo, cs, exact=exact)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "TruncatedLaurent":
        if not self.ring.contains(c):
            raise TypeError(f"scalar {c!r} is not in {self.ring}")
        return TruncatedLaurent(
            self.ring, self.ord, [c * a for a in self.coeffs], exact=self.exact, trunc=self.trunc
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedLaurent):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.ord == other.ord
            and self.coeffs == other.coeffs
            and self.trunc == other.trunc
            and self.exact == other.exact
        )

    def __hash__(self):
        return hash((self.ring, self.ord, self.coeffs, self.trunc, self.exact))

    def __str__(self) -> str:
        parts = []
        for n, c in self.items():
            cs = str(c)
            if n == 0:
                parts.append(cs)
            else:
                head = "" if cs == "1" else ("-" if cs == "-1" else f"{cs}*")
                parts.append(f"{head}x^{n}" if n != 1 else f"{head}x")
        body = " + ".join(parts) if parts else ("0" if self.exact else "")
        if not self.exact:
            tail = f"O(x^{self.trunc})"
            return f"{body} + {tail}" if body else tail
        return body

    def __repr__(self) -> str:
        return f"TruncatedLaurent({self.ring}, {self!s})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "ord": self.ord,
            "coeffs": [str(c) for c in self.coeffs],
            "trunc": self.trunc,
            "exact": self.exact,
        }


def zero_laurent(ring: Ring) -> TruncatedLaurent:
    return TruncatedLaurent(ring, 0, [], exact=True)


def make_laurent(
    ring: Ring, terms: Mapping[int, Scalar] | Iterable, trunc: int | None = None
) -> TruncatedLaurent:
    """Build from {exponent: coefficient}; trunc=None means exact, else tail O(x^trunc)."""
    items = dict(terms.items() if isinstance(terms, Mapping) else terms)
    if not items:
        if trunc is None:
            return zero_laurent(ring)
        return TruncatedLaurent(ring, trunc, [], exact=False)
    lo = min(items)
    hi = max(items) + 1
    if trunc is not None:
        if any(n >= trunc for n in items):
            raise ValueError(f"term at exponent >= trunc {trunc}")
        hi = trunc
    zero = ring.zero()
    cs = [items.get(n, zero) for n in range(lo, hi)]
    return TruncatedLaurent(ring, lo, cs, exact=trunc is None)


def pole_part(f: TruncatedLaurent) -> TruncatedLaurent:
    """Projection keeping the strictly negative exponents; the result is exact.

    Demands that every negative-exponent coefficient be known, so an inexact
    input must satisfy trunc >= 0.
    """
    if not f.exact and f.trunc < 0:
        raise InsufficientPrecision(
            f"pole part needs all coefficients below x^0, input is only known to O(x^{f.trunc})"
        )
    cut = min(0, f.trunc) - f.ord
    return TruncatedLaurent(f.ring, f.ord, f.coeffs[:max(cut, 0)], exact=True)


def nonneg_part(f: TruncatedLaurent) -> TruncatedLaurent:
    """Complementary projection keeping exponents >= 0; exactness follows the input."""
    p = pole_part(f)
    return f - p


def tl_rb_defect(f: TruncatedLaurent, g: TruncatedLaurent) -> TruncatedLaurent:
    """P(f)P(g) - P(f P(g)) - P(P(f) g) + P(f g) for the pole-part projection P.

    The four terms are computed independently; each application of P yields an
    exact value, so the returned defect is exact whenever no term raises
    InsufficientPrecision.
    """
    pf, pg = pole_part(f), pole_part(g)
    t1 = pf * pg
    t2 = pole_part(f * pg)
    t3 = pole_part(pf * g)
    t4 = pole_part(f * g)
    return t1 - t2 - t3 + t4


def to_series(f: TruncatedLaurent, monoid, ring: Ring | None = None):
    """Reinterpret an exact value as a finitely supported series over the integers."""
    from .series import Series

    if not f.exact:
        raise InsufficientPrecision("only exact values embed as finitely supported series")
    if ring is None:
        ring = f.ring
    return Series(monoid, ring, {n: c for n, c in f.items()})
