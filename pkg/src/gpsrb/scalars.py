"""Exact coefficient rings: arbitrary-precision integers, rationals, integers mod m.

Every identity check downstream relies on exact equality here, so there is no
floating-point variant and no silent coercion between rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RingMismatch(TypeError):
    """Raised when scalars from different rings (or moduli) are combined."""


class ZeroDenominator(ZeroDivisionError):
    """Raised when a rational is built with denominator zero."""


class Scalar:
    """Base class for exact ring elements. Immutable."""

    __slots__ = ()

    def is_zero(self) -> bool:
        raise NotImplementedError

    def __sub__(self, other):
        return self + (-other)


def _mismatch(a, b) -> RingMismatch:
    return RingMismatch(f"cannot combine {a!r} with {b!r}")


@dataclass(frozen=True)
class IntScalar(Scalar):
    value: int

    def __add__(self, other):
        if not isinstance(other, IntScalar):
            if not isinstance(other, Scalar):
                return NotImplemented
            raise _mismatch(self, other)
        return IntScalar(self.value + other.value)

    def __mul__(self, other):
        if not isinstance(other, IntScalar):
            if not isinstance(other, Scalar):
                return NotImplemented
            raise _mismatch(self, other)
        return IntScalar(self.value * other.value)

    def __neg__(self):
        return IntScalar(-self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class RatScalar(Scalar):
    value: Fraction  # Fraction keeps gcd(|num|, den) = 1 and den > 0

    def __add__(self, other):
        if not isinstance(other, RatScalar):
            if not isinstance(other, Scalar):
                return NotImplemented
            raise _mismatch(self, other)
        return RatScalar(self.value + other.value)

    def __mul__(self, other):
        if not isinstance(other, RatScalar):
            if not isinstance(other, Scalar):
                return NotImplemented
            raise _mismatch(self, other)
        return RatScalar(self.value * other.value)

    def __neg__(self):
        return RatScalar(-self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class ModScalar(Scalar):
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other):
        if not isinstance(other, ModScalar) or other.modulus != self.modulus:
            raise _mismatch(self, other)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return ModScalar(self.residue + other.residue, self.modulus)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return ModScalar(self.residue * other.residue, self.modulus)

    def __neg__(self):
        return ModScalar(-self.residue, self.modulus)

    def is_zero(self) -> bool:
        return self.residue == 0

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def make_rational(num: int, den: int = 1) -> RatScalar:
    """Normalized rational num/den; the canonical zero is 0/1."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return RatScalar(Fraction(num, den))


class Ring:
    """Descriptor for one of the coefficient rings; makes and parses its elements."""

    def zero(self) -> Scalar:
        return self.from_int(0)

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, n: int) -> Scalar:
        raise NotImplementedError

    def from_ratio(self, num: int, den: int) -> Scalar:
        """num/den as an element of this ring, or ValueError when it has none."""
        raise NotImplementedError

    def contains(self, s: Scalar) -> bool:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(Ring):
    def from_int(self, n: int) -> IntScalar:
        return IntScalar(n)

    def from_ratio(self, num: int, den: int) -> IntScalar:
        if den == 0:
            raise ZeroDenominator(f"{num}/0")
        if num % den != 0:
            raise ValueError(f"{num}/{den} is not an integer")
        return IntScalar(num // den)

    def contains(self, s: Scalar) -> bool:
        return isinstance(s, IntScalar)

    def parse(self, text: str) -> IntScalar:
        return IntScalar(int(text.strip()))

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class RationalRing(Ring):
    def from_int(self, n: int) -> RatScalar:
        return RatScalar(Fraction(n))

    def from_ratio(self, num: int, den: int) -> RatScalar:
        return make_rational(num, den)

    def contains(self, s: Scalar) -> bool:
        return isinstance(s, RatScalar)

    def parse(self, text: str) -> RatScalar:
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return make_rational(int(num), int(den))
        return RatScalar(Fraction(int(text)))

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class ModRing(Ring):
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    def from_int(self, n: int) -> ModScalar:
        return ModScalar(n, self.modulus)

    def from_ratio(self, num: int, den: int) -> ModScalar:
        if den == 0:
            raise ZeroDenominator(f"{num}/0")
        # den must be invertible mod m
        try:
            inv = pow(den, -1, self.modulus)
        except ValueError:
            raise ValueError(f"denominator {den} not invertible mod {self.modulus}") from None
        return ModScalar(num * inv, self.modulus)

    def contains(self, s: Scalar) -> bool:
        return isinstance(s, ModScalar) and s.modulus == self.modulus

    def parse(self, text: str) -> ModScalar:
        parts = text.strip().split()
        if len(parts) == 3 and parts[1] == "mod":
            r, m = int(parts[0]), int(parts[2])
            if m != self.modulus:
                raise RingMismatch(f"expected modulus {self.modulus}, got {m}")
            return ModScalar(r, m)
        if len(parts) == 1:
            return ModScalar(int(parts[0]), self.modulus)
        raise ValueError(f"cannot parse modular scalar from {text!r}")

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(m: int) -> ModRing:
    return ModRing(m)
