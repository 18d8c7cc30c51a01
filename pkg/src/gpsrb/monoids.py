"""Commutative monoids carrying a strictly compatible partial order.

Strict compatibility is the axiom everything downstream leans on:
s < s' implies s + t < s' + t for every t. Built-in carriers are the
integers, the naturals, and integer vectors under the product or
lexicographic order; arbitrary finite carriers load from JSON tables.

Elements are plain hashable Python values (int for the lines, tuple of int
for vectors, int index for tables). Each monoid supplies a sort_key so
supports can be printed in a stable order even when the monoid order is
partial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iter_product
from typing import Any, Callable, Iterable, Sequence

from .outcomes import CheckOutcome, outcome_fail, outcome_on_window, outcome_pass


class BadElement(ValueError):
    """Raised when a value is not an element of the monoid it is used with."""


class BadTable(ValueError):
    """Raised when a finite-monoid table file is malformed or inconsistent."""


class MonoidMismatch(TypeError):
    """Raised when elements or series over different monoids are combined."""


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class OrderedMonoid:
    """Commutative monoid with a strict partial order; subclasses fill in the ops."""

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def check_elem(self, x) -> None:
        """Raise BadElement unless x belongs to the carrier."""
        raise NotImplementedError

    def sort_key(self, x):
        """Total key for display ordering; need not refine the monoid order."""
        raise NotImplementedError

    def elem_repr(self, x) -> str:
        return repr(x)

    def parse_elem(self, text: str):
        raise NotImplementedError


@dataclass(frozen=True)
class IntLine(OrderedMonoid):
    """(Z, +) with the usual total order."""

    def zero(self) -> int:
        return 0

    def add(self, a: int, b: int) -> int:
        return a + b

    def leq(self, a: int, b: int) -> bool:
        return a <= b

    def lt(self, a: int, b: int) -> bool:
        return a < b

    def check_elem(self, x) -> None:
        if not _is_int(x):
            raise BadElement(f"not an integer: {x!r}")

    def sort_key(self, x: int) -> int:
        return x

    def elem_repr(self, x: int) -> str:
        return str(x)

    def parse_elem(self, text: str) -> int:
        try:
            return int(text.strip())
        except ValueError:
            raise BadElement(f"not an integer: {text!r}") from None

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class NatLine(OrderedMonoid):
    """(N, +) with the usual total order; 0 included."""

    def zero(self) -> int:
        return 0

    def add(self, a: int, b: int) -> int:
        return a + b

    def leq(self, a: int, b: int) -> bool:
        return a <= b

    def lt(self, a: int, b: int) -> bool:
        return a < b

    def check_elem(self, x) -> None:
        if not _is_int(x) or x < 0:
            raise BadElement(f"not a natural number: {x!r}")

    def sort_key(self, x: int) -> int:
        return x

    def elem_repr(self, x: int) -> str:
        return str(x)

    def parse_elem(self, text: str) -> int:
        try:
            n = int(text.strip())
        except ValueError:
            raise BadElement(f"not a natural number: {text!r}") from None
        if n < 0:
            raise BadElement(f"not a natural number: {n}")
        return n

    def __str__(self) -> str:
        return "N"


def _parse_vector(text: str, dim: int) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    parts = [p.strip() for p in t.split(",")]
    if len(parts) != dim:
        raise BadElement(f"expected {dim} coordinates, got {len(parts)}: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise BadElement(f"not an integer vector: {text!r}") from None


@dataclass(frozen=True)
class VectorProduct(OrderedMonoid):
    """(Z^d, +) under the product (componentwise) order. Partial for d >= 2."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def leq(self, a, b) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def check_elem(self, x) -> None:
        if not (isinstance(x, tuple) and len(x) == self.dim and all(_is_int(c) for c in x)):
            raise BadElement(f"not a Z^{self.dim} vector: {x!r}")

    def sort_key(self, x):
        return x

    def elem_repr(self, x) -> str:
        return "(" + ",".join(str(c) for c in x) + ")"

    def parse_elem(self, text: str):
        return _parse_vector(text, self.dim)

    def __str__(self) -> str:
        return f"Z^{self.dim}:product"


@dataclass(frozen=True)
class VectorLex(OrderedMonoid):
    """(Z^d, +) under lexicographic order; total for every d."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def leq(self, a, b) -> bool:
        return a <= b  # tuple comparison is lexicographic

    def lt(self, a, b) -> bool:
        return a < b

    def check_elem(self, x) -> None:
        if not (isinstance(x, tuple) and len(x) == self.dim and all(_is_int(c) for c in x)):
            raise BadElement(f"not a Z^{self.dim} vector: {x!r}")

    def sort_key(self, x):
        return x

    def elem_repr(self, x) -> str:
        return "(" + ",".join(str(c) for c in x) + ")"

    def parse_elem(self, text: str):
        return _parse_vector(text, self.dim)

    def __str__(self) -> str:
        return f"Z^{self.dim}:lex"


@dataclass(frozen=True)
class FiniteTable(OrderedMonoid):
    """Finite commutative monoid given by an addition table and an order matrix.

    Elements are indices 0..n-1. leq[i][j] is the order relation; the default
    (identity matrix) is the trivial order, which is strictly compatible for
    free. Construction validates shape only; validate_monoid checks the axioms.
    """

    n: int
    neutral: int
    add_table: tuple[tuple[int, ...], ...]
    leq_table: tuple[tuple[bool, ...], ...]
    name: str = "table"

    @staticmethod
    def from_lists(
        n: int,
        neutral: int,
        add: Sequence[Sequence[int]],
        leq: Sequence[Sequence[bool]] | None = None,
        name: str = "table",
    ) -> "FiniteTable":
        if not (_is_int(n) and n >= 1):
            raise BadTable(f"n must be a positive integer, got {n!r}")
        if not (_is_int(neutral) and 0 <= neutral < n):
            raise BadTable(f"neutral index {neutral!r} out of range for n={n}")
        if len(add) != n or any(len(row) != n for row in add):
            raise BadTable(f"add table must be {n}x{n}")
        for i, row in enumerate(add):
            for j, v in enumerate(row):
                if not (_is_int(v) and 0 <= v < n):
                    raise BadTable(f"add[{i}][{j}] = {v!r} out of range")
        if leq is None:
            leq = [[i == j for j in range(n)] for i in range(n)]
        if len(leq) != n or any(len(row) != n for row in leq):
            raise BadTable(f"leq table must be {n}x{n}")
        for i, row in enumerate(leq):
            for j, v in enumerate(row):
                if not isinstance(v, bool):
                    raise BadTable(f"leq[{i}][{j}] = {v!r} is not a bool")
        return FiniteTable(
            n=n,
            neutral=neutral,
            add_table=tuple(tuple(row) for row in add),
            leq_table=tuple(tuple(row) for row in leq),
            name=name,
        )

    def carrier(self) -> range:
        return range(self.n)

    def zero(self) -> int:
        return self.neutral

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.leq_table[a][b]

    def check_elem(self, x) -> None:
        if not (_is_int(x) and 0 <= x < self.n):
            raise BadElement(f"not an index in 0..{self.n - 1}: {x!r}")

    def sort_key(self, x: int) -> int:
        return x

    def elem_repr(self, x: int) -> str:
        return str(x)

    def parse_elem(self, text: str) -> int:
        try:
            k = int(text.strip())
        except ValueError:
            raise BadElement(f"not an element index: {text!r}") from None
        self.check_elem(k)
        return k

    def __str__(self) -> str:
        return f"{self.name}(n={self.n})"


def load_table(path: str, validate: bool = True) -> FiniteTable:
    """Load a finite monoid from JSON; by default reject tables failing the axioms.

    Expected keys: "n", "neutral", "add" (n x n ints), optional "leq"
    (n x n bools, default identity), optional "name".
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadTable(f"cannot read table file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise BadTable(f"table file {path} must hold a JSON object")
    for key in ("n", "neutral", "add"):
        if key not in data:
            raise BadTable(f"table file {path} is missing {key!r}")
    table = FiniteTable.from_lists(
        n=data["n"],
        neutral=data["neutral"],
        add=data["add"],
        leq=data.get("leq"),
        name=data.get("name", path),
    )
    if validate:
        outcome = validate_monoid(table)
        if not outcome:
            raise BadTable(f"table file {path} fails monoid axioms: {outcome.witness}")
    return table


def int_window(lo: int, hi: int) -> list[int]:
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    return list(range(lo, hi + 1))


def vector_window(lo: int, hi: int, dim: int) -> list[tuple[int, ...]]:
    return [tuple(v) for v in iter_product(range(lo, hi + 1), repeat=dim)]


def default_window(monoid: OrderedMonoid, radius: int = 3) -> list:
    """A small symmetric box of elements, trimmed to the carrier."""
    if isinstance(monoid, FiniteTable):
        return list(monoid.carrier())
    if isinstance(monoid, NatLine):
        return int_window(0, 2 * radius)
    if isinstance(monoid, IntLine):
        return int_window(-radius, radius)
    if isinstance(monoid, (VectorProduct, VectorLex)):
        return vector_window(-radius, radius, monoid.dim)
    raise TypeError(f"no default window for {monoid!r}")


def validate_monoid(
    monoid: OrderedMonoid, window: Iterable | None = None
) -> CheckOutcome:
    """Check the monoid axioms and strict order compatibility.

    Exhaustive (hence conclusive either way) for FiniteTable; for infinite
    carriers the check runs over the given window and a clean result only
    certifies that window.
    """
    if window is None:
        window = default_window(monoid)
    elems = list(window)
    for x in elems:
        monoid.check_elem(x)
    exhaustive = isinstance(monoid, FiniteTable) and set(elems) == set(monoid.carrier())
    desc = f"{len(elems)} elements" + (" (entire carrier)" if exhaustive else "")

    z = monoid.zero()
    rep = monoid.elem_repr

    for a in elems:
        if monoid.add(a, z) != a or monoid.add(z, a) != a:
            return outcome_fail({"axiom": "neutral", "a": rep(a)}, desc)
        if not monoid.leq(a, a):
            return outcome_fail({"axiom": "reflexive", "a": rep(a)}, desc)
    for a in elems:
        for b in elems:
            if monoid.add(a, b) != monoid.add(b, a):
                return outcome_fail({"axiom": "commutative", "a": rep(a), "b": rep(b)}, desc)
            if a != b and monoid.leq(a, b) and monoid.leq(b, a):
                return outcome_fail({"axiom": "antisymmetric", "a": rep(a), "b": rep(b)}, desc)
    for a in elems:
        for b in elems:
            ab = monoid.add(a, b)
            for c in elems:
                if monoid.add(ab, c) != monoid.add(a, monoid.add(b, c)):
                    return outcome_fail(
                        {"axiom": "associative", "a": rep(a), "b": rep(b), "c": rep(c)}, desc
                    )
                if monoid.leq(a, b) and monoid.leq(b, c) and not monoid.leq(a, c):
                    return outcome_fail(
                        {"axiom": "transitive", "a": rep(a), "b": rep(b), "c": rep(c)}, desc
                    )
    # strict compatibility: s < s'  =>  s + t < s' + t
    for s in elems:
        for s2 in elems:
            if not monoid.lt(s, s2):
                continue
            for t in elems:
                if not monoid.lt(monoid.add(s, t), monoid.add(s2, t)):
                    return outcome_fail(
                        {"axiom": "strict-compatibility", "s": rep(s), "s'": rep(s2), "t": rep(t)},
                        desc,
                    )
    return outcome_pass(desc) if exhaustive else outcome_on_window(desc)
