"""Expression grammar for series entered on the command line, plus renderers.

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := scalar | VAR '^' exponent | VAR | '(' expr ')'
              | 'O' '(' VAR '^' signed ')'
    scalar   := INT ('/' INT)?
    exponent := signed | '(' signed (',' signed)* ')'
    signed   := ['-'] INT

The variable name defaults to "e" and is configurable; "O" is reserved for
the unknown-tail marker, which is only meaningful in Laurent mode. The same
AST evaluates either to a finitely supported series over any monoid or, in
Laurent mode, to a truncated Laurent series where the tail marker sets the
order of validity. Coefficients left unstated inside the valid window are
zero.

Renderers produce strings this grammar parses back to an equal value
(modular coefficients print as their canonical residue).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .laurent import TruncatedLaurent, make_laurent, zero_laurent
from .monoids import BadElement, OrderedMonoid, VectorLex, VectorProduct
from .scalars import Ring, Scalar, ZeroDenominator
from .series import Series, indicator, zero_series


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", or the symbol itself
    text: str
    line: int
    col: int


_SYMBOLS = set("+-*/^(),")


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, line, start_col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


# AST nodes; every node keeps the position it started at for later errors.


@dataclass(frozen=True)
class Lit:
    num: int
    den: int
    line: int
    col: int


@dataclass(frozen=True)
class Pow:
    # exponent payload: ("int", k) or ("vec", (k1, ..., kd))
    payload: tuple
    line: int
    col: int


@dataclass(frozen=True)
class Neg:
    inner: "Node"
    line: int
    col: int


@dataclass(frozen=True)
class Sum:
    parts: tuple
    line: int
    col: int


@dataclass(frozen=True)
class Product:
    factors: tuple
    line: int
    col: int


@dataclass(frozen=True)
class TruncMarker:
    exponent: int
    line: int
    col: int


Node = Union[Lit, Pow, Neg, Sum, Product, TruncMarker]


class _Parser:
    def __init__(self, tokens: list[Token], var: str):
        if var == "O":
            raise ValueError('variable name "O" collides with the tail marker')
        self.tokens = tokens
        self.var = var
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("", "", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.col + len(last.text))
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
        return node

    def expr(self) -> Node:
        first = self.peek()
        parts = []
        sign = "+"
        if first is not None and first.kind in "+-":
            sign = self.next().kind
        node = self.term()
        parts.append(Neg(node, node.line, node.col) if sign == "-" else node)
        while (tok := self.peek()) is not None and tok.kind in "+-":
            op = self.next()
            node = self.term()
            parts.append(Neg(node, op.line, op.col) if op.kind == "-" else node)
        if len(parts) == 1:
            return parts[0]
        return Sum(tuple(parts), parts[0].line, parts[0].col)

    def term(self) -> Node:
        factors = [self.factor()]
        while (tok := self.peek()) is not None and tok.kind == "*":
            self.next()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), factors[0].line, factors[0].col)

    def factor(self) -> Node:
        tok = self.next()
        if tok.kind == "int":
            num = int(tok.text)
            den = 1
            nxt = self.peek()
            if nxt is not None and nxt.kind == "/":
                self.next()
                den = int(self.expect("int").text)
            return Lit(num, den, tok.line, tok.col)
        if tok.kind == "name":
            if tok.text == "O":
                self.expect("(")
                var_tok = self.expect("name")
                if var_tok.text != self.var:
                    raise ParseError(
                        f"unknown variable {var_tok.text!r} (expected {self.var!r})",
                        var_tok.line,
                        var_tok.col,
                    )
                self.expect("^")
                n = self.signed_int()
                self.expect(")")
                return TruncMarker(n, tok.line, tok.col)
            if tok.text != self.var:
                raise ParseError(
                    f"unknown variable {tok.text!r} (expected {self.var!r})", tok.line, tok.col
                )
            nxt = self.peek()
            if nxt is not None and nxt.kind == "^":
                self.next()
                payload = self.exponent()
            else:
                payload = ("int", 1)
            return Pow(payload, tok.line, tok.col)
        if tok.kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)

    def signed_int(self) -> int:
        tok = self.peek()
        neg = False
        if tok is not None and tok.kind == "-":
            self.next()
            neg = True
        val = int(self.expect("int").text)
        return -val if neg else val

    def exponent(self) -> tuple:
        tok = self.peek()
        if tok is not None and tok.kind == "(":
            self.next()
            coords = [self.signed_int()]
            while (nxt := self.peek()) is not None and nxt.kind == ",":
                self.next()
                coords.append(self.signed_int())
            self.expect(")")
            return ("vec", tuple(coords))
        return ("int", self.signed_int())


def parse_expr(text: str, var: str = "e") -> Node:
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 1, 1)
    return _Parser(tokens, var).parse()


def _payload_to_elem(monoid: OrderedMonoid, node: Pow):
    kind, value = node.payload
    vector = isinstance(monoid, (VectorProduct, VectorLex))
    if kind == "vec":
        if not vector:
            raise ParseError(
                f"tuple exponent needs a vector monoid, not {monoid}", node.line, node.col
            )
        if len(value) != monoid.dim:
            raise ParseError(
                f"exponent has {len(value)} coordinates, {monoid} needs {monoid.dim}",
                node.line,
                node.col,
            )
        return value
    if vector:
        if monoid.dim != 1:
            raise ParseError(
                f"scalar exponent for {monoid}; write a {monoid.dim}-tuple", node.line, node.col
            )
        return (value,)
    try:
        monoid.check_elem(value)
    except BadElement as exc:
        raise ParseError(str(exc), node.line, node.col) from None
    return value


def eval_series(node: Node, monoid: OrderedMonoid, ring: Ring) -> Series:
    if isinstance(node, Lit):
        try:
            c = ring.from_ratio(node.num, node.den)
        except (ValueError, ZeroDenominator) as exc:
            raise ParseError(str(exc), node.line, node.col) from None
        return Series(monoid, ring, {monoid.zero(): c}) if not c.is_zero() else zero_series(monoid, ring)
    if isinstance(node, Pow):
        return indicator(monoid, _payload_to_elem(monoid, node), ring)
    if isinstance(node, Neg):
        return -eval_series(node.inner, monoid, ring)
    if isinstance(node, Sum):
        acc = eval_series(node.parts[0], monoid, ring)
        for part in node.parts[1:]:
            acc = acc + eval_series(part, monoid, ring)
        return acc
    if isinstance(node, Product):
        acc = eval_series(node.factors[0], monoid, ring)
        for factor in node.factors[1:]:
            acc = acc * eval_series(factor, monoid, ring)
        return acc
    if isinstance(node, TruncMarker):
        raise ParseError("O(...) tail marker is only valid in Laurent mode", node.line, node.col)
    raise TypeError(f"unknown node {node!r}")


def eval_laurent(node: Node, ring: Ring) -> TruncatedLaurent:
    if isinstance(node, Lit):
        try:
            c = ring.from_ratio(node.num, node.den)
        except (ValueError, ZeroDenominator) as exc:
            raise ParseError(str(exc), node.line, node.col) from None
        return make_laurent(ring, {0: c})
    if isinstance(node, Pow):
        kind, value = node.payload
        if kind != "int":
            raise ParseError("Laurent mode uses integer exponents", node.line, node.col)
        return make_laurent(ring, {value: ring.one()})
    if isinstance(node, Neg):
        return -eval_laurent(node.inner, ring)
    if isinstance(node, Sum):
        acc = eval_laurent(node.parts[0], ring)
        for part in node.parts[1:]:
            acc = acc + eval_laurent(part, ring)
        return acc
    if isinstance(node, Product):
        acc = eval_laurent(node.factors[0], ring)
        for factor in node.factors[1:]:
            acc = acc * eval_laurent(factor, ring)
        return acc
    if isinstance(node, TruncMarker):
        return TruncatedLaurent(ring, node.exponent, [], exact=False)
    raise TypeError(f"unknown node {node!r}")


def parse_series(
    text: str, monoid: OrderedMonoid, ring: Ring, var: str = "e", laurent: bool = False
):
    """Parse and evaluate; Series normally, TruncatedLaurent in Laurent mode."""
    node = parse_expr(text, var)
    if laurent:
        return eval_laurent(node, ring)
    return eval_series(node, monoid, ring)


def _coeff_str(c: Scalar) -> str:
    # modular residues render bare so the output stays inside the grammar
    from .scalars import ModScalar

    if isinstance(c, ModScalar):
        return str(c.residue)
    return str(c)


def _exp_str(monoid: OrderedMonoid, s, var: str) -> str | None:
    """Exponent suffix for one term, or None when s is the neutral element."""
    if s == monoid.zero():
        return None
    if isinstance(monoid, (VectorProduct, VectorLex)):
        return f"{var}^({','.join(str(c) for c in s)})"
    return f"{var}^{s}"


def _join_terms(parts: list[tuple[str, str]]) -> str:
    """parts: (sign, magnitude) pairs; first sign '-' attaches without spaces."""
    if not parts:
        return "0"
    sign, mag = parts[0]
    out = mag if sign == "+" else f"-{mag}"
    for sign, mag in parts[1:]:
        out += f" {sign} {mag}"
    return out


def _term_parts(coeff: Scalar, exp_suffix: str | None) -> tuple[str, str]:
    cs = _coeff_str(coeff)
    sign = "+"
    if cs.startswith("-"):
        sign = "-"
        cs = cs[1:]
    if exp_suffix is None:
        return sign, cs
    if cs == "1":
        return sign, exp_suffix
    return sign, f"{cs}*{exp_suffix}"


def render_series(f: Series, var: str = "e") -> str:
    parts = []
    for s in f.support():
        parts.append(_term_parts(f.coeff(s), _exp_str(f.monoid, s, var)))
    return _join_terms(parts)


def render_laurent(f: TruncatedLaurent, var: str = "e") -> str:
    parts = []
    for n, c in f.items():
        parts.append(_term_parts(c, None if n == 0 else f"{var}^{n}"))
    if f.exact:
        return _join_terms(parts)
    tail = f"O({var}^{f.trunc})"
    if not parts:
        return tail
    return f"{_join_terms(parts)} + {tail}"
