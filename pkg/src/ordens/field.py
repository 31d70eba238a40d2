"""Exact arithmetic in Q and in quadratic fields Q(sqrt(d)).

Elements are pairs of rationals x + y*sqrt(d) with d squarefree; Q is the
degenerate case with no sqrt coordinate.  Everything here is exact big-int
rational arithmetic -- no floating point is used anywhere in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class FieldMismatch(ValueError):
    """Operands belong to different fields."""


class ParseError(ValueError):
    """Malformed field or element text."""


class DomainError(ValueError):
    """Input outside an operation's domain (zero element, bad d, ...)."""


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        while n % f == 0:
            n //= f
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q when d is None, else Q(sqrt(d)) for a squarefree integer d."""

    d: int | None = None

    def __post_init__(self) -> None:
        if self.d is not None and (self.d in (0, 1) or not is_squarefree(self.d)):
            raise DomainError(f"need squarefree d outside {{0, 1}}, got {self.d}")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    @property
    def discriminant(self) -> int:
        if self.d is None:
            return 1
        return self.d if self.d % 4 == 1 else 4 * self.d

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt {self.d})"


QQ = FieldSpec()


@dataclass(frozen=True)
class Element:
    """x + y*sqrt(d) with exact rational coordinates, canonical by Fraction."""

    field: FieldSpec
    x: Fraction
    y: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.field.is_rational and self.y != 0:
            raise DomainError("rational elements have no sqrt coordinate")

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def _coerce(self, other: object) -> Element:
        if isinstance(other, Element):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Element(self.field, Fraction(other))
        raise TypeError(f"cannot interpret {other!r} as a field element")

    def __add__(self, other: Element | int | Fraction) -> Element:
        o = self._coerce(other)
        return Element(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other: Element | int | Fraction) -> Element:
        o = self._coerce(other)
        return Element(self.field, self.x - o.x, self.y - o.y)

    def __rsub__(self, other: Element | int | Fraction) -> Element:
        return self._coerce(other) - self

    def __neg__(self) -> Element:
        return Element(self.field, -self.x, -self.y)

    def __mul__(self, other: Element | int | Fraction) -> Element:
        o = self._coerce(other)
        d = self.field.d or 0
        return Element(
            self.field,
            self.x * o.x + self.y * o.y * d,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Element | int | Fraction) -> Element:
        o = self._coerce(other)
        if o.is_zero:
            raise DomainError("division by zero")
        if self.field.is_rational:
            return Element(self.field, self.x / o.x)
        n = o.norm()  # equals o * conjugate(o) in the quadratic case
        num = self * o.conjugate()
        return Element(self.field, num.x / n, num.y / n)

    def __rtruediv__(self, other: Element | int | Fraction) -> Element:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> Element:
        if k < 0:
            return (Element(self.field, 1) / self) ** (-k)
        acc = Element(self.field, 1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate(self) -> Element:
        return Element(self.field, self.x, -self.y)

    def norm(self) -> Fraction:
        # degree-1 convention for Q: norm(x) = x
        if self.field.is_rational:
            return self.x
        return self.x * self.x - self.y * self.y * self.field.d

    def trace(self) -> Fraction:
        # degree-1 convention for Q: trace(x) = x
        if self.field.is_rational:
            return self.x
        return 2 * self.x

    def __str__(self) -> str:
        return format_element(self)


def arith(lhs: Element, rhs: Element, op: str) -> Element:
    """Dispatch one of add/sub/mul/div on two elements of the same field."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise DomainError(f"unknown operation {op!r}")


def pow_int(e: Element, k: int) -> Element:
    """Exact e**k by square-and-multiply, k >= 0."""
    if k < 0:
        raise DomainError("pow_int needs a nonnegative exponent")
    return e ** k


def _int_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_nth_root(q: Fraction | int, k: int) -> tuple[Fraction, ...]:
    """All rational r with r**k == q; empty tuple when none exist.

    Odd k gives at most one root, even k gives the +/- pair.
    """
    if k < 1:
        raise DomainError("root index must be positive")
    q = Fraction(q)
    if q == 0:
        return (Fraction(0),)
    if q < 0 and k % 2 == 0:
        return ()
    num, den = abs(q.numerator), q.denominator
    rn = _int_nth_root(num, k)
    rd = _int_nth_root(den, k)
    if rn ** k != num or rd ** k != den:
        return ()
    r = Fraction(rn, rd)
    if k % 2 == 1:
        return (-r if q < 0 else r,)
    return (r, -r)


def format_element(e: Element) -> str:
    """Canonical text form, reparseable by parse_element."""
    if e.y == 0:
        return str(e.x)
    tail = f"{abs(e.y)}*sqrt({e.field.d})"
    if e.x == 0:
        return tail if e.y > 0 else f"-{tail}"
    sign = "+" if e.y > 0 else "-"
    return f"{e.x}{sign}{tail}"


_FIELD_RE = re.compile(r"\s*Q\s*(?:\(\s*sqrt\s*(-?\d+)\s*\))?\s*\Z")


def parse_field(text: str) -> FieldSpec:
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse field {text!r} (expected Q or Q(sqrt D))")
    if m.group(1) is None:
        return QQ
    return FieldSpec(int(m.group(1)))


_TOKEN_RE = re.compile(r"\s*(\d+|sqrt|zeta3|i|[-+*/^()])")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad character in element at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _ElementParser:
    """element := term ('*' term)* ; term := atom ('^' uint)? ;
    atom := 'i' | 'zeta3' | rat | rat sign rat*sqrt(D) | [sign] rat*sqrt(D)
    """

    def __init__(self, tokens: list[str], field: FieldSpec):
        self.toks = tokens
        self.pos = 0
        self.field = field

    def peek(self, ahead: int = 0) -> str | None:
        i = self.pos + ahead
        return self.toks[i] if i < len(self.toks) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of element text")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> Element:
        e = self.term()
        while self.peek() == "*":
            self.next()
            e = e * self.term()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.toks[self.pos:]!r}")
        return e

    def term(self) -> Element:
        a = self.atom()
        if self.peek() == "^":
            self.next()
            a = a ** self.uint()
        return a

    def uint(self) -> int:
        tok = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected exponent, got {tok!r}")
        return int(tok)

    def atom(self) -> Element:
        tok = self.peek()
        if tok == "i":
            self.next()
            if self.field.d != -1:
                raise ParseError("'i' is only valid over Q(sqrt -1)")
            return Element(self.field, 0, 1)
        if tok == "zeta3":
            self.next()
            if self.field.d != -3:
                raise ParseError("'zeta3' is only valid over Q(sqrt -3)")
            return Element(self.field, Fraction(-1, 2), Fraction(1, 2))
        r1 = self.signed_rat()
        nxt = self.peek()
        if nxt in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
            r2 = self.rat()
            self.sqrt_suffix()
            return Element(self.field, r1, sign * r2)
        if nxt == "*" and self.peek(1) == "sqrt":
            self.sqrt_suffix()
            return Element(self.field, 0, r1)
        return Element(self.field, r1)

    def sqrt_suffix(self) -> None:
        self.expect("*")
        self.expect("sqrt")
        self.expect("(")
        neg = False
        if self.peek() == "-":
            self.next()
            neg = True
        tok = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected integer inside sqrt(...), got {tok!r}")
        d = -int(tok) if neg else int(tok)
        self.expect(")")
        if self.field.is_rational or d != self.field.d:
            raise ParseError(f"sqrt({d}) does not live in {self.field}")

    def signed_rat(self) -> Fraction:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        return sign * self.rat()

    def rat(self) -> Fraction:
        tok = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected number, got {tok!r}")
        num = int(tok)
        if self.peek() == "/":
            self.next()
            den = self.next()
            if not den.isdigit() or int(den) == 0:
                raise ParseError(f"expected positive denominator, got {den!r}")
            return Fraction(num, int(den))
        return Fraction(num)


def parse_element(text: str, field: FieldSpec) -> Element:
    """Parse element text like '2', '-1/2+1/2*sqrt(-3)', '8*zeta3', '2^9'."""
    return _ElementParser(_tokenize(text), field).parse()
