"""Exact normal-form arithmetic in the first Weyl algebra.

The algebra is generated over the rationals by ``t`` and ``d`` subject to
the single relation ``d*t - t*d = 1``.  Every element has a unique normal
form as a finite rational combination of monomials ``t^i * d^j`` (all
``t`` factors moved to the left).  Elements are immutable; scalars are
exact :class:`fractions.Fraction` values throughout, so equality of
elements is decidable and every computation downstream of this module is
exact.

``parse_weyl`` and ``print_weyl`` convert between elements and a small
expression language (atoms ``t``, ``d``, integers and integer ratios,
operators ``+ - * ^``, parentheses).  ``print_weyl`` emits a canonical
form that ``parse_weyl`` maps back to the same element.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

Monomial = Tuple[int, int]

__all__ = [
    "WeylElement",
    "WeylSyntaxError",
    "add",
    "bernstein_degree",
    "nf_mul",
    "parse_weyl",
    "print_weyl",
    "scale",
]


def _mono_mul(i: int, j: int, k: int, l: int) -> dict[Monomial, int]:
    # (t^i d^j)(t^k d^l) = sum_m  C(j,m) * k!/(k-m)! * t^(i+k-m) d^(j+l-m)
    # from moving each of the j d's across the k t's.
    out: dict[Monomial, int] = {}
    for m in range(min(j, k) + 1):
        out[(i + k - m, j + l - m)] = math.comb(j, m) * math.perm(k, m)
    return out


class WeylElement:
    """An element of the first Weyl algebra in normal form.

    Internally a map from exponent pairs ``(i, j)`` (for ``t^i d^j``) to
    nonzero ``Fraction`` coefficients.  Use the ``t``, ``d``, ``one``,
    ``constant`` and ``monomial`` constructors or ``parse_weyl`` rather
    than building the dict by hand.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial {(i, j)}")
                c = Fraction(c)
                if c:
                    clean[(i, j)] = c
        self._terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "WeylElement":
        return cls()

    @classmethod
    def one(cls) -> "WeylElement":
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def t(cls) -> "WeylElement":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def d(cls) -> "WeylElement":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def constant(cls, c: int | Fraction) -> "WeylElement":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c: int | Fraction = 1) -> "WeylElement":
        return cls({(i, j): Fraction(c)})

    # -- inspection --------------------------------------------------

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted by (total degree, d-degree), ascending."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def degree(self) -> int | None:
        """Total degree (max of i+j); None for the zero element."""
        if not self._terms:
            return None
        return max(i + j for i, j in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.items())

    # -- arithmetic --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "WeylElement | None":
        if isinstance(other, WeylElement):
            return other
        if isinstance(other, (int, Fraction)):
            return WeylElement.constant(other)
        return None

    def __add__(self, other) -> "WeylElement":
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, c in w._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return WeylElement(terms)

    __radd__ = __add__

    def __sub__(self, other) -> "WeylElement":
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self + (-w)

    def __rsub__(self, other) -> "WeylElement":
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return w + (-self)

    def __neg__(self) -> "WeylElement":
        return WeylElement({key: -c for key, c in self._terms.items()})

    def __mul__(self, other) -> "WeylElement":
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for (i, j), a in self._terms.items():
            for (k, l), b in w._terms.items():
                ab = a * b
                for key, n in _mono_mul(i, j, k, l).items():
                    terms[key] = terms.get(key, Fraction(0)) + ab * n
        return WeylElement(terms)

    def __rmul__(self, other) -> "WeylElement":
        # Only scalars reach here, and scalars commute with everything.
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self * w

    def __pow__(self, n: int) -> "WeylElement":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = WeylElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------

    def __eq__(self, other) -> bool:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self._terms == w._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return print_weyl(self)

    def __repr__(self) -> str:
        return f"WeylElement({print_weyl(self)!r})"


# -- named operations --------------------------------------------------


def nf_mul(p: WeylElement, q: WeylElement) -> WeylElement:
    """Product of two elements, in normal form."""
    return p * q


def add(p: WeylElement, q: WeylElement) -> WeylElement:
    return p + q


def scale(c: int | Fraction, p: WeylElement) -> WeylElement:
    return p * Fraction(c)


def bernstein_degree(p: WeylElement) -> int | None:
    """Total degree of the normal form; None for the zero element."""
    return p.degree()


# -- printing ---------------------------------------------------------


def _pow_str(sym: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{e}"


def print_weyl(w: WeylElement) -> str:
    """Canonical string form: terms by descending total degree, then
    ascending d-degree; ``t`` factors before ``d``; explicit ``*``."""
    if w.is_zero():
        return "0"
    ordered = sorted(w._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0][1]))
    parts: list[str] = []
    for (i, j), c in ordered:
        mono = "*".join(p for p in (_pow_str("t", i), _pow_str("d", j)) if p)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# -- parsing ----------------------------------------------------------


class WeylSyntaxError(ValueError):
    """Raised on malformed input; carries the 0-based position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.message = message
        self.pos = pos


_OPS = set("+-*^/()")


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    toks: list[tuple[str, str, int]] = []
    n = len(s)
    pos = 0
    while pos < n:
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and s[pos].isdigit():
                pos += 1
            toks.append(("INT", s[start:pos], start))
            continue
        if ch in ("t", "d"):
            toks.append(("NAME", ch, pos))
            pos += 1
            continue
        if ch in _OPS:
            toks.append((ch, ch, pos))
            pos += 1
            continue
        raise WeylSyntaxError(f"unexpected character {ch!r}", pos)
    toks.append(("EOF", "", n))
    return toks


class _Parser:
    def __init__(self, s: str):
        self.source = s
        self.toks = _tokenize(s)
        self.idx = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.idx]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.idx]
        self.idx += 1
        return tok

    def parse(self) -> WeylElement:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "EOF":
            if kind in ("INT", "NAME", "("):
                raise WeylSyntaxError(
                    f"unexpected {text!r}; adjacent factors need an explicit '*'", pos
                )
            raise WeylSyntaxError(f"unexpected {text!r}", pos)
        return value

    def expr(self) -> WeylElement:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> WeylElement:
        value = self.factor()
        while True:
            kind, text, pos = self.peek()
            if kind == "*":
                self.next()
                value = value * self.factor()
            elif kind in ("INT", "NAME", "("):
                raise WeylSyntaxError(
                    f"unexpected {text!r}; adjacent factors need an explicit '*'", pos
                )
            else:
                return value

    def factor(self) -> WeylElement:
        kind, _, _ = self.peek()
        if kind == "-":
            self.next()
            return -self.factor()
        return self.power()

    def power(self) -> WeylElement:
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            kind, text, pos = self.next()
            if kind != "INT":
                raise WeylSyntaxError("exponent must be a nonnegative integer", pos)
            base = base ** int(text)
        return base

    def atom(self) -> WeylElement:
        kind, text, pos = self.next()
        if kind == "INT":
            if self.peek()[0] == "/":
                self.next()
                dkind, dtext, dpos = self.next()
                if dkind != "INT":
                    raise WeylSyntaxError("'/' is only allowed between integers", dpos)
                if int(dtext) == 0:
                    raise WeylSyntaxError("zero denominator", dpos)
                return WeylElement.constant(Fraction(int(text), int(dtext)))
            return WeylElement.constant(int(text))
        if kind == "NAME":
            return WeylElement.t() if text == "t" else WeylElement.d()
        if kind == "(":
            value = self.expr()
            kind2, text2, pos2 = self.next()
            if kind2 != ")":
                raise WeylSyntaxError("expected ')'", pos2)
            return value
        if kind == "/":
            raise WeylSyntaxError("'/' is only allowed between integers", pos)
        if kind == "EOF":
            raise WeylSyntaxError("unexpected end of input", pos)
        raise WeylSyntaxError(f"unexpected {text!r}", pos)


def parse_weyl(s: str) -> WeylElement:
    """Parse an expression in ``t`` and ``d`` into normal form.

    Raises :class:`WeylSyntaxError` (with a position) on malformed
    input.  Division is restricted to integer literals, exponents are
    nonnegative integer literals, and juxtaposition is rejected.
    """
    if not isinstance(s, str):
        raise TypeError("parse_weyl expects a string")
    return _Parser(s).parse()
