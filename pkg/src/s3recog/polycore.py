"""Sparse multivariate polynomials over Q, monomial orders and division.

Monomials are exponent tuples.  A :class:`Polynomial` is an immutable map
from monomials to nonzero rational coefficients; coefficients with
denominator one are stored as plain ``int``.  Monomial orders are explicit
arguments, never global state.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from . import _checks

__all__ = [
    "Monomial",
    "MonomialOrder",
    "GREVLEX",
    "GRLEX",
    "LEX",
    "Polynomial",
    "LeadingData",
    "AmbientMismatchError",
    "PolynomialSyntaxError",
    "compare",
    "divide",
    "monomial_divides",
    "monomial_lcm",
    "parse_polynomial",
    "parse_ideal_file",
    "format_ideal_file",
    "default_names",
]

Monomial = tuple[int, ...]


class AmbientMismatchError(ValueError):
    pass


class PolynomialSyntaxError(ValueError):
    pass


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _grlex_key(m):
    return (sum(m), m)


def _lex_key(m):
    return m


class MonomialOrder(enum.Enum):
    GREVLEX = "grevlex"
    GRLEX = "grlex"
    LEX = "lex"

    @property
    def key(self):
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        return _KEYS[self]

    @property
    def is_graded(self) -> bool:
        return self is not MonomialOrder.LEX

    @classmethod
    def parse(cls, name: str | MonomialOrder) -> MonomialOrder:
        if isinstance(name, MonomialOrder):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}; use grevlex, grlex or lex") from None

    def __str__(self) -> str:
        return self.value


_KEYS = {
    MonomialOrder.GREVLEX: _grevlex_key,
    MonomialOrder.GRLEX: _grlex_key,
    MonomialOrder.LEX: _lex_key,
}

GREVLEX = MonomialOrder.GREVLEX
GRLEX = MonomialOrder.GRLEX
LEX = MonomialOrder.LEX


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise AmbientMismatchError(f"monomials of length {len(a)} and {len(b)}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _normalize_coeff(c):
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True)
class LeadingData:
    monomial: Monomial
    coefficient: Fraction | int

    def term(self) -> Polynomial:
        return Polynomial(len(self.monomial), {self.monomial: self.coefficient})


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        clean: dict[Monomial, Fraction | int] = {}
        for mono, coeff in terms:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise AmbientMismatchError(f"monomial {mono} in a ring with {nvars} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, 0) + _normalize_coeff(coeff)
            if c:
                clean[mono] = _normalize_coeff(c)
            else:
                clean.pop(mono, None)
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Polynomial:
        # caller guarantees: correct lengths, no zero coefficients, normalized coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> Polynomial:
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        return cls._raw(nvars, {tuple(int(i == index) for i in range(nvars)): 1})

    @classmethod
    def monomial(cls, mono: Sequence[int], coeff=1) -> Polynomial:
        return cls(len(mono), {tuple(mono): coeff})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Sequence[int]):
        return self.terms.get(tuple(mono), 0)

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction | int]]:
        """Terms in descending order."""
        key = order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self, order: MonomialOrder) -> LeadingData:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        mono = max(self.terms, key=order.key)
        return LeadingData(mono, self.terms[mono])

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading(order).monomial

    def leading_coefficient(self, order: MonomialOrder):
        return self.leading(order).coefficient

    def leading_term(self, order: MonomialOrder) -> Polynomial:
        return self.leading(order).term()

    def evaluate(self, point: Sequence) -> object:
        if len(point) != self.nvars:
            raise AmbientMismatchError(f"point of length {len(point)} for {self.nvars} variables")
        total = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v *= x**e
            total += v
        return total

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise AmbientMismatchError(f"rings with {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = _normalize_coeff(s)
            else:
                terms.pop(mono, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Polynomial:
        c = _normalize_coeff(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: _normalize_coeff(v * c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c=1) -> Polynomial:
        """Multiply by the single term ``c * x^mono``."""
        if len(mono) != self.nvars:
            raise AmbientMismatchError("monomial length does not match the ring")
        c = _normalize_coeff(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars,
            {monomial_mul(m, mono): _normalize_coeff(v * c) for m, v in self.terms.items()},
        )

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw(
            self.nvars, {m: _normalize_coeff(c) for m, c in terms.items() if c}
        )

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order: MonomialOrder) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(Fraction(1) / Fraction(self.leading_coefficient(order)))

    def primitive(self) -> Polynomial:
        """Integer-coefficient multiple with content 1 (sign preserved)."""
        from math import gcd, lcm

        if not self.terms:
            return self
        den = lcm(*(Fraction(c).denominator for c in self.terms.values()))
        ints = {m: int(c * den) for m, c in self.terms.items()}
        g = gcd(*ints.values())
        return Polynomial._raw(self.nvars, {m: c // g for m, c in ints.items()})

    # -- comparison and display -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def format(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms(order):
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e
            ]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.format()!r})"


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division with remainder.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + r`` and no term
    of ``r`` divisible by a leading monomial of a divisor.  At each step the
    first divisor (in list order) whose leading monomial divides the current
    leading term is used.
    """
    for g in divisors:
        f._check(g)
        if g.is_zero():
            raise ValueError("division by the zero polynomial")
    n = f.nvars
    key = order.key
    leads = [g.leading(order) for g in divisors]
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict = {}
    p = dict(f.terms)
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for i, lead in enumerate(leads):
            if monomial_divides(lead.monomial, lm):
                t = monomial_quotient(lm, lead.monomial)
                c = _normalize_coeff(Fraction(lc) / Fraction(lead.coefficient))
                quotients[i][t] = _normalize_coeff(quotients[i].get(t, 0) + c)
                for m, gc in divisors[i].terms.items():
                    mm = monomial_mul(m, t)
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = _normalize_coeff(v)
                    else:
                        p.pop(mm, None)
                break
        else:
            remainder[lm] = lc
            del p[lm]
    qs = [Polynomial(n, q) for q in quotients]
    r = Polynomial._raw(n, remainder)
    if _checks.enabled:
        total = r
        for q, g in zip(qs, divisors):
            total = total + q * g
        assert total == f, "division reconstruction identity failed"
        assert not any(
            monomial_divides(lead.monomial, m) for m in r.terms for lead in leads
        ), "remainder term divisible by a leading monomial"
    return qs, r


# -- text syntax -------------------------------------------------------------

_POLY_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _PolyParser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _POLY_TOKEN.match(stripped, pos)
            if m is None or m.end() == pos:
                raise PolynomialSyntaxError(f"unexpected character at offset {pos} in {text!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, msg):
        _, _, offset = self.peek()
        raise PolynomialSyntaxError(f"{msg} at offset {offset} in {self.text!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            self.fail("empty polynomial")
        result = self.expr()
        if self.pos != len(self.tokens):
            self.fail("unexpected token")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.fail("division by a non-constant or zero polynomial")
                result = result.scale(Fraction(1) / Fraction(rhs.coefficient((0,) * self.nvars)))
        return result

    def factor(self) -> Polynomial:
        kind, value, _ = self.peek()
        if value in ("-", "+"):
            self.take()
            inner = self.factor()
            return -inner if value == "-" else inner
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, value, _ = self.take()
            if kind != "num":
                self.pos -= 1
                self.fail("expected a nonnegative integer exponent")
            base = base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.constant(self.nvars, int(value))
        if kind == "name":
            if value not in self.index:
                self.fail(f"unknown variable {value!r}")
            self.take()
            return Polynomial.variable(self.nvars, self.index[value])
        if value == "(":
            self.take()
            inner = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, variable or '('")


def parse_polynomial(text: str, names: Sequence[str]) -> Polynomial:
    """Parse e.g. ``3/2*x1^2*x3 - x2 + 1`` over the given variable names."""
    return _PolyParser(text, names).parse()


def parse_ideal_file(text: str) -> tuple[list[str], list[Polynomial]]:
    """Parse ``vars: x1 x2 ...`` followed by one polynomial per line."""
    names: list[str] | None = None
    polys: list[Polynomial] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise PolynomialSyntaxError(f"line {lineno}: expected 'vars:' header")
            names = line[len("vars:"):].split()
            if len(set(names)) != len(names):
                raise PolynomialSyntaxError(f"line {lineno}: duplicate variable name")
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise PolynomialSyntaxError(f"line {lineno}: bad variable name {name!r}")
            continue
        try:
            polys.append(parse_polynomial(line, names))
        except PolynomialSyntaxError as exc:
            raise PolynomialSyntaxError(f"line {lineno}: {exc}") from None
    if names is None:
        raise PolynomialSyntaxError("missing 'vars:' header")
    return names, polys


def format_ideal_file(names: Sequence[str], polys: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> str:
    """Inverse of :func:`parse_ideal_file`; denominators are cleared."""
    lines = ["vars: " + " ".join(names)]
    for p in polys:
        lines.append(p.primitive().format(names, order) if not p.is_integral() else p.format(names, order))
    return "\n".join(lines) + "\n"
