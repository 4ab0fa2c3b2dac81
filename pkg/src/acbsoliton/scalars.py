"""Exact rational functions in named parameters.

Coefficients are :class:`fractions.Fraction`. A :class:`Polynomial` maps
exponent vectors to nonzero coefficients; a :class:`Scalar` is a quotient of
two polynomials over one shared parameter tuple.

Fractions are kept small by cancelling common monomial factors and by exact
trial division, but no full multivariate GCD is computed. Equality is decided
by cross-multiplication, so two Scalars for the same rational function always
compare equal even when their stored forms differ.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import EvaluationError, StructuralError

__all__ = [
    "Polynomial",
    "Scalar",
    "as_fraction",
    "is_zero",
    "parse_expression",
    "scalar_add",
    "scalar_div",
    "scalar_mul",
    "substitute",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or rational string such as ``"-3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _grlex(exps):
    return (sum(exps), exps)


def _print_key(exps):
    # ascending total degree; within a degree, p before q
    return (sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples (one entry per parameter) to nonzero
    Fractions. Instances are treated as immutable.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params, terms=None):
        self.params = tuple(params)
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, params, terms):
        obj = cls.__new__(cls)
        obj.params = params
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, value, params=()):
        params = tuple(params)
        value = as_fraction(value)
        return cls._raw(params, {(0,) * len(params): value} if value else {})

    @classmethod
    def variable(cls, name, params):
        params = tuple(params)
        if name not in params:
            raise StructuralError(f"unknown parameter {name!r}; known: {list(params)}")
        exps = tuple(1 if p == name else 0 for p in params)
        return cls._raw(params, {exps: _ONE})

    def _check(self, other):
        if self.params != other.params:
            raise StructuralError(
                f"parameter-set mismatch: {list(self.params)} vs {list(other.params)}"
            )

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.terms:
            return _ZERO
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return next(iter(self.terms.values()))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self):
        """Leading exponent and coefficient under graded lexicographic order."""
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.params, out)

    def __neg__(self):
        return Polynomial._raw(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial._raw(self.params, {})
        if len(self.terms) == 1 and len(other.terms) == 1:
            (e1, c1), = self.terms.items()
            (e2, c2), = other.terms.items()
            return Polynomial._raw(self.params, {tuple(a + b for a, b in zip(e1, e2)): c1 * c2})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, _ZERO) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.params, out)

    def scale(self, k: Fraction):
        if not k:
            return Polynomial._raw(self.params, {})
        return Polynomial._raw(self.params, {e: c * k for e, c in self.terms.items()})

    def shift(self, exps):
        """Divide every term by the monomial ``exps`` (assumed to divide)."""
        if not any(exps):
            return self
        return Polynomial._raw(
            self.params,
            {tuple(a - b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def exact_div(self, other):
        """Return ``self / other`` if ``other`` divides exactly, else ``None``."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return self
        lt, lc = other.leading()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=_grlex)
            if any(a < b for a, b in zip(e, lt)):
                return None
            t = tuple(a - b for a, b in zip(e, lt))
            k = rem[e] / lc
            quot[t] = k
            for e2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(t, e2))
                v = rem.get(m, _ZERO) - k * c2
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return Polynomial._raw(self.params, quot)

    def evaluate(self, assignment) -> Fraction:
        total = _ZERO
        values = []
        for p in self.params:
            if p not in assignment:
                if any(e[len(values)] for e in self.terms):
                    raise EvaluationError(f"no value given for parameter {p!r}")
                values.append(_ZERO)
            else:
                values.append(as_fraction(assignment[p]))
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v**k
            total += term
        return total

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _print_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                p if k == 1 else f"{p}^{k}" for p, k in zip(self.params, e) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, params={self.params})"


def _common_monomial(a: Polynomial, b: Polynomial):
    exps = None
    for e in list(a.terms) + list(b.terms):
        exps = e if exps is None else tuple(min(x, y) for x, y in zip(exps, e))
    return exps


_CONST_CACHE: dict = {}


class Scalar:
    """Quotient ``num / den`` of polynomials sharing one parameter tuple.

    Invariants: ``den`` is nonzero with leading coefficient 1; a zero Scalar
    is stored as ``0 / 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.constant(1, num.params)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def const(cls, value, params=()):
        params = tuple(params)
        return cls._raw(Polynomial.constant(value, params), Polynomial.constant(1, params))

    @classmethod
    def zero(cls, params=()):
        return cls.const(0, params)

    @classmethod
    def one(cls, params=()):
        return cls.const(1, params)

    @classmethod
    def var(cls, name, params):
        params = tuple(params)
        return cls._raw(Polynomial.variable(name, params), Polynomial.constant(1, params))

    @classmethod
    def parse(cls, text, params=()):
        return parse_expression(text, params)

    @property
    def params(self):
        return self.num.params

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.num.params != self.num.params:
                raise StructuralError(
                    f"parameter-set mismatch: {list(self.params)} vs {list(other.params)}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            key = (other, self.num.params)
            hit = _CONST_CACHE.get(key)
            if hit is None:
                hit = Scalar.const(other, self.num.params)
                if len(_CONST_CACHE) < 4096:
                    _CONST_CACHE[key] = hit
            return hit
        return NotImplemented

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not self.num.terms

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on parameters")
        return self.num.constant_value() / self.den.constant_value()

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den.is_constant() and other.den.is_constant():
            # normalized constant denominators are both 1
            return Scalar._raw(self.num + other.num, self.den)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.terms:
            return self
        if not other.num.terms:
            return other
        if self.den.is_constant() and other.den.is_constant():
            # both are polynomials after normalization; dens are 1
            return Scalar._raw(self.num * other.num, self.den)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("division by the zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.terms:
            raise ZeroDivisionError("division by the zero Scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.one(self.params)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def substitute(self, assignment) -> Fraction:
        den = self.den.evaluate(assignment)
        if not den:
            point = ", ".join(f"{k}={assignment[k]}" for k in self.params if k in assignment)
            raise EvaluationError(f"denominator {self.den} vanishes at ({point})")
        return self.num.evaluate(assignment) / den

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        num, den = str(self.num), str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _normalize(num: Polynomial, den: Polynomial):
    params = num.params
    if not num.terms:
        return num, Polynomial.constant(1, params)
    if den.is_constant():
        k = den.constant_value()
        if k == 1:
            return num, den
        return num.scale(1 / k), Polynomial.constant(1, params)
    mono = _common_monomial(num, den)
    if any(mono):
        num, den = num.shift(mono), den.shift(mono)
    if den.is_constant():
        return num.scale(1 / den.constant_value()), Polynomial.constant(1, params)
    q = num.exact_div(den)
    if q is not None:
        return q, Polynomial.constant(1, params)
    q = den.exact_div(num)
    if q is not None:
        num, den = Polynomial.constant(1, params), q
    lc = den.leading()[1]
    if lc != 1:
        inv = 1 / lc
        num, den = num.scale(inv), den.scale(inv)
    return num, den


# -- functional surface ------------------------------------------------------

def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_div(a: Scalar, b: Scalar) -> Scalar:
    return a / b


def is_zero(a: Scalar) -> bool:
    return a.is_zero()


def substitute(a: Scalar, assignment) -> Fraction:
    return a.substitute(assignment)


# -- expression grammar --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


class ExpressionError(ValueError):
    def __init__(self, text, pos, message):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1} in {text!r}")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionError(text, m.start(3), f"unexpected character {ch!r}")
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = tuple(params)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message):
        raise ExpressionError(self.text, self.peek()[2], message)

    def expect_op(self, ch):
        kind, val, _ = self.peek()
        if kind != "op" or val != ch:
            self.error(f"expected {ch!r}")
        self.take()

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                value = value * self.unary()
            else:
                kind, num, _ = self.peek()
                if kind != "num":
                    self.error("division is only allowed by an integer literal")
                self.take()
                if num == 0:
                    self.error("division by zero")
                value = value.scale(Fraction(1, num))
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, k, _ = self.peek()
            if kind != "num":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            out = Polynomial.constant(1, self.params)
            for _ in range(k):
                out = out * base
            return out
        return base

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.constant(val, self.params)
        if kind == "id":
            if val not in self.params:
                self.error(f"unknown parameter {val!r}")
            self.take()
            return Polynomial.variable(val, self.params)
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.error("expected a number, parameter or '('")


def parse_expression(text, params=()) -> Scalar:
    """Parse a polynomial expression such as ``"p + 2*p^2"`` or ``"-1/2"``."""
    if isinstance(text, (int, Fraction)):
        return Scalar.const(text, params)
    if not isinstance(text, str):
        raise TypeError(f"expression must be a string, got {type(text).__name__}")
    poly = _Parser(text, params).parse()
    return Scalar._raw(poly, Polynomial.constant(1, tuple(params)))
