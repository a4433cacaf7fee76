"""
Sparse polynomials in x1, x2, ... with coefficients in Z[b].

The parameter ``b`` is carried formally.  Specializing it to an integer is an
explicit step (:func:`specialize_beta`).  Variables are indexed from 1.

A monomial is a tuple of exponents ``(e1, e2, ...)`` for ``x1, x2, ...`` with
trailing zeros stripped; the empty tuple is the monomial ``1``.  Internally a
polynomial is a dict ``{(beta_exp, monomial): int}`` with no zero values.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "BetaCoeff", "BetaPolynomial", "Monomial",
    "NonDivisible", "ZeroPolynomial", "ParseError",
    "x", "BETA", "ONE", "ZERO",
    "add", "mul", "constant_term", "specialize_beta",
    "substitute_zero_and_shift", "exact_divide_by_var",
    "exact_divide_by_difference", "swap_variables", "lowest_component",
    "parse",
]

Monomial = tuple  # tuple[int, ...], trailing zeros stripped


class NonDivisible(ArithmeticError):
    """An exact division had a nonzero remainder."""


class ZeroPolynomial(ValueError):
    pass


class ParseError(ValueError):
    pass


def _strip(exps) -> Monomial:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, e in enumerate(b):
        out[k] += e
    return tuple(out)


def _mono_str(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e > 1:
            parts.append(f"x{k + 1}^{e}")
    return "*".join(parts)


class BetaCoeff:
    """An element of Z[b], stored as ``{beta_exp: int}`` without zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | int = 0):
        if isinstance(terms, int):
            terms = {0: terms}
        self._terms = {k: v for k, v in terms.items() if v}
        self._hash = None

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BetaCoeff(other)
        if not isinstance(other, BetaCoeff):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return BetaCoeff(other)
        if isinstance(other, BetaCoeff):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return BetaCoeff(out)

    __radd__ = __add__

    def __neg__(self):
        return BetaCoeff({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for a, u in self._terms.items():
            for b, v in other._terms.items():
                out[a + b] = out.get(a + b, 0) + u * v
        return BetaCoeff(out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) <= 1

    def specialize(self, c: int) -> int:
        return sum(v * c**k for k, v in self._terms.items())

    def __int__(self):
        if not self.is_constant():
            raise ValueError(f"{self} depends on b")
        return self._terms.get(0, 0)

    def __str__(self):
        if not self._terms:
            return "0"
        return str(BetaPolynomial({(k, ()): v for k, v in self._terms.items()}))

    def __repr__(self):
        return f"BetaCoeff({self})"


class BetaPolynomial:
    """Immutable sparse polynomial in x1, x2, ... over Z[b]."""

    __slots__ = ("_d", "_hash")

    def __init__(self, data: Mapping[tuple[int, Monomial], int] | None = None):
        d: dict[tuple[int, Monomial], int] = {}
        if data:
            for (b, m), c in data.items():
                if c:
                    key = (b, _strip(m))
                    d[key] = d.get(key, 0) + c
                    if not d[key]:
                        del d[key]
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "BetaPolynomial":
        # d already canonical: stripped keys, no zero values
        p = cls.__new__(cls)
        p._d = d
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int | BetaCoeff) -> "BetaPolynomial":
        if isinstance(c, BetaCoeff):
            return cls._raw({(k, ()): v for k, v in c._terms.items()})
        return cls._raw({(0, ()): c} if c else {})

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, BetaCoeff | int]) -> "BetaPolynomial":
        d = {}
        for m, c in terms.items():
            if isinstance(c, int):
                c = BetaCoeff(c)
            for k, v in c._terms.items():
                d[(k, m)] = v
        return cls(d)

    # -- inspection ---------------------------------------------------------

    def raw_terms(self) -> dict[tuple[int, Monomial], int]:
        """The flat ``{(beta_exp, monomial): int}`` map."""
        return dict(self._d)

    def terms(self) -> dict[Monomial, BetaCoeff]:
        grouped: dict[Monomial, dict[int, int]] = {}
        for (b, m), c in self._d.items():
            grouped.setdefault(m, {})[b] = c
        return {m: BetaCoeff(t) for m, t in grouped.items()}

    def coefficient(self, mono: Iterable[int]) -> BetaCoeff:
        mono = _strip(mono)
        return BetaCoeff({b: c for (b, m), c in self._d.items() if m == mono})

    def monomials(self) -> set[Monomial]:
        return {m for (_, m) in self._d}

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {k + 1 for (_, m) in self._d for k, e in enumerate(m) if e}

    def nvars(self) -> int:
        """Largest variable index occurring (0 for constants)."""
        return max((len(m) for (_, m) in self._d), default=0)

    def degree(self) -> int:
        """Total x-degree; -1 for the zero polynomial."""
        return max((sum(m) for (_, m) in self._d), default=-1)

    def min_degree(self) -> int:
        if not self._d:
            raise ZeroPolynomial("zero polynomial has no lowest degree")
        return min(sum(m) for (_, m) in self._d)

    def beta_degree(self) -> int:
        return max((b for (b, _) in self._d), default=-1)

    def is_beta_free(self) -> bool:
        return all(b == 0 for (b, _) in self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BetaPolynomial):
            return other
        if isinstance(other, (int, BetaCoeff)):
            return BetaPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self._d)
        for k, v in other._d.items():
            s = d.get(k, 0) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return BetaPolynomial._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return BetaPolynomial._raw({k: -v for k, v in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d: dict = {}
        for (b1, m1), c1 in self._d.items():
            for (b2, m2), c2 in other._d.items():
                key = (b1 + b2, _mono_mul(m1, m2))
                d[key] = d.get(key, 0) + c1 * c2
        return BetaPolynomial._raw({k: v for k, v in d.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int | BetaCoeff) -> "BetaPolynomial":
        return self * BetaPolynomial.constant(c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    # -- display ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, Monomial, int]]:
        """Flat terms ``(beta_exp, monomial, coeff)`` in canonical order.

        Ascending total x-degree; within a degree, lexicographic on the
        exponent vector with x1 leading (so ``x1^2`` before ``x1*x2`` before
        ``x2^2``); then ascending b-degree.
        """
        width = self.nvars()

        def key(item):
            (b, m), _ = item
            padded = m + (0,) * (width - len(m))
            return (sum(m), tuple(-e for e in padded), b)

        return [(b, m, c) for (b, m), c in sorted(self._d.items(), key=key)]

    def __str__(self):
        if not self._d:
            return "0"
        out = []
        for b, m, c in self.sorted_terms():
            factors = []
            if b == 1:
                factors.append("b")
            elif b > 1:
                factors.append(f"b^{b}")
            if m:
                factors.append(_mono_str(m))
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not out:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    def __repr__(self):
        return f"BetaPolynomial('{self}')"


def x(i: int) -> BetaPolynomial:
    """The variable ``x_i`` (``i >= 1``)."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    return BetaPolynomial._raw({(0, (0,) * (i - 1) + (1,)): 1})


BETA = BetaPolynomial._raw({(1, ()): 1})
ONE = BetaPolynomial._raw({(0, ()): 1})
ZERO = BetaPolynomial._raw({})


# -- module-level operations --------------------------------------------------

def add(f: BetaPolynomial, g: BetaPolynomial) -> BetaPolynomial:
    return f + g


def mul(f: BetaPolynomial, g: BetaPolynomial) -> BetaPolynomial:
    return f * g


def constant_term(f: BetaPolynomial) -> BetaCoeff:
    return f.coefficient(())


def specialize_beta(f: BetaPolynomial, c: int) -> BetaPolynomial:
    d: dict = {}
    for (b, m), v in f._d.items():
        d[(0, m)] = d.get((0, m), 0) + v * c**b
    return BetaPolynomial._raw({k: v for k, v in d.items() if v})


def _map_monomials(f: BetaPolynomial, fn) -> BetaPolynomial:
    """Apply ``fn`` to each monomial; ``fn`` returns a monomial or None (kill)."""
    d: dict = {}
    for (b, m), v in f._d.items():
        m2 = fn(m)
        if m2 is None:
            continue
        key = (b, _strip(m2))
        d[key] = d.get(key, 0) + v
    return BetaPolynomial._raw({k: v for k, v in d.items() if v})


def substitute_zero_and_shift(f: BetaPolynomial, i: int) -> BetaPolynomial:
    """``f(x1, ..., x_{i-1}, 0, x_i, x_{i+1}, ...)``.

    The variable ``x_i`` of ``f`` is set to 0 and each ``x_j`` with ``j > i``
    becomes ``x_{j-1}``.
    """
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    k = i - 1

    def fn(m):
        if k < len(m):
            if m[k]:
                return None
            return m[:k] + m[k + 1:]
        return m

    return _map_monomials(f, fn)


def swap_variables(f: BetaPolynomial, i: int) -> BetaPolynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    if i < 1:
        raise ValueError(f"variable index must be >= 1, got {i}")
    k = i - 1

    def fn(m):
        if len(m) <= k:
            return m
        m = list(m) + [0] * (k + 2 - len(m))
        m[k], m[k + 1] = m[k + 1], m[k]
        return tuple(m)

    return _map_monomials(f, fn)


def exact_divide_by_var(f: BetaPolynomial, i: int) -> BetaPolynomial:
    k = i - 1
    d = {}
    for (b, m), v in f._d.items():
        if len(m) <= k or m[k] == 0:
            raise NonDivisible(f"{f} is not divisible by x{i}")
        m2 = list(m)
        m2[k] -= 1
        d[(b, _strip(m2))] = v
    return BetaPolynomial._raw(d)


def exact_divide_by_difference(f: BetaPolynomial, i: int) -> BetaPolynomial:
    """``f / (x_i - x_{i+1})``, raising :class:`NonDivisible` on a remainder.

    Synthetic division in ``x_i`` over the remaining variables.
    """
    k = i - 1
    # f = sum_e c_e x_i^e with c_e free of x_i
    by_power: dict[int, dict] = {}
    for (b, m), v in f._d.items():
        e = m[k] if len(m) > k else 0
        rest = list(m) + [0] * max(0, k + 1 - len(m))
        rest[k] = 0
        by_power.setdefault(e, {})[(b, _strip(rest))] = v
    if not by_power:
        return ZERO
    top = max(by_power)
    y = x(i + 1)
    coeff = {e: BetaPolynomial._raw(c) for e, c in by_power.items()}
    quotient = ZERO
    carry = ZERO  # q_e, starting with q_{top-1} = c_top
    for e in range(top, 0, -1):
        carry = coeff.get(e, ZERO) + y * carry
        # carry is q_{e-1}
        quotient = quotient + carry * _xpow(i, e - 1)
    remainder = coeff.get(0, ZERO) + y * carry
    if remainder:
        raise NonDivisible(f"{f} is not divisible by x{i} - x{i + 1}")
    return quotient


def _xpow(i: int, e: int) -> BetaPolynomial:
    if e == 0:
        return ONE
    return BetaPolynomial._raw({(0, (0,) * (i - 1) + (e,)): 1})


def lowest_component(f: BetaPolynomial) -> BetaPolynomial:
    """Sum of the terms of minimal total x-degree (b-degrees kept)."""
    d = f.min_degree()
    return BetaPolynomial._raw({k: v for k, v in f._d.items() if sum(k[1]) == d})


def homogeneous_component(f: BetaPolynomial, d: int) -> BetaPolynomial:
    return BetaPolynomial._raw({k: v for k, v in f._d.items() if sum(k[1]) == d})


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(b)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expr(self):
        if self.peek() in ("+", "-"):
            sign = self.take()
            val = self.term()
            val = -val if sign == "-" else val
        else:
            val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() == "*":
            self.take()
            val = val * self.unary()
        return val

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ParseError(f"exponent must be a nonnegative integer, got {exp!r}")
            return base ** int(exp)
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return BetaPolynomial.constant(int(tok))
        if tok == "b":
            return BETA
        if tok.startswith("x"):
            idx = int(tok[1:])
            if idx < 1:
                raise ParseError("variables are x1, x2, ...")
            return x(idx)
        if tok == "(":
            val = self.expr()
            if self.take() != ")":
                raise ParseError("expected ')'")
            return val
        raise ParseError(f"unexpected token {tok!r}")


def parse(text: str) -> BetaPolynomial:
    """Parse text such as ``"b^2*x1^2*x2 + x1*x3 - 3"``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    p = _Parser(tokens)
    val = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input starting at {p.peek()!r}")
    return val
