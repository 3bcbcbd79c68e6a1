"""Exact integer polynomials in x_1, x_2, ... with divided differences.

Monomials are exponent tuples with trailing zeros stripped, so a polynomial
does not depend on the ambient rank it was built in.  Coefficients are
Python ints.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from . import kernels

Monomial = tuple[int, ...]


class PolynomialError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


def trim(exps: Iterable[int]) -> Monomial:
    e = list(exps)
    while e and e[-1] == 0:
        e.pop()
    if any(k < 0 for k in e):
        raise PolynomialError(f"negative exponent in {tuple(e)}")
    return tuple(e)


def degree(m: Monomial) -> int:
    return sum(m)


def exponent(m: Monomial, var: int) -> int:
    """Exponent of ``x_var`` (1-based) in ``m``."""
    return m[var - 1] if var <= len(m) else 0


def order_key(m: Monomial) -> tuple:
    """Sort key realizing the term order.

    Larger key means larger monomial: total degree first, then
    ``k_{n-1}, k_{n-2}, ..., k_1`` lexicographically.  Since monomials are
    trimmed, a longer tuple has a nonzero exponent at a higher variable.
    """
    return (sum(m), len(m), m[::-1])


def monomial_quotient(w: Monomial, v: Monomial) -> Monomial | None:
    """``w / v`` when every exponent stays nonnegative, else ``None``."""
    width = max(len(w), len(v))
    out = []
    for k in range(width):
        d = exponent(w, k + 1) - exponent(v, k + 1)
        if d < 0:
            return None
        out.append(d)
    return trim(out)


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    width = max(len(a), len(b))
    return tuple(exponent(a, k) + exponent(b, k) for k in range(1, width + 1))


def staircase(n: int) -> Monomial:
    """``x_1^{n-1} x_2^{n-2} ... x_{n-1}``."""
    return trim(range(n - 1, 0, -1))


def interval(i: int, j: int) -> Monomial:
    """``X[i,j] = x_i x_{i+1} ... x_j`` (1 when i > j)."""
    if i > j:
        return ()
    return trim([0] * (i - 1) + [1] * (j - i + 1))


def var(k: int) -> Monomial:
    return interval(k, k)


def in_staircase(m: Monomial, n: int) -> bool:
    """Membership in ``B_x``: ``k_i + i <= n`` for every variable."""
    return all(k + i <= n for i, k in enumerate(m, start=1)) and len(m) <= max(n - 1, 0)


def minimal_rank(m: Monomial) -> int:
    """Smallest n with ``m`` in ``B_x`` of S_n."""
    return max([k + i for i, k in enumerate(m, start=1) if k] + [1])


class Polynomial:
    """An immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    key = trim(m)
                    v = clean.get(key, 0) + c
                    if v:
                        clean[key] = v
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> Polynomial:
        # trusted: trimmed keys, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: Iterable[int], coeff: int = 1) -> Polynomial:
        return cls({trim(m): coeff})

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls({(): c})

    @classmethod
    def x(cls, k: int) -> Polynomial:
        return cls.monomial(var(k))

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def coefficient(self, m: Iterable[int]) -> int:
        return self._terms.get(trim(m), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.add_scaled(self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.add_scaled(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._wrap({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(kernels.multiply(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def add_scaled(self, other: Polynomial, scale: int) -> Polynomial:
        return Polynomial._wrap(kernels.add_scaled(self._terms, other._terms, scale))

    def times_monomial(self, m: Monomial) -> Polynomial:
        return Polynomial._wrap({monomial_product(k, m): c for k, c in self._terms.items()})

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def degree(self) -> int:
        if not self._terms:
            raise PolynomialError("zero polynomial has no degree")
        return max(sum(m) for m in self._terms)

    def nvars(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[Monomial, int]]:
        """Terms ordered by the term order, largest first by default."""
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]), reverse=reverse)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def swap_action(i: int, f: Polynomial) -> Polynomial:
    """Exchange ``x_i`` and ``x_{i+1}``."""
    if i < 1:
        raise PolynomialError(f"variable index must be >= 1, got {i}")
    return Polynomial._wrap(kernels.swap(f._terms, i))


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial."""
    if i < 1:
        raise PolynomialError(f"variable index must be >= 1, got {i}")
    return Polynomial._wrap(kernels.divided_difference(f._terms, i))


def divided_difference_word(letters: Iterable[int], f: Polynomial) -> Polynomial:
    """``d_{i_1} d_{i_2} ... d_{i_t} f``; the rightmost operator acts first."""
    for i in reversed(tuple(letters)):
        f = divided_difference(i, f)
        if not f:
            break
    return f


def leading_term(f: Polynomial) -> tuple[Monomial, int]:
    if not f:
        raise PolynomialError("no leading monomial: polynomial is zero")
    m = max(f._terms, key=order_key)
    return m, f._terms[m]


def leading_monomial(f: Polynomial) -> Monomial:
    return leading_term(f)[0]


# --- text format ---------------------------------------------------------------


def format_monomial(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e:
            parts.append(f"x{k}^{e}")
    return "*".join(parts) if parts else "1"


def display_key(m: Monomial) -> tuple:
    """Print order: degree descending, then x1 > x2 > ... lexicographically."""
    return (-sum(m), tuple(-e for e in m))


def format_polynomial(f: Polynomial) -> str:
    if not f:
        return "0"
    out = []
    for m, c in sorted(f.items(), key=lambda t: display_key(t[0])):
        mono = format_monomial(m)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+)(?:\^(?P<exp>\d+))?)|(?P<op>[-+*]))")


def parse_monomial(text: str) -> Monomial:
    p = parse_polynomial(text)
    if len(p) != 1 or next(iter(p.items()))[1] != 1:
        raise PolynomialError(f"expected a single monic monomial, got {text!r}", 0)
    return next(iter(p.items()))[0]


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``"3*x1^2*x2 - 7*x5*x7"``-style text."""
    pos = 0
    tokens = []
    stripped = text.rstrip()
    while pos < len(stripped):
        while stripped[pos].isspace():
            pos += 1
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise PolynomialError(f"unexpected character {stripped[pos]!r}", pos)
        tokens.append((pos, m))
        pos = m.end()
    if not tokens:
        raise PolynomialError("empty polynomial", 0)

    terms: dict[Monomial, int] = {}
    k = 0

    def expect_factor():
        nonlocal k
        if k >= len(tokens):
            raise PolynomialError("expected a factor", len(text))
        at, tok = tokens[k]
        k += 1
        if tok.group("num") is not None:
            return int(tok.group("num")), ()
        if tok.group("var") is not None:
            idx = int(tok.group("idx"))
            if idx < 1:
                raise PolynomialError("variables are numbered from x1", at)
            e = int(tok.group("exp")) if tok.group("exp") is not None else 1
            return 1, var(idx) if e == 1 else trim([0] * (idx - 1) + [e])
        raise PolynomialError(f"expected a factor, got {tok.group('op')!r}", at)

    first = True
    while k < len(tokens):
        sign = 1
        at, tok = tokens[k]
        if tok.group("op") in ("+", "-"):
            sign = -1 if tok.group("op") == "-" else 1
            k += 1
        elif not first:
            raise PolynomialError("expected '+' or '-'", at)
        first = False
        coeff, mono = expect_factor()
        while k < len(tokens) and tokens[k][1].group("op") == "*":
            k += 1
            c2, m2 = expect_factor()
            coeff *= c2
            mono = monomial_product(mono, m2)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return Polynomial(terms)
