"""Exact arithmetic in Z[q, q^-1] and quantum integer / binomial combinatorics.

A :class:`LaurentInt` is stored as a sorted tuple of ``(exponent, coefficient)``
pairs with no zero coefficients, so structural equality is mathematical
equality. The one formal variable is rendered as ``q``; in the Weyl-algebra
layer the same class plays the role of Z[v, v^-1].
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial quotient is not a Laurent polynomial."""


class LaurentInt:
    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentInt:
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentInt:
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> LaurentInt:
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentInt")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def evaluate(self, value):
        """Value at ``q = value``; ``value`` may be an int, Fraction, ..."""
        return sum(c * value**e for e, c in self._terms)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentInt.coerce(other)
        except TypeError:
            return NotImplemented
        return LaurentInt(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentInt:
        return LaurentInt((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        try:
            other = LaurentInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentInt.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentInt.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentInt(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentInt:
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise InexactDivision("only unit monomials have negative powers")
            e, c = self._terms[0]
            return LaurentInt({e * k: 1 if k % 2 == 0 else c})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> LaurentInt:
        """Multiply by ``q^d``."""
        return LaurentInt((e + d, c) for e, c in self._terms)

    def divmod_exact(self, other: LaurentInt) -> LaurentInt:
        """Exact quotient ``self / other``; raises :class:`InexactDivision`."""
        other = LaurentInt.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        lead_e, lead_c = other._terms[-1]
        # quotient exponents are confined to this window if division is exact
        floor = self._terms[0][0] - other._terms[0][0]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            shift = top - lead_e
            c = rem[top]
            if shift < floor or c % lead_c:
                raise InexactDivision(f"{self} is not divisible by {other}")
            k = c // lead_c
            quot[shift] = k
            for e, oc in other._terms:
                v = rem.get(e + shift, 0) - k * oc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentInt(quot)

    def __truediv__(self, other):
        return self.divmod_exact(LaurentInt.coerce(other))

    def substitute_power(self, k: int) -> LaurentInt:
        """Apply ``q -> q^k`` (``k`` nonzero)."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        return LaurentInt((e * k, c) for e, c in self._terms)

    def contract_power(self, k: int) -> LaurentInt:
        """Inverse of :meth:`substitute_power`: requires every exponent divisible by ``k``."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        if any(e % k for e, _ in self._terms):
            raise InexactDivision(f"{self} is not a polynomial in q^{k}")
        return LaurentInt((e // k, c) for e, c in self._terms)

    def bar(self) -> LaurentInt:
        """The involution ``q -> q^-1``."""
        return self.substitute_power(-1)

    def monomial_ratio(self, other: LaurentInt) -> int | None:
        """Return ``s`` with ``self == q^s * other``, or None if there is none."""
        if self.is_zero() or other.is_zero():
            return 0 if self.is_zero() and other.is_zero() else None
        s = self._terms[0][0] - other._terms[0][0]
        return s if other.shift(s) == self else None

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- text ----------------------------------------------------------
    def render(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{var}^{e}" for e, c in self._terms)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentInt({self.render()!r})"

    @classmethod
    def parse(cls, text: str, var: str = "q") -> LaurentInt:
        """Parse the rendered form ``"a*q^k + b*q^j + ..."``.

        Terms may also be written as bare integers, ``q``, ``-q^2`` or
        ``3*q``; this keeps hand-written fixtures readable.
        """
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        v = re.escape(var)
        term = re.compile(rf"([+-]{{0,2}})(\d*)(\*?)({v}(?:\^(-?\d+))?)?")
        acc: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            sign, digits, star, mono, exp_txt = m.groups()
            if m.end() == pos or (not digits and not mono) or (star and not (digits and mono)):
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at {s[pos:]!r}")
            if pos and not sign:
                raise ValueError(f"missing operator in {text!r} at {s[pos:]!r}")
            coeff = int(digits) if digits else 1
            if sign.count("-") % 2:
                coeff = -coeff
            exp = 0 if not mono else (int(exp_txt) if exp_txt is not None else 1)
            acc[exp] = acc.get(exp, 0) + coeff
            pos = m.end()
        return cls(acc)

ZERO = LaurentInt()
ONE = LaurentInt.const(1)
Q = LaurentInt.monomial(1)


def add(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a + b


def mul(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a * b


def substitute_power(a: LaurentInt, k: int) -> LaurentInt:
    return a.substitute_power(k)


@lru_cache(maxsize=None)
def qint(a: int) -> LaurentInt:
    """The quantum integer ``(a) = 1 + v + ... + v^(a-1)``."""
    if a < 0:
        raise ValueError("qint needs a >= 0")
    return LaurentInt({i: 1 for i in range(a)})


@lru_cache(maxsize=None)
def qint_balanced(a: int) -> LaurentInt:
    """The balanced quantum integer ``[a] = q^(a-1) + q^(a-3) + ... + q^(1-a)``."""
    if a < 0:
        raise ValueError("qint_balanced needs a >= 0")
    return LaurentInt({a - 1 - 2 * i: 1 for i in range(a)})


@lru_cache(maxsize=None)
def qfactorial(a: int) -> LaurentInt:
    result = ONE
    for i in range(1, a + 1):
        result = result * qint(i)
    return result


@lru_cache(maxsize=None)
def qbinom(a: int, b: int) -> LaurentInt:
    """Gaussian binomial ``prod_{i<b} (a-i)/(b-i)`` evaluated by exact division."""
    if not 0 <= b <= a:
        raise ValueError(f"qbinom needs 0 <= b <= a, got ({a}, {b})")
    num, den = ONE, ONE
    for i in range(b):
        num = num * qint(a - i)
        den = den * qint(b - i)
    return num / den


@lru_cache(maxsize=None)
def qbinom_balanced(a: int, b: int) -> LaurentInt:
    """Bar-invariant binomial ``prod_{i<b} [a-i]/[b-i]``."""
    if not 0 <= b <= a:
        raise ValueError(f"qbinom_balanced needs 0 <= b <= a, got ({a}, {b})")
    num, den = ONE, ONE
    for i in range(b):
        num = num * qint_balanced(a - i)
        den = den * qint_balanced(b - i)
    return num / den


def qbinom_at(a: int, b: int, k: int) -> LaurentInt:
    """``qbinom(a, b)`` with the formal variable replaced by ``q^k``."""
    return qbinom(a, b).substitute_power(k)
