"""The quantum divided-power Weyl algebra over Z[v, v^-1] and its action on Z[v^+-][x].

Elements are kept in the normal form sum c * x^a d^(m) (x's to the left).
Products are normal-formed with the two rewriting rules

    d^(m) x      -> v^m x d^(m) + d^(m-1)      (d^(-1) = 0, d^(0) = 1)
    d^(m) d^(n)  -> [m+n choose n]_v d^(m+n)

>>> d1, x = DElement.dpow(1), DElement.x()
>>> (d1 * x).render()
'1 + v * x^1 d^(1)'
>>> d_act(DElement.dpow(1), QPoly.monomial(2)).render()
'(1*v^0 + 1*v^1) * x^1'
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Mapping

from .qlaurent import LaurentInt, qbinom

Key = tuple[int, int]  # (x exponent, divided-power index)


def _acc(tgt: dict, key, c: LaurentInt) -> None:
    v = tgt.get(key, LaurentInt()) + c
    if v:
        tgt[key] = v
    else:
        tgt.pop(key, None)


class DElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, LaurentInt | int] | Iterable[tuple[Key, LaurentInt | int]] = ()):
        acc: dict[Key, LaurentInt] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, m), c in items:
            if a < 0 or m < 0:
                raise ValueError(f"negative index in x^{a} d^({m})")
            _acc(acc, (a, m), LaurentInt.coerce(c))
        self.terms = acc

    @classmethod
    def x(cls, a: int = 1) -> DElement:
        return cls({(a, 0): 1})

    @classmethod
    def dpow(cls, m: int) -> DElement:
        return cls({(0, m): 1})

    @classmethod
    def const(cls, c: LaurentInt | int) -> DElement:
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> DElement:
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return DElement(out)

    __radd__ = __add__

    def __neg__(self) -> DElement:
        return DElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> DElement:
        return self + (-_coerce(other))

    def __mul__(self, other) -> DElement:
        if isinstance(other, (int, LaurentInt)):
            return DElement({k: c * other for k, c in self.terms.items()})
        return d_mul(self, other)

    def __rmul__(self, other) -> DElement:
        return self * other

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentInt)):
            other = DElement.const(other)
        if not isinstance(other, DElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, m), c in sorted(self.terms.items()):
            word = " ".join(w for w in (f"x^{a}" if a else "", f"d^({m})" if m else "") if w)
            coeff = _coeff_text(c)
            if not word:
                parts.append(coeff)
            elif c == 1:
                parts.append(word)
            else:
                parts.append(f"{coeff} * {word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DElement({self.render()!r})"


def _coeff_text(c: LaurentInt) -> str:
    if len(c.terms) > 1:
        return "(" + c.render("v") + ")"
    (e, k), = c.terms
    base = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
    if not base:
        return str(k)
    return base if k == 1 else ("-" + base if k == -1 else f"{k}*{base}")


def _coerce(a) -> DElement:
    return a if isinstance(a, DElement) else DElement.const(a)


@lru_cache(maxsize=None)
def _v(e: int) -> LaurentInt:
    return LaurentInt.monomial(e)


@lru_cache(maxsize=None)
def dpow_times_xpow(m: int, b: int) -> tuple[tuple[Key, LaurentInt], ...]:
    """Normal form of d^(m) x^b by peeling one x at a time off the left."""
    if m == 0:
        return (((b, 0), LaurentInt.const(1)),)
    if b == 0:
        return (((0, m), LaurentInt.const(1)),)
    out: dict[Key, LaurentInt] = {}
    # d^(m) x^b = v^m x (d^(m) x^(b-1)) + d^(m-1) x^(b-1)
    for (a, k), c in dpow_times_xpow(m, b - 1):
        _acc(out, (a + 1, k), c * _v(m))
    for key, c in dpow_times_xpow(m - 1, b - 1):
        _acc(out, key, c)
    return tuple(sorted(out.items()))


def d_mul(a: DElement, b: DElement) -> DElement:
    out: dict[Key, LaurentInt] = {}
    for (a1, m1), c1 in a.terms.items():
        for (a2, m2), c2 in b.terms.items():
            for (a3, m3), c3 in dpow_times_xpow(m1, a2):
                _acc(out, (a1 + a3, m3 + m2), c1 * c2 * c3 * qbinom(m3 + m2, m2))
    return DElement(out)


# ----------------------------------------------------------------------
# the polynomial representation

class QPoly:
    """Polynomials in x with Z[v^+-] coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, LaurentInt | int] = ()):
        acc: dict[int, LaurentInt] = {}
        for e, c in dict(coeffs).items():
            if e < 0:
                raise ValueError("negative power of x")
            _acc(acc, e, LaurentInt.coerce(c))
        self.coeffs = acc

    @classmethod
    def monomial(cls, n: int, c: LaurentInt | int = 1) -> QPoly:
        return cls({n: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: QPoly) -> QPoly:
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            _acc(out, e, c)
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def scale(self, c: LaurentInt | int) -> QPoly:
        return QPoly({e: v * c for e, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def monomial_ratio(self, other: QPoly) -> int | None:
        """s with self = v^s * other, or None."""
        if self.coeffs.keys() != other.coeffs.keys() or not self.coeffs:
            return None
        shifts = {c.monomial_ratio(other.coeffs[e]) for e, c in self.coeffs.items()}
        if len(shifts) != 1 or None in shifts:
            return None
        return shifts.pop()

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            coeff = _coeff_text(c)
            parts.append(coeff if e == 0 else f"{coeff} * x^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QPoly({self.render()!r})"


def d_act(a: DElement, p: QPoly) -> QPoly:
    """x multiplies; d^(m) x^n = [n choose m]_v x^(n-m), zero when m > n."""
    out: dict[int, LaurentInt] = {}
    for (xa, m), c in a.terms.items():
        for n, pc in p.coeffs.items():
            if m > n:
                continue
            _acc(out, n - m + xa, c * pc * qbinom(n, m))
    return QPoly(out)


# ----------------------------------------------------------------------
# checks

def _report(claim: str, params: dict, ok: bool, **extra) -> dict:
    out = {"claim": claim, "params": params, "pass": bool(ok)}
    out.update(extra)
    return out


def relation_elements(m: int, n: int) -> tuple[DElement, DElement]:
    """The two defining relators built from free words, before normal-forming.

    They are returned as differences of actions-ready elements: the left term
    is computed by ``d_mul`` so the action check tests the rewriting itself.
    """
    v = LaurentInt.monomial
    r1 = DElement.dpow(m) * DElement.dpow(n) - DElement.dpow(m + n) * qbinom(m + n, n)
    lower = DElement.dpow(m - 1) if m >= 1 else DElement()
    r2 = DElement.dpow(m) * DElement.x() - DElement({(1, m): v(m)}) - lower
    return r1, r2


def rep_check(bound: int) -> dict:
    """Representation property on generators and monomials up to ``bound``.

    For generators a, b in {x, d^(0..bound)} and x^j with j <= bound the action
    of ``d_mul(a, b)`` equals the composite action; both relator families
    act by zero (they are in fact zero in the normal form).
    """
    gens = [DElement.x()] + [DElement.dpow(m) for m in range(bound + 1)]
    monos = [QPoly.monomial(j) for j in range(bound + 1)]
    failures = []
    for ia, a in enumerate(gens):
        for ib, b in enumerate(gens):
            ab = d_mul(a, b)
            for j, p in enumerate(monos):
                if d_act(ab, p) != d_act(a, d_act(b, p)):
                    failures.append(("compose", ia, ib, j))
    for m in range(bound + 1):
        for n in range(bound + 1):
            r1, r2 = relation_elements(m, n)
            for j, p in enumerate(monos):
                # composite actions of the free words, independent of the normal form
                lhs1 = d_act(DElement.dpow(m), d_act(DElement.dpow(n), p))
                rhs1 = d_act(DElement.dpow(m + n), p).scale(qbinom(m + n, n))
                if lhs1 != rhs1 or not d_act(r1, p).is_zero():
                    failures.append(("divided_power", m, n, j))
                if n == 0:
                    lhs2 = d_act(DElement.dpow(m), d_act(DElement.x(), p))
                    rhs2 = d_act(DElement.x(), d_act(DElement.dpow(m), p)).scale(LaurentInt.monomial(m))
                    if m >= 1:
                        rhs2 = rhs2 + d_act(DElement.dpow(m - 1), p)
                    if lhs2 != rhs2 or not d_act(r2, p).is_zero():
                        failures.append(("commutation", m, j))
    return _report("rep_check", {"bound": bound}, not failures, failures=failures[:10])


def closed_dpow_times_xpow(m: int, b: int) -> DElement:
    """d^(m) x^b = sum_j v^((m-j)(b-j)) [b choose j]_v x^(b-j) d^(m-j)."""
    terms = {}
    for j in range(min(m, b) + 1):
        terms[(b - j, m - j)] = qbinom(b, j) * LaurentInt.monomial((m - j) * (b - j))
    return DElement(terms)


def confluence_check(bound: int) -> dict:
    """Rewriting d^(m) x^k agrees across evaluation orders and with the action.

    * splitting x^k = x^i x^(k-i) and normal-forming (d^(m) x^i) x^(k-i)
      gives the same element for every i;
    * the normal form agrees with the closed formula;
    * acting on every monomial x^j, j <= bound, it agrees with d^(m)(x^(k+j)).
    """
    failures = []
    for m in range(bound + 1):
        for k in range(bound + 1):
            nf = DElement(dict(dpow_times_xpow(m, k)))
            for i in range(k + 1):
                alt = d_mul(DElement(dict(dpow_times_xpow(m, i))), DElement.x(k - i))
                if alt != nf:
                    failures.append(("split", m, k, i))
            if nf != closed_dpow_times_xpow(m, k):
                failures.append(("closed", m, k))
            for j in range(bound + 1):
                if d_act(nf, QPoly.monomial(j)) != d_act(DElement.dpow(m), QPoly.monomial(k + j)):
                    failures.append(("action", m, k, j))
    return _report("confluence", {"bound": bound}, not failures, failures=failures[:10])


def random_monomial(rng: random.Random, max_index: int) -> DElement:
    return DElement({(rng.randint(0, max_index), rng.randint(0, max_index)):
                     LaurentInt.monomial(rng.randint(-2, 2), rng.choice((1, -1, 2)))})


def associativity_check(seed: int, trials: int = 200, max_index: int = 6) -> dict:
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        a, b, c = (random_monomial(rng, max_index) for _ in range(3))
        if d_mul(d_mul(a, b), c) != d_mul(a, d_mul(b, c)):
            failures += 1
    return _report("associativity", {"seed": seed, "trials": trials, "max_index": max_index},
                   failures == 0, failures=failures)
