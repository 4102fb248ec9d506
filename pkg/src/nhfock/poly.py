"""Integer polynomials in x_1..x_n with dense exponent-vector keys."""
from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

Exps = tuple[int, ...]


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero ints."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        self.n = n
        acc: dict[Exps, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {n} variables")
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exps, int]) -> Poly:
        # trusted constructor: keys already valid, no zero coefficients
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, n: int, c: int = 1) -> Poly:
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls._raw(n, {})

    @classmethod
    def var(cls, n: int, i: int) -> Poly:
        if not 1 <= i <= n:
            raise ValueError(f"x_{i} is not a variable in {n} variables")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> Poly:
        return cls._raw(len(exps), {tuple(exps): c} if c else {})

    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree counting each x_i once (the algebra grading doubles this)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def _check(self, other: Poly) -> None:
        if self.n != other.n:
            raise ValueError(f"polynomials in {self.n} and {other.n} variables")

    def __add__(self, other: Poly) -> Poly:
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly._raw(self.n, {e: c * other for e, c in self.terms.items()} if other else {})
        self._check(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    def permute(self, w: Sequence[int]) -> Poly:
        """Substitute x_j -> x_{w(j)}."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for j, a in enumerate(e):
                ne[w[j] - 1] = a
            out[tuple(ne)] = c
        return Poly._raw(self.n, out)

    def swap(self, i: int) -> Poly:
        """The reflection s_i exchanging x_i and x_{i+1}."""
        return Poly._raw(self.n, {_swap(e, i): c for e, c in self.terms.items()})

    def divided_difference(self, i: int) -> Poly:
        """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
        if not 1 <= i < self.n:
            raise ValueError(f"no divided difference D_{i} in {self.n} variables")
        return Poly._raw(self.n, divided_difference_terms(self.terms, i))

    def embed(self, n_total: int, offset: int) -> Poly:
        if offset < 0 or offset + self.n > n_total:
            raise ValueError(f"cannot place {self.n} variables at offset {offset} in {n_total}")
        pad_l, pad_r = (0,) * offset, (0,) * (n_total - offset - self.n)
        return Poly._raw(n_total, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in graded-lex order (degree first, then exponent tuple), descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{j + 1}" + (f"^{a}" if a > 1 else "") for j, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.n}, {self.render()!r})"


def _swap(e: Exps, i: int) -> Exps:
    lst = list(e)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def divided_difference_terms(terms: Mapping[Exps, int], i: int) -> dict[Exps, int]:
    """Divided difference on a raw term dict; exact by the geometric-sum identity."""
    out: dict[Exps, int] = {}
    for e, c in terms.items():
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # x^a y^b - x^b y^a = sign*(xy)^lo*(x^(hi-lo) - y^(hi-lo))
        for j in range(hi - lo):
            ne = list(e)
            ne[i - 1] = lo + j
            ne[i] = lo + (hi - lo - 1 - j)
            key = tuple(ne)
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def elementary(n: int, k: int, vars_: Sequence[int] | None = None) -> Poly:
    """Elementary symmetric polynomial e_k in the given variables (default all)."""
    vars_ = list(vars_) if vars_ is not None else list(range(1, n + 1))
    out = Poly.zero(n)
    for combo in itertools.combinations(vars_, k):
        e = [0] * n
        for j in combo:
            e[j - 1] = 1
        out = out + Poly.monomial(e)
    return out


def complete(n: int, k: int, vars_: Sequence[int] | None = None) -> Poly:
    """Complete homogeneous symmetric polynomial h_k in the given variables."""
    vars_ = list(vars_) if vars_ is not None else list(range(1, n + 1))
    out = Poly.zero(n)
    for combo in itertools.combinations_with_replacement(vars_, k):
        e = [0] * n
        for j in combo:
            e[j - 1] += 1
        out = out + Poly.monomial(e)
    return out
