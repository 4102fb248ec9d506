"""The nilHecke algebra NH_n in PBW normal form.

Every element is stored as ``sum_w p_w(x) * D_w`` with polynomials to the
left of the divided-difference part ``D_w`` (indexed by a permutation ``w``).
Grading: ``|x_i| = 2``, ``|D_i| = -2``.

Multiplication moves polynomials leftward through each ``D_i`` with the
twisted Leibniz rule ``D_i f = s_i(f) D_i + Delta_i(f)`` and contracts
``D_u D_v`` to ``D_{uv}`` when lengths add (zero otherwise).
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Mapping

from . import symgroup as sg
from .poly import Exps, Poly, divided_difference_terms
from .symgroup import Perm


class NHElement:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Perm, Poly] | Iterable[tuple[Perm, Poly]] = ()):
        self.n = n
        acc: dict[Perm, Poly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, p in items:
            if len(w) != n or p.n != n:
                raise ValueError(f"term ({w}, {p!r}) does not live in NH_{n}")
            acc[w] = acc[w] + p if w in acc else p
        self.terms = {w: p for w, p in acc.items() if p}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Perm, dict[Exps, int]]) -> NHElement:
        el = object.__new__(cls)
        el.n = n
        el.terms = {w: Poly._raw(n, t) for w, t in terms.items() if t}
        el._hash = None
        return el

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> NHElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> NHElement:
        return cls(n, {sg.identity(n): Poly.const(n)})

    @classmethod
    def poly(cls, p: Poly) -> NHElement:
        return cls(p.n, {sg.identity(p.n): p})

    @classmethod
    def x(cls, n: int, i: int) -> NHElement:
        return cls.poly(Poly.var(n, i))

    @classmethod
    def d(cls, n: int, i: int) -> NHElement:
        return cls(n, {sg.s(n, i): Poly.const(n)})

    @classmethod
    def d_perm(cls, w: Perm, coeff: Poly | None = None) -> NHElement:
        n = len(w)
        return cls(n, {w: coeff if coeff is not None else Poly.const(n)})

    @classmethod
    def d_word(cls, n: int, word: Iterable[int]) -> NHElement:
        out = cls.one(n)
        for i in word:
            out = out * cls.d(n, i)
        return out

    # -- structure -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {2 * sum(e) - 2 * sg.length(w) for w, p in self.terms.items() for e in p.terms}

    def degree(self) -> int | None:
        """Degree if homogeneous (None for zero); raises if inhomogeneous."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(ds)}")
        return ds.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __add__(self, other: NHElement) -> NHElement:
        _check(self, other)
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out[w] + p if w in out else p
        return NHElement(self.n, out)

    def __neg__(self) -> NHElement:
        return NHElement(self.n, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other: NHElement) -> NHElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NHElement(self.n, {w: p * other for w, p in self.terms.items()})
        return nh_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NHElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({p.render()}) D{sg.render(w)}"
                          for w, p in sorted(self.terms.items(), key=lambda t: (sg.length(t[0]), t[0])))

    def __repr__(self):
        return f"NHElement({self.n}, {self.render()!r})"


def _check(a: NHElement, b: NHElement) -> None:
    if a.n != b.n:
        raise ValueError(f"strand-count mismatch: NH_{a.n} vs NH_{b.n}")


def divided_difference(i: int, p: Poly) -> Poly:
    """The operator Delta_i = (f - s_i f)/(x_i - x_{i+1})."""
    return p.divided_difference(i)


# ----------------------------------------------------------------------
# multiplication engine

@lru_cache(maxsize=None)
def _d_times_monomial(u: Perm, e: Exps) -> tuple[tuple[Perm, tuple[tuple[Exps, int], ...]], ...]:
    """Normal form of ``D_u * x^e`` as ((w, terms), ...)."""
    n = len(u)
    word = sg.reduced_word(u)
    if not word:
        return ((u, ((e, 1),)),)
    i = word[0]
    rest = sg.mul(sg.s(n, i), u)
    inner = _d_times_monomial(rest, e)
    acc: dict[Perm, dict[Exps, int]] = {}
    for w, terms in inner:
        tdict = dict(terms)
        # D_i (r D_w) = s_i(r) D_i D_w + Delta_i(r) D_w
        longer = sg.mul(sg.s(n, i), w)
        if sg.length(longer) > sg.length(w):
            tgt = acc.setdefault(longer, {})
            for ex, c in tdict.items():
                key = list(ex)
                key[i - 1], key[i] = key[i], key[i - 1]
                _acc(tgt, tuple(key), c)
        dd = divided_difference_terms(tdict, i)
        if dd:
            tgt = acc.setdefault(w, {})
            for ex, c in dd.items():
                _acc(tgt, ex, c)
    return tuple((w, tuple(sorted(t.items()))) for w, t in acc.items() if t)


def _acc(tgt: dict, key, c: int) -> None:
    v = tgt.get(key, 0) + c
    if v:
        tgt[key] = v
    else:
        tgt.pop(key, None)


@lru_cache(maxsize=None)
def _perm_product(u: Perm, v: Perm) -> Perm | None:
    return sg.mul_length_additive(u, v)


def nh_mul(a: NHElement, b: NHElement) -> NHElement:
    """Product in NH_n, returned in PBW normal form."""
    _check(a, b)
    acc: dict[Perm, dict[Exps, int]] = {}
    for u, p in a.terms.items():
        for v, qpoly in b.terms.items():
            for eq, cq in qpoly.terms.items():
                for w, terms in _d_times_monomial(u, eq):
                    wv = _perm_product(w, v)
                    if wv is None:
                        continue
                    tgt = acc.setdefault(wv, {})
                    for er, cr in terms:
                        for ep, cp in p.terms.items():
                            _acc(tgt, tuple(x + y for x, y in zip(ep, er)), cp * cq * cr)
    return NHElement._raw(a.n, acc)


def product(*elements: NHElement) -> NHElement:
    out = elements[0]
    for el in elements[1:]:
        out = out * el
    return out


# ----------------------------------------------------------------------
# algebra structure

def psi(a: NHElement) -> NHElement:
    """Anti-automorphism fixing every x_i and D_i: p D_w -> D_{w^-1} p."""
    out = NHElement.zero(a.n)
    for w, p in a.terms.items():
        out = out + NHElement.d_perm(sg.inverse(w)) * NHElement.poly(p)
    return out


def staircase(n: int) -> Exps:
    return tuple(n - i for i in range(1, n + 1))


@lru_cache(maxsize=None)
def idempotent_e(n: int) -> NHElement:
    """e_n = x_1^{n-1} x_2^{n-2} ... x_{n-1} D_{w_0}."""
    if n < 0:
        raise ValueError("idempotent_e needs n >= 0")
    if n == 0:
        return NHElement.one(0)
    return NHElement.d_perm(sg.longest_element(n), Poly.monomial(staircase(n)))


def embed(a: NHElement, n_total: int, offset: int) -> NHElement:
    """Relabel x_i -> x_{i+offset}, D_i -> D_{i+offset} inside NH_{n_total}."""
    if offset < 0 or offset + a.n > n_total:
        raise ValueError(f"cannot place NH_{a.n} at offset {offset} inside NH_{n_total}")
    return NHElement(n_total, {sg.embed(w, n_total, offset): p.embed(n_total, offset)
                               for w, p in a.terms.items()})


def last_idempotent(k: int, n: int) -> NHElement:
    """e_k placed on the last k of n strands."""
    return embed(idempotent_e(k), n, n - k)


def check_idem_recursion(k: int, offset: int = 1) -> bool:
    """Compare e_k with x_1...x_{k-1} D_{k-1}...D_1 e_{k-1}.

    ``e_{k-1}`` is placed at the given strand offset; the identity holds for
    offset 1 (the last k-1 strands) and fails for offset 0 once k >= 3.
    """
    if k < 2:
        raise ValueError("check_idem_recursion needs k >= 2")
    xs = NHElement.poly(Poly.monomial((1,) * (k - 1) + (0,)))
    ds = NHElement.d_word(k, range(k - 1, 0, -1))
    rhs = xs * ds * embed(idempotent_e(k - 1), k, offset)
    return rhs == idempotent_e(k)


def check_vanishing(n: int, k: int) -> bool:
    """Vanishing/non-vanishing of D_{w_0(k)} on the last k of n+1 strands times D's.

    The product with D_i is zero for n+2-k <= i <= n and the product with
    D_r D_{r+1} ... D_n is nonzero for 1 <= r <= n+1-k.
    """
    if not 1 <= k <= n + 1:
        raise ValueError("check_vanishing needs 1 <= k <= n+1")
    top = embed(NHElement.d_perm(sg.longest_element(k)), n + 1, n + 1 - k)
    idem = last_idempotent(k, n + 1)
    for i in range(n + 2 - k, n + 1):
        if not (top * NHElement.d(n + 1, i)).is_zero():
            return False
        if not (idem * NHElement.d_word(n + 1, range(i, n + 1))).is_zero():
            return False
    for r in range(1, n + 2 - k):
        tail = NHElement.d_word(n + 1, range(r, n + 1))
        if (top * tail).is_zero() or (idem * tail).is_zero():
            return False
    return True


def check_relations(n: int) -> dict[str, bool]:
    """The defining relations of NH_n evaluated in the normal form."""
    x = [None] + [NHElement.x(n, i) for i in range(1, n + 1)]
    d = [None] + [NHElement.d(n, i) for i in range(1, n)]
    one = NHElement.one(n)
    out = {
        "x_commute": all(x[i] * x[j] == x[j] * x[i]
                         for i in range(1, n + 1) for j in range(1, n + 1)),
        "d_square": all((d[i] * d[i]).is_zero() for i in range(1, n)),
        "braid": all(d[i] * d[i + 1] * d[i] == d[i + 1] * d[i] * d[i + 1] for i in range(1, n - 1)),
        "d_far": all(d[i] * d[j] == d[j] * d[i]
                     for i in range(1, n) for j in range(1, n) if abs(i - j) > 1),
        "x_d_far": all(x[i] * d[j] == d[j] * x[i]
                       for i in range(1, n + 1) for j in range(1, n) if j not in (i - 1, i)),
        "slide_left": all(x[i] * d[i] - d[i] * x[i + 1] == one for i in range(1, n)),
        "slide_right": all(d[i] * x[i] - x[i + 1] * d[i] == one for i in range(1, n)),
    }
    return out


# ----------------------------------------------------------------------
# factorizations against the subalgebra NH_n (x) NH_m of NH_{n+m}

def in_parabolic(a: NHElement, n: int) -> bool:
    return all(sg.in_young_subgroup(w, n, a.n - n) for w in a.terms)


def _lead_substitution(v: Perm) -> Perm:
    """Permutation sigma with D_v * f = f(x_sigma) D_v + shorter terms.

    Read off from D_v * x_j for each j, so no sign convention is assumed.
    """
    n = len(v)
    sigma = []
    for j in range(1, n + 1):
        lead = (NHElement.d_perm(v) * NHElement.x(n, j)).terms[v]
        (e,) = lead.terms
        sigma.append(e.index(1) + 1)
    return tuple(sigma)


_lead_cache: dict[Perm, Perm] = {}


def decompose_left(a: NHElement, n: int) -> dict[Perm, NHElement]:
    """Write ``a = sum_v D_v * h_v`` with v minimal in v(S_n x S_m) and h_v in NH_n (x) NH_m.

    Proceeds by eliminating a longest PBW term at each step.
    """
    N = a.n
    m = N - n
    if not 0 <= n <= N:
        raise ValueError(f"bad split ({n}, {m}) of NH_{N}")
    rest = a
    out: dict[Perm, NHElement] = {}
    while rest:
        w = max(rest.terms, key=lambda t: (sg.length(t), t))
        p = rest.terms[w]
        v, u = sg.factor_left(w, n)
        sigma = _lead_cache.get(v)
        if sigma is None:
            sigma = _lead_cache[v] = _lead_substitution(v)
        f = p.permute(sg.inverse(sigma))
        h = NHElement.d_perm(u, f)
        rest = rest - NHElement.d_perm(v) * h
        out[v] = out[v] + h if v in out else h
    return {v: h for v, h in out.items() if h}


def recombine_left(parts: Mapping[Perm, NHElement]) -> NHElement:
    items = list(parts.items())
    if not items:
        raise ValueError("nothing to recombine")
    N = items[0][1].n
    out = NHElement.zero(N)
    for v, h in items:
        out = out + NHElement.d_perm(v) * h
    return out


def decompose_right(a: NHElement, n: int) -> dict[Perm, NHElement]:
    """Write ``a = sum_r h_r * D_r`` with r minimal in (S_n x S_m) r."""
    out: dict[Perm, dict[Perm, Poly]] = {}
    for w, p in a.terms.items():
        v, u = sg.factor_left(sg.inverse(w), n)
        r, u = sg.inverse(v), sg.inverse(u)
        out.setdefault(r, {})[u] = p
    return {r: NHElement(a.n, t) for r, t in out.items()}


def recombine_right(parts: Mapping[Perm, NHElement]) -> NHElement:
    items = list(parts.items())
    N = items[0][1].n
    out = NHElement.zero(N)
    for r, h in items:
        out = out + h * NHElement.d_perm(r)
    return out


# ----------------------------------------------------------------------
# random elements for property tests

def random_poly(rng: random.Random, n: int, degree: int, terms: int = 2, coeff: int = 3) -> Poly:
    """Random homogeneous polynomial of the given total degree (|x| counted once)."""
    out = Poly.zero(n)
    if n == 0:
        return Poly.const(0, rng.randint(1, coeff)) if degree == 0 else out
    for _ in range(terms):
        e = [0] * n
        for _ in range(degree):
            e[rng.randrange(n)] += 1
        c = rng.randint(-coeff, coeff) or 1
        out = out + Poly.monomial(e, c)
    return out


def random_homogeneous(rng: random.Random, n: int, degree: int, terms: int = 2,
                       max_poly_degree: int = 4) -> NHElement:
    """Random element of NH_n homogeneous of the given (even) degree."""
    perms = sg.all_perms(n)
    out = NHElement.zero(n)
    candidates = [w for w in perms
                  if 0 <= (degree // 2 + sg.length(w)) <= max_poly_degree]
    if not candidates:
        return out
    for _ in range(terms):
        w = rng.choice(candidates)
        pdeg = degree // 2 + sg.length(w)
        out = out + NHElement.d_perm(w, random_poly(rng, n, pdeg))
    return out
